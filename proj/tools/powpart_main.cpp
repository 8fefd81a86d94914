#include "powpart/cli.hpp"

int main(int argc, char** argv) { return powpart::run_main(argc, argv); }
