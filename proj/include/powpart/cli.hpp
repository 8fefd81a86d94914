#ifndef POWPART_CLI_HPP
#define POWPART_CLI_HPP

#include <map>
#include <string>
#include <vector>

namespace powpart {

// Resolved configuration of one CLI experiment.  Every report embeds the
// full config so a run can be reproduced from its own output.
struct RunConfig {
    std::string command;  // count, parity, equidist, convolution, glaisher,
                          // gauss, gauss.scan, lambda, wright.check,
                          // asym.compare, asym.lemma1, explore
    std::string spec_text = "powers:k=2";
    long N = 0;
    int m = 1;
    int k = 2;
    long long a = 0;
    long long b = 1;
    long M = 0;  // 0: choose from tolerance rule
    long L = 0;  // 0: choose from tail rule
    double tau_re = 0.2;
    double tau_im = 0.0;
    int kmax = 6;
    long long bmax = 300;
    std::vector<long> n_list;
    std::vector<double> y_list;
    std::map<std::string, double> tolerances;
    bool report_only = false;
    std::string output = "json";  // json | csv
    std::string output_path;      // empty: stdout
    int threads = 1;
};

// Runs the experiment; writes the report to config.output_path (or stdout).
// Exit status: 0 all assertions passed, 1 an assertion failed (the report
// names it and carries the smallest counterexample), 2 configuration or
// domain error.
int run(const RunConfig& config);

// Full command-line front end (argument parsing + run).
int run_main(int argc, const char* const* argv);

} // namespace powpart

#endif
