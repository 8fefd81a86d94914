#include "powpart/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace powpart {

double zeta(double s) {
    if (s <= 1.0) throw std::domain_error("zeta: requires s > 1");
    return std::riemann_zeta(s);
}

double gamma_pos(double x) {
    if (x <= 0.0) throw std::domain_error("gamma_pos: requires x > 0");
    return std::tgamma(x);
}

// B_{2j} for the Euler-Maclaurin correction terms.
static const double kBernoulli2j[] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
};

double hurwitz_zeta(double s, double x) {
    if (s <= 1.0) throw std::domain_error("hurwitz_zeta: requires s > 1");
    if (!(x > 0.0) || x > 1.0) throw std::domain_error("hurwitz_zeta: requires 0 < x <= 1");

    // zeta(s,x) = sum_{n<K} (n+x)^{-s} + (K+x)^{1-s}/(s-1) + (K+x)^{-s}/2
    //             + sum_j B_{2j}/(2j)! * (s)_{2j-1} * (K+x)^{-s-2j+1}
    const int K = 18;
    double acc = 0.0;
    for (int n = 0; n < K; ++n) acc += std::pow(n + x, -s);
    const double w = K + x;
    acc += std::pow(w, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(w, -s);

    double rising = s;               // (s)_{2j-1} = s (s+1) ... (s+2j-2)
    double factorial = 2.0;          // (2j)!
    double wpow = std::pow(w, -s - 1.0);
    for (int j = 1; j <= 7; ++j) {
        acc += kBernoulli2j[j - 1] / factorial * rising * wpow;
        // advance to j+1
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        wpow /= w * w;
    }
    return acc;
}

} // namespace powpart
