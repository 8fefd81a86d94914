#ifndef POWPART_ASYMPTOTICS_HPP
#define POWPART_ASYMPTOTICS_HPP

#include <complex>
#include <gmpxx.h>

#include "powpart/counting.hpp"
#include "json.hpp"

namespace powpart {

using Complex = std::complex<double>;

// Closed-form constants of the saddle-point main term for the parity
// coefficients a_k(n):
//   alpha = 1/k,     A = (1/k) 2^{-(k+1)/k},    B = A Gamma(alpha) zeta(alpha+1),
//   main term  C_front n^{power} exp(exponent_const n^{alpha/(alpha+1)}),
//   C_front = (2^k (alpha+1) pi)^{-1/2} (A Gamma(alpha+1) zeta(alpha+1))^{1/(2(alpha+1))},
//   exponent_const = (1+1/alpha) (A Gamma(alpha+1) zeta(alpha+1))^{1/(alpha+1)},
//   power = -(alpha+2)/(2(alpha+1)).
// d0/d0_prime are the attached Dirichlet series' value and derivative at 0.
struct AsymptoticModel {
    int k;
    double alpha;
    double A;
    double B;
    double C_front;
    double exponent_const;
    double power;
    double d0;        // 0
    double d0_prime;  // -(k-1) log 2 / 2

    // beta = 1 + alpha/2 (1 - delta/2), the arc-splitting exponent.
    double beta(double delta) const;
    // Error exponents of the main-term remainder family.
    double kappa(double c0, double delta) const;
    double kappa1(double c0, double delta) const;
};

AsymptoticModel asymptotic_model(int k);

// D_k(s) = (1 + 2^{-s(k+1)} - 2^{1-sk}) zeta(ks), convergent for s > 1/k.
double parity_dirichlet_series(int k, double s);

// Saddle radius y(n) = n^{-1/(alpha+1)} (A Gamma(alpha+1) zeta(alpha+1))^{1/(alpha+1)};
// the derivative of B y^{-alpha} + n y vanishes there.
double saddle_y(int k, double n);

// Main term evaluated in log space; value is +inf if not representable.
struct MainTerm {
    double log_value;
    double value;
};
MainTerm main_term(int k, double n);

// Leading form of log G_k(e^{-tau}): B tau^{-1/k} - (k-1)/2 log 2, principal
// branch.  Valid (and enforced) only for |Arg(tau)| <= pi/4.
Complex log_parity_main(int k, Complex tau);

// Residual |log sum a_k(n) e^{-yn} - (B y^{-1/k} - (k-1)/2 log 2)| evaluated
// in quad precision; for even k it decays like exp(-c y^{-1/k}) and falls
// through the double-precision noise floor as y shrinks.  N = 0 picks a
// truncation from the tail rule.
double parity_main_residual(int k, double y, long N = 0);

// Least-squares slope of log r against log y.
double loglog_slope(const std::vector<double>& y, const std::vector<double>& r);

// Exact-count ratio p_S(0,2,n)/p_S(n) and its deviation from 1/2, computed
// from the big-integer table through exact rationals.
struct EquidistResult {
    double ratio;
    double deviation;  // ratio - 1/2, with full relative accuracy
};
EquidistResult equidistribution_ratio(const ResidueProfile& profile, long n);

// log of a positive big integer with ~1e-16 relative accuracy.
double log_big(const BigInt& v);

nlohmann::ordered_json to_json(const AsymptoticModel& m);

} // namespace powpart

#endif
