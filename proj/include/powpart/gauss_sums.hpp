#ifndef POWPART_GAUSS_SUMS_HPP
#define POWPART_GAUSS_SUMS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "json.hpp"

namespace powpart {

using Complex = std::complex<double>;

// Largest observed value of |S_k(a,b)| / b^{1-1/k} over all admissible
// (k,a,b); bounds below use it to the printed precision, scans assert
// against the next digit up.
inline constexpr double kStechkinConstant = 4.709236;
inline constexpr double kStechkinAssertLimit = 4.709237;

// Complete exponential sum S_k(a,b) = sum_{n=1}^{b} e^{2 pi i a n^k / b}.
// The exponent a n^k is reduced mod b in integer arithmetic before the
// angle is formed, so each term's angle is exact to one rounding.
Complex gauss_sum(int k, long long a, long long b);

// |S_k(a,b)| / b^{1-1/k}; requires gcd(a,b) = 1, b >= 2, k >= 2.
double stechkin_ratio(int k, long long a, long long b);

struct ValueWithBound {
    Complex value;
    double error_bound = 0.0;  // certified truncation bound
};

// Truncation index for a requested tail tolerance:
// M = ceil((Gamma(1+1/k) * k / tol)^k), capped; `capped` reports that the
// cap binds (the certified bound at the returned M is then looser than tol).
struct Truncation {
    long M;
    bool capped;
};
inline constexpr long kTruncationCap = 4'000'000;
Truncation choose_truncation(int k, double tol);

// Lambda_{a,b} = Gamma(1+1/k)/b * sum_{m=1}^{M} S_k(ma,b)/m^{1+1/k}, with the
// certified tail bound Gamma(1+1/k) * k * M^{-1/k} (from |S_k| <= b and the
// integral estimate).  Requires 0 <= a < b, gcd(a,b) = 1.
ValueWithBound lambda_upper(int k, long long a, long long b, long M);

// lambda_{a,b} = Lambda_{a,b} + 2^{-(k+1)/k} Lambda_{a2,b2} - Lambda_{a3,b3},
// where (a2,b2) reduces (2^{k+1} a, b) and (a3,b3) reduces (2^k a, b) by
// their gcds, numerators mod the new denominator.  error_bound sums the
// three component bounds (middle scaled by 2^{-(k+1)/k}).
ValueWithBound lambda_small(int k, long long a, long long b, long M);

// Exact evaluation of the same series: S_k(ma,b) is periodic in m with
// period b, so
//   Lambda_{a,b} = Gamma(1+1/k) b^{-2-1/k} sum_{r=1}^{b} S_k(ra,b) zeta(1+1/k, r/b).
// Accuracy is that of the special functions (~1e-14 relative), far beyond
// any practical partial sum; used where the transform needs full precision.
Complex lambda_upper_hurwitz(int k, long long a, long long b);
Complex lambda_small_hurwitz(int k, long long a, long long b);

// Divisor-sum upper bound for |lambda_{a,b}|, b >= 2:
//   3 * A_stechkin * Gamma(1+1/k) * zeta(1+1/k) * b^{-1/k} * sum_{d|b} 1/d.
double lambda_divisor_bound(int k, long long b);
// Sharper variant with sum_{d|b} 1/d^k; violations of this one are
// reported by scans, never asserted.
double lambda_divisor_bound_strong(int k, long long b);

// Checks S_k(ma,b) = d * S_k(ma/d, b/d) with d = gcd(m,b), within
// 1e-10 * b.  Requires gcd(a,b) = 1.
bool gauss_multiplicativity_check(int k, long long m, long long a, long long b);

// Bundle for reporting.
struct GaussData {
    int k;
    long long a, b;
    Complex S;
    ValueWithBound Lambda;
    ValueWithBound lambda;
    long M;
};
GaussData gauss_data(int k, long long a, long long b, long M);
nlohmann::ordered_json to_json(const GaussData& g);

} // namespace powpart

#endif
