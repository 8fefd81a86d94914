#ifndef POWPART_WRIGHT_HPP
#define POWPART_WRIGHT_HPP

#include <complex>
#include <vector>

#include "json.hpp"

namespace powpart {

using Complex = std::complex<double>;

// Constants of the modular transformation of the k-th-power partition
// generating function at the rational point a/b:
//   b1  least positive integer with b | b1^2, b = b1*b2;
//   d_h defined by a h^2 = d_h (mod b), 0 <= d_h < b;
//   j, omega: zero resp. one for even k, the closed forms below for odd k;
//   C = (b1/2pi)^{k/2} omega.
struct WrightConstants {
    int k;
    long long a, b;
    long long b1, b2;
    std::vector<long long> d;  // d[h-1], h = 1..b
    Complex omega;
    double j;
    Complex C;
};

WrightConstants wright_constants(int k, long long a, long long b);

// mu_{h,s}: d_h/b for odd s, (b-d_h)/b for even s, and 1 when d_h = 0.
double mu(long long h, int s, const WrightConstants& c);

// The convergent triple product
//   P(tau') = prod_{h=1}^{b} prod_{s=1}^{k} prod_{l=0}^{L} (1 - g(h,l,s))^{-1},
//   g(h,l,s) = exp( (2pi)^{(k+1)/k} (l+mu_{h,s})^{1/k} e^{i pi (2s+k-1)/(2k)}
//                   / (b tau'^{1/k}) - 2 pi i h / b ).
// The s-angles pi(2s+k-1)/(2k) fill (pi/2, 3pi/2) with margin pi/(2k) on
// each side, so every factor decays for |Arg tau'| < pi/2.  Throws if
// Re(tau') <= 0 or if any retained factor has |g| >= 1 (out-of-domain input).
Complex wright_product(int k, long long a, long long b, Complex tau_prime, long L);

// L making the tail envelope b*k*exp(-c L^{1/k}) smaller than tol, with c
// the slowest factor decay rate at this tau'.
long choose_product_truncation(int k, long long b, Complex tau_prime, double tol);

// Generating function of partitions into k-th powers, summed directly:
// sum p_k(n) q^n with the truncation chosen so the tail (estimated from the
// local coefficient growth ratio) is below tol.  Requires |q| < 1.
Complex powers_gf_direct(int k, Complex q, double tol);

// Same value through the modular transformation at q = e^{2pi i a/b - tau'}:
//   C sqrt(tau') e^{j tau'} exp(Lambda_{a,b} / tau'^{1/k}) P(tau').
// Lambda comes from its exact Hurwitz-zeta form; the overload taking M uses
// the certified partial sum instead (error ~ Gamma(1+1/k) k M^{-1/k}).
Complex powers_gf_transform(int k, long long a, long long b, Complex tau_prime, long L);
Complex powers_gf_transform(int k, long long a, long long b, Complex tau_prime, long L, long M);

// Alternating parity generating function sum a_k(n) q^n, summed directly
// from the exact coefficient stream.  |a_k(n)| <= p_k(n), so the powers
// tail rule certifies the truncation.
Complex parity_gf_direct(int k, Complex q, double tol);

// Same through the three-factor composition
//   G(q) = H(q) H(q^{2^{k+1}}) / H(q^{2^k})^2
// with each factor transformed at its reduced rational point and scaled tau'.
Complex parity_gf_transform(int k, long long a, long long b, Complex tau_prime, long L);

struct TransformEvaluation {
    Complex tau_prime;
    long L = 0;
    Complex direct;
    Complex transformed;
    double residual = 0.0;  // |transformed - direct| / |direct|
};

TransformEvaluation compare_powers_transform(int k, long long a, long long b,
                                             Complex tau_prime, double tol);
TransformEvaluation compare_parity_transform(int k, long long a, long long b,
                                             Complex tau_prime, double tol);

nlohmann::ordered_json to_json(const TransformEvaluation& t);

} // namespace powpart

#endif
