#include "powpart/gauss_sums.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "powpart/specfun.hpp"

namespace powpart {

namespace {

long long pow_mod(long long base, int exp, long long mod) {
    unsigned long long r = 1 % static_cast<unsigned long long>(mod);
    unsigned long long x = static_cast<unsigned long long>(((base % mod) + mod) % mod);
    for (int i = 0; i < exp; ++i)
        r = static_cast<unsigned long long>(
            (static_cast<__int128>(r) * x) % static_cast<unsigned long long>(mod));
    return static_cast<long long>(r);
}

// Exponents 2^k a / (2^k, b) mod b/(2^k, b); the reduced pair is coprime
// whenever (a, b) is.
std::pair<long long, long long> reduce_pair(long long pow2, long long a, long long b) {
    const long long g = std::gcd(pow2, b);
    const long long bb = b / g;
    const long long aa = ((pow2 / g) % bb * (a % bb)) % bb;
    return {aa, bb};
}

double exp_scale(int k) { return std::pow(2.0, -(k + 1.0) / k); }

} // namespace

Complex gauss_sum(int k, long long a, long long b) {
    if (b < 1) throw std::invalid_argument("gauss_sum: b must be >= 1");
    if (k < 1) throw std::invalid_argument("gauss_sum: k must be >= 1");
    const long long ar = ((a % b) + b) % b;
    double re = 0.0, im = 0.0;
    for (long long n = 1; n <= b; ++n) {
        const long long r = (ar * pow_mod(n, k, b)) % b;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(b);
        re += std::cos(angle);
        im += std::sin(angle);
    }
    return {re, im};
}

double stechkin_ratio(int k, long long a, long long b) {
    if (k < 2) throw std::invalid_argument("stechkin_ratio: k must be >= 2");
    if (b < 2) throw std::invalid_argument("stechkin_ratio: b must be >= 2");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("stechkin_ratio: gcd(a,b) != 1");
    return std::abs(gauss_sum(k, a, b)) /
           std::pow(static_cast<double>(b), 1.0 - 1.0 / k);
}

Truncation choose_truncation(int k, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("choose_truncation: tol must be > 0");
    const double g = gamma_pos(1.0 + 1.0 / k);
    const double m = std::pow(g * k / tol, static_cast<double>(k));
    if (m >= static_cast<double>(kTruncationCap)) return {kTruncationCap, true};
    return {std::max(1L, static_cast<long>(std::ceil(m))), false};
}

ValueWithBound lambda_upper(int k, long long a, long long b, long M) {
    if (k < 2) throw std::invalid_argument("lambda_upper: k must be >= 2");
    if (b < 1 || a < 0 || a >= b) throw std::invalid_argument("lambda_upper: need 0 <= a < b");
    if (std::gcd(a, b) != 1 && b > 1)
        throw std::invalid_argument("lambda_upper: gcd(a,b) != 1");
    if (M < 1) throw std::invalid_argument("lambda_upper: M must be >= 1");

    // S_k(ma,b) depends only on ma mod b.
    std::vector<Complex> table(static_cast<size_t>(b));
    for (long long c = 0; c < b; ++c) table[static_cast<size_t>(c)] = gauss_sum(k, c, b);

    const double expo = -(1.0 + 1.0 / k);
    Complex acc{0.0, 0.0};
    for (long m = 1; m <= M; ++m) {
        const long long c = (static_cast<long long>(m) % b) * (a % b) % b;
        acc += table[static_cast<size_t>(c)] * std::pow(static_cast<double>(m), expo);
    }
    const double g = gamma_pos(1.0 + 1.0 / k);
    ValueWithBound out;
    out.value = acc * (g / static_cast<double>(b));
    out.error_bound = g * k * std::pow(static_cast<double>(M), -1.0 / k);
    return out;
}

ValueWithBound lambda_small(int k, long long a, long long b, long M) {
    const auto [a2, b2] = reduce_pair(1LL << (k + 1), a, b);
    const auto [a3, b3] = reduce_pair(1LL << k, a, b);
    const ValueWithBound l1 = lambda_upper(k, a, b, M);
    const ValueWithBound l2 = lambda_upper(k, a2, b2, M);
    const ValueWithBound l3 = lambda_upper(k, a3, b3, M);
    const double s = exp_scale(k);
    ValueWithBound out;
    out.value = l1.value + s * l2.value - l3.value;
    out.error_bound = l1.error_bound + s * l2.error_bound + l3.error_bound;
    return out;
}

Complex lambda_upper_hurwitz(int k, long long a, long long b) {
    if (k < 2) throw std::invalid_argument("lambda_upper_hurwitz: k must be >= 2");
    if (b < 1 || a < 0 || a >= b)
        throw std::invalid_argument("lambda_upper_hurwitz: need 0 <= a < b");
    const double s = 1.0 + 1.0 / k;
    Complex acc{0.0, 0.0};
    for (long long r = 1; r <= b; ++r)
        acc += gauss_sum(k, r * a, b) *
               hurwitz_zeta(s, static_cast<double>(r) / static_cast<double>(b));
    return acc * (gamma_pos(s) * std::pow(static_cast<double>(b), -2.0 - 1.0 / k));
}

Complex lambda_small_hurwitz(int k, long long a, long long b) {
    const auto [a2, b2] = reduce_pair(1LL << (k + 1), a, b);
    const auto [a3, b3] = reduce_pair(1LL << k, a, b);
    return lambda_upper_hurwitz(k, a, b) +
           exp_scale(k) * lambda_upper_hurwitz(k, a2, b2) -
           lambda_upper_hurwitz(k, a3, b3);
}

static double divisor_sum(long long b, int power) {
    double acc = 0.0;
    for (long long d = 1; d * d <= b; ++d) {
        if (b % d != 0) continue;
        acc += std::pow(static_cast<double>(d), -power);
        const long long e = b / d;
        if (e != d) acc += std::pow(static_cast<double>(e), -power);
    }
    return acc;
}

double lambda_divisor_bound(int k, long long b) {
    if (b < 2) throw std::invalid_argument("lambda_divisor_bound: b must be >= 2");
    const double s = 1.0 + 1.0 / k;
    return 3.0 * kStechkinConstant * gamma_pos(s) * zeta(s) *
           std::pow(static_cast<double>(b), -1.0 / k) * divisor_sum(b, 1);
}

double lambda_divisor_bound_strong(int k, long long b) {
    if (b < 2) throw std::invalid_argument("lambda_divisor_bound_strong: b must be >= 2");
    const double s = 1.0 + 1.0 / k;
    return 3.0 * kStechkinConstant * gamma_pos(s) * zeta(s) *
           std::pow(static_cast<double>(b), -1.0 / k) * divisor_sum(b, k);
}

bool gauss_multiplicativity_check(int k, long long m, long long a, long long b) {
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("gauss_multiplicativity_check: gcd(a,b) != 1");
    const long long d = std::gcd(m, b);
    const Complex lhs = gauss_sum(k, m * a, b);
    const Complex rhs = static_cast<double>(d) * gauss_sum(k, (m / d) * a, b / d);
    return std::abs(lhs - rhs) <= 1e-10 * static_cast<double>(b);
}

GaussData gauss_data(int k, long long a, long long b, long M) {
    GaussData g;
    g.k = k;
    g.a = a;
    g.b = b;
    g.S = gauss_sum(k, a, b);
    g.Lambda = lambda_upper(k, a, b, M);
    g.lambda = lambda_small(k, a, b, M);
    g.M = M;
    return g;
}

nlohmann::ordered_json to_json(const GaussData& g) {
    nlohmann::ordered_json j;
    j["k"] = g.k;
    j["a"] = g.a;
    j["b"] = g.b;
    j["S"] = {{"re", g.S.real()}, {"im", g.S.imag()}};
    j["abs_S"] = std::abs(g.S);
    if (g.b >= 2 && std::gcd(g.a, g.b) == 1)
        j["stechkin_ratio"] = stechkin_ratio(g.k, g.a, g.b);
    j["M"] = g.M;
    j["Lambda"] = {{"re", g.Lambda.value.real()},
                   {"im", g.Lambda.value.imag()},
                   {"error_bound", g.Lambda.error_bound}};
    j["lambda"] = {{"re", g.lambda.value.real()},
                   {"im", g.lambda.value.imag()},
                   {"error_bound", g.lambda.error_bound}};
    if (g.b >= 2) j["divisor_bound"] = lambda_divisor_bound(g.k, g.b);
    return j;
}

} // namespace powpart
