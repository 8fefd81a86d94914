#include "powpart/wright.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "powpart/counting.hpp"
#include "powpart/gauss_sums.hpp"
#include "powpart/series.hpp"
#include "powpart/specfun.hpp"

namespace powpart {

namespace {

constexpr double kPi = std::numbers::pi;

std::pair<long long, long long> reduce_rational(long long num, long long den) {
    const long long g = std::gcd(num, den);
    const long long d2 = den / g;
    return {(num / g) % d2, d2};
}

// Slowest decay rate over s of -Re(e^{i pi (2s+k-1)/(2k)} / tau'^{1/k}),
// times (2pi)^{(k+1)/k}/b: |g(h,l,s)| = exp(-rate * (l+mu)^{1/k}).
double min_decay_rate(int k, long long b, Complex tau_prime) {
    const Complex root = std::pow(tau_prime, 1.0 / k);
    double worst = std::numeric_limits<double>::infinity();
    for (int s = 1; s <= k; ++s) {
        const double angle = kPi * (2.0 * s + k - 1.0) / (2.0 * k);
        const double rate = -std::real(std::exp(Complex(0.0, angle)) / root);
        worst = std::min(worst, rate);
    }
    return worst * std::pow(2.0 * kPi, (k + 1.0) / k) / static_cast<double>(b);
}

} // namespace

WrightConstants wright_constants(int k, long long a, long long b) {
    if (k < 2) throw std::invalid_argument("wright_constants: k must be >= 2");
    if (b < 1 || a < 0 || a >= b)
        throw std::invalid_argument("wright_constants: need 0 <= a < b");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("wright_constants: gcd(a,b) != 1");

    WrightConstants c;
    c.k = k;
    c.a = a;
    c.b = b;
    // Least b1 with b | b1^2: take ceil(e/2) of each prime exponent of b.
    long long b1 = 1, rest = b;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (int i = 0; i < (e + 1) / 2; ++i) b1 *= p;
    }
    if (rest > 1) b1 *= rest;
    c.b1 = b1;
    c.b2 = b / b1;

    c.d.resize(static_cast<size_t>(b));
    for (long long h = 1; h <= b; ++h)
        c.d[static_cast<size_t>(h - 1)] = (a % b) * (h * h % b) % b;

    if (k % 2 == 0) {
        c.j = 0.0;
        c.omega = 1.0;
    } else {
        c.j = ((k + 1) / 2 % 2 == 0 ? 1.0 : -1.0) *
              gamma_pos(k + 1.0) * zeta(k + 1.0) /
              std::pow(2.0 * kPi, k + 1.0);
        double hd = 0.0;
        for (long long h = 1; h <= b; ++h)
            hd += static_cast<double>(h) * static_cast<double>(c.d[static_cast<size_t>(h - 1)]);
        c.omega = std::exp(kPi * (hd / (static_cast<double>(b) * b) -
                                  0.25 * static_cast<double>(b - c.b2)));
    }
    c.C = std::pow(static_cast<double>(c.b1) / (2.0 * kPi), k / 2.0) * c.omega;
    return c;
}

double mu(long long h, int s, const WrightConstants& c) {
    if (h < 1 || h > c.b) throw std::invalid_argument("mu: need 1 <= h <= b");
    if (s < 1 || s > c.k) throw std::invalid_argument("mu: need 1 <= s <= k");
    const long long dh = c.d[static_cast<size_t>(h - 1)];
    if (dh == 0) return 1.0;
    return (s % 2 == 1) ? static_cast<double>(dh) / c.b
                        : static_cast<double>(c.b - dh) / c.b;
}

Complex wright_product(int k, long long a, long long b, Complex tau_prime, long L) {
    if (tau_prime.real() <= 0.0)
        throw std::domain_error("wright_product: Re(tau') must be > 0");
    if (L < 1) throw std::invalid_argument("wright_product: L must be >= 1");
    const WrightConstants c = wright_constants(k, a, b);
    const Complex root = std::pow(tau_prime, 1.0 / k);
    const double front = std::pow(2.0 * kPi, (k + 1.0) / k) / static_cast<double>(b);

    Complex prod{1.0, 0.0};
    for (long long h = 1; h <= b; ++h) {
        const Complex hphase{0.0, -2.0 * kPi * static_cast<double>(h) / b};
        for (int s = 1; s <= k; ++s) {
            const Complex dir =
                std::exp(Complex(0.0, kPi * (2.0 * s + k - 1.0) / (2.0 * k))) / root;
            const double mu_hs = mu(h, s, c);
            for (long l = 0; l <= L; ++l) {
                const Complex g = std::exp(
                    front * std::pow(l + mu_hs, 1.0 / k) * dir + hphase);
                if (std::abs(g) >= 1.0)
                    throw std::domain_error(
                        "wright_product: divergent factor |g| >= 1 (tau' out of domain)");
                prod /= 1.0 - g;
            }
        }
    }
    return prod;
}

long choose_product_truncation(int k, long long b, Complex tau_prime, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("choose_product_truncation: tol must be > 0");
    const double c = min_decay_rate(k, b, tau_prime);
    if (c <= 0.0)
        throw std::domain_error("choose_product_truncation: no decaying regime here");
    // Want b*k*exp(-c L^{1/k}) < tol.
    const double target = std::log(static_cast<double>(b) * k / tol) / c;
    const double L = std::pow(std::max(target, 1.0), static_cast<double>(k));
    return std::max(8L, static_cast<long>(std::ceil(L)) + 1);
}

// Smallest doubling horizon whose certified tail stays under tol, plus the
// exact p_k counts to that horizon.  The local growth ratio p(n+1)/p(n)
// falls toward 1, so the last window's max ratio envelopes the tail; the
// same horizon also covers the parity series since |a_k(n)| <= p_k(n).
static std::vector<BigInt> direct_horizon(int k, double absq, double tol, const char* who) {
    const PartSetSpec spec = PartSetSpec::kth_powers(k);
    for (long N = 256; N <= (1L << 22); N *= 2) {
        std::vector<BigInt> p = count_partitions(spec, N);
        double growth = 1.0;
        for (long n = N - 8; n < N; ++n)
            growth = std::max(growth, mpz_get_d(p[static_cast<size_t>(n + 1)].get_mpz_t()) /
                                          mpz_get_d(p[static_cast<size_t>(n)].get_mpz_t()));
        const double r = growth * absq;
        if (r < 1.0) {
            const double tail = mpz_get_d(p[static_cast<size_t>(N)].get_mpz_t()) *
                                std::pow(absq, static_cast<double>(N)) * r / (1.0 - r);
            if (tail < tol) return p;
        }
    }
    throw std::domain_error(std::string(who) + ": |q| too close to 1 for the tail rule");
}

Complex powers_gf_direct(int k, Complex q, double tol) {
    if (std::abs(q) >= 1.0) throw std::domain_error("powers_gf_direct: |q| >= 1");
    if (tol <= 0.0) throw std::invalid_argument("powers_gf_direct: tol must be > 0");
    const std::vector<BigInt> p = direct_horizon(k, std::abs(q), tol, "powers_gf_direct");
    Complex acc{0.0, 0.0};
    Complex qn{1.0, 0.0};
    for (const BigInt& coeff : p) {
        acc += mpz_get_d(coeff.get_mpz_t()) * qn;
        qn *= q;
    }
    return acc;
}

Complex parity_gf_direct(int k, Complex q, double tol) {
    if (std::abs(q) >= 1.0) throw std::domain_error("parity_gf_direct: |q| >= 1");
    if (tol <= 0.0) throw std::invalid_argument("parity_gf_direct: tol must be > 0");
    const std::vector<BigInt> p = direct_horizon(k, std::abs(q), tol, "parity_gf_direct");
    const TruncatedSeries gk = expand_gk(k, static_cast<long>(p.size()) - 1);
    Complex acc{0.0, 0.0};
    Complex qn{1.0, 0.0};
    for (const BigInt& coeff : gk.coeffs) {
        acc += mpz_get_d(coeff.get_mpz_t()) * qn;
        qn *= q;
    }
    return acc;
}

static Complex transform_value(int k, long long a, long long b, Complex tau_prime,
                               long L, Complex Lambda) {
    const WrightConstants c = wright_constants(k, a, b);
    const Complex root = std::pow(tau_prime, 1.0 / k);
    return c.C * std::sqrt(tau_prime) * std::exp(c.j * tau_prime) *
           std::exp(Lambda / root) * wright_product(k, a, b, tau_prime, L);
}

Complex powers_gf_transform(int k, long long a, long long b, Complex tau_prime, long L) {
    return transform_value(k, a, b, tau_prime, L, lambda_upper_hurwitz(k, a, b));
}

Complex powers_gf_transform(int k, long long a, long long b, Complex tau_prime,
                            long L, long M) {
    return transform_value(k, a, b, tau_prime, L, lambda_upper(k, a, b, M).value);
}

Complex parity_gf_transform(int k, long long a, long long b, Complex tau_prime, long L) {
    const auto [a2, b2] = reduce_rational((1LL << (k + 1)) * a, b);
    const auto [a3, b3] = reduce_rational((1LL << k) * a, b);
    const Complex h1 = powers_gf_transform(k, a, b, tau_prime, L);
    const Complex h2 = powers_gf_transform(k, a2, b2,
                                           std::pow(2.0, k + 1.0) * tau_prime, L);
    const Complex h3 = powers_gf_transform(k, a3, b3,
                                           std::pow(2.0, static_cast<double>(k)) * tau_prime, L);
    return h1 * h2 / (h3 * h3);
}

TransformEvaluation compare_powers_transform(int k, long long a, long long b,
                                             Complex tau_prime, double tol) {
    TransformEvaluation ev;
    ev.tau_prime = tau_prime;
    ev.L = choose_product_truncation(k, b, tau_prime, tol * 1e-3);
    const Complex q = std::exp(Complex(0.0, 2.0 * kPi * static_cast<double>(a) / b) - tau_prime);
    ev.direct = powers_gf_direct(k, q, tol * 1e-3 * std::abs(std::exp(-tau_prime)));
    ev.transformed = powers_gf_transform(k, a, b, tau_prime, ev.L);
    ev.residual = std::abs(ev.transformed - ev.direct) / std::abs(ev.direct);
    return ev;
}

TransformEvaluation compare_parity_transform(int k, long long a, long long b,
                                             Complex tau_prime, double tol) {
    TransformEvaluation ev;
    ev.tau_prime = tau_prime;
    // The composed transform sees tau' scaled up to 2^{k+1} tau', where the
    // product converges slowest; pick L for that factor.
    ev.L = choose_product_truncation(k, b, std::pow(2.0, k + 1.0) * tau_prime, tol * 1e-3);
    const Complex q = std::exp(Complex(0.0, 2.0 * kPi * static_cast<double>(a) / b) - tau_prime);
    ev.direct = parity_gf_direct(k, q, tol * 1e-3 * std::abs(std::exp(-tau_prime)));
    ev.transformed = parity_gf_transform(k, a, b, tau_prime, ev.L);
    ev.residual = std::abs(ev.transformed - ev.direct) / std::abs(ev.direct);
    return ev;
}

nlohmann::ordered_json to_json(const TransformEvaluation& t) {
    nlohmann::ordered_json j;
    j["tau_prime"] = {{"re", t.tau_prime.real()}, {"im", t.tau_prime.imag()}};
    j["L"] = t.L;
    j["direct"] = {{"re", t.direct.real()}, {"im", t.direct.imag()}};
    j["transformed"] = {{"re", t.transformed.real()}, {"im", t.transformed.imag()}};
    j["residual"] = t.residual;
    return j;
}

} // namespace powpart
