#include "powpart/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <quadmath.h>
#include <stdexcept>

#include "powpart/series.hpp"
#include "powpart/specfun.hpp"

namespace powpart {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(1+1/k) Gamma(1/k) (1/k) 2^{-(k+1)/k} to quad precision for the
// residual measurement; plain double would bury the k=2 residuals.
__float128 B_const_q(int k) {
    switch (k) {
        case 2: return strtoflt128("0.818531739120507996556755308600695455513238", nullptr);
        case 3: return strtoflt128("1.27609727366025438670773734492653404983030", nullptr);
        default: {
            const AsymptoticModel m = asymptotic_model(k);
            return static_cast<__float128>(m.B);
        }
    }
}

__float128 mpz_to_f128(const mpz_class& v) {
    // Assemble from 64-bit limbs, most significant first; exact while the
    // value fits 113 bits, correctly rounded beyond.
    const __float128 two64 = 0x1p64;  // 2^64, exact
    const size_t limbs = mpz_size(v.get_mpz_t());
    __float128 acc = 0;
    for (size_t i = limbs; i-- > 0;)
        acc = acc * two64 + static_cast<__float128>(mpz_getlimbn(v.get_mpz_t(), i));
    return mpz_sgn(v.get_mpz_t()) < 0 ? -acc : acc;
}

} // namespace

double AsymptoticModel::beta(double delta) const {
    return 1.0 + alpha / 2.0 * (1.0 - delta / 2.0);
}

double AsymptoticModel::kappa(double c0, double delta) const {
    return std::min(k * c0, 0.5 - 0.75 * delta) / (k + 1.0);
}

double AsymptoticModel::kappa1(double c0, double delta) const {
    return std::min(k * c0 - delta / 4.0, 0.5 - delta) / (k + 1.0);
}

AsymptoticModel asymptotic_model(int k) {
    if (k < 2) throw std::invalid_argument("asymptotic_model: k must be >= 2");
    AsymptoticModel m;
    m.k = k;
    m.alpha = 1.0 / k;
    m.A = (1.0 / k) * std::pow(2.0, -(k + 1.0) / k);
    m.B = m.A * gamma_pos(m.alpha) * zeta(m.alpha + 1.0);
    const double agz = m.A * gamma_pos(m.alpha + 1.0) * zeta(m.alpha + 1.0);
    m.C_front = std::pow(std::pow(2.0, k) * (m.alpha + 1.0) * kPi, -0.5) *
                std::pow(agz, 1.0 / (2.0 * (m.alpha + 1.0)));
    m.exponent_const = (1.0 + 1.0 / m.alpha) * std::pow(agz, 1.0 / (m.alpha + 1.0));
    m.power = -(m.alpha + 2.0) / (2.0 * (m.alpha + 1.0));
    m.d0 = 0.0;
    m.d0_prime = -(k - 1.0) * std::log(2.0) / 2.0;
    return m;
}

double parity_dirichlet_series(int k, double s) {
    if (k < 2) throw std::invalid_argument("parity_dirichlet_series: k must be >= 2");
    if (s <= 1.0 / k)
        throw std::domain_error("parity_dirichlet_series: requires s > 1/k");
    return (1.0 + std::pow(2.0, -s * (k + 1)) - std::pow(2.0, 1.0 - s * k)) * zeta(k * s);
}

double saddle_y(int k, double n) {
    if (n < 1.0) throw std::invalid_argument("saddle_y: n must be >= 1");
    const AsymptoticModel m = asymptotic_model(k);
    const double agz = m.A * gamma_pos(m.alpha + 1.0) * zeta(m.alpha + 1.0);
    return std::pow(n, -1.0 / (m.alpha + 1.0)) * std::pow(agz, 1.0 / (m.alpha + 1.0));
}

MainTerm main_term(int k, double n) {
    if (n < 1.0) throw std::invalid_argument("main_term: n must be >= 1");
    const AsymptoticModel m = asymptotic_model(k);
    MainTerm t;
    t.log_value = std::log(m.C_front) + m.power * std::log(n) +
                  m.exponent_const * std::pow(n, m.alpha / (m.alpha + 1.0));
    t.value = std::exp(t.log_value);
    return t;
}

Complex log_parity_main(int k, Complex tau) {
    if (std::abs(std::arg(tau)) > kPi / 4.0 + 1e-15)
        throw std::domain_error("log_parity_main: |Arg(tau)| must be <= pi/4");
    const AsymptoticModel m = asymptotic_model(k);
    return m.B * std::pow(tau, -1.0 / k) - (k - 1.0) / 2.0 * std::log(2.0);
}

double parity_main_residual(int k, double y, long N) {
    if (y <= 0.0) throw std::invalid_argument("parity_main_residual: y must be > 0");
    if (N <= 0) {
        // |a_k(n)| <= p_k(n), so grow N until the p_k tail is below the
        // f128 noise floor of the sum (which is >= 1).
        N = 256;
        const PartSetSpec spec = PartSetSpec::kth_powers(k);
        for (;;) {
            const std::vector<BigInt> p = count_partitions(spec, N);
            const double logtail = log_big(p[static_cast<size_t>(N)]) - y * N;
            if (logtail < -90.0) break;
            N *= 2;
            if (N > (1L << 22))
                throw std::domain_error("parity_main_residual: y too small");
        }
    }
    const TruncatedSeries gk = expand_gk(k, N);
    const __float128 yq = y;
    __float128 sum = 0;
    for (long n = 0; n <= N; ++n) {
        if (mpz_sgn(gk[n].get_mpz_t()) == 0) continue;
        sum += mpz_to_f128(gk[n]) * expq(-yq * static_cast<__float128>(n));
    }
    const __float128 log_g = logq(sum);
    const __float128 main = B_const_q(k) * powq(yq, static_cast<__float128>(-1) / k) -
                            static_cast<__float128>(k - 1) * M_LN2q / 2;
    return static_cast<double>(fabsq(log_g - main));
}

double loglog_slope(const std::vector<double>& y, const std::vector<double>& r) {
    if (y.size() != r.size() || y.size() < 2)
        throw std::invalid_argument("loglog_slope: need matching lists, length >= 2");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        const double lx = std::log(y[i]);
        const double ly = std::log(r[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

EquidistResult equidistribution_ratio(const ResidueProfile& profile, long n) {
    if (profile.m != 2)
        throw std::invalid_argument("equidistribution_ratio: profile must have m = 2");
    if (n < 0 || n > profile.max_weight())
        throw std::invalid_argument("equidistribution_ratio: n out of range");
    const BigInt& p0 = profile.at(0, n);
    const BigInt& p1 = profile.at(1, n);
    const BigInt total = p0 + p1;
    EquidistResult res;
    if (total == 0) { res.ratio = 0.0; res.deviation = -0.5; return res; }
    // deviation = (p0 - p1) / (2 (p0 + p1)) keeps full accuracy near 1/2.
    mpq_class dev(p0 - p1, 2 * total);
    dev.canonicalize();
    res.deviation = dev.get_d();
    res.ratio = 0.5 + res.deviation;
    return res;
}

double log_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log_big: value must be positive");
    long expo = 0;
    const double d = mpz_get_d_2exp(&expo, v.get_mpz_t());
    return std::log(d) + static_cast<double>(expo) * std::numbers::ln2;
}

nlohmann::ordered_json to_json(const AsymptoticModel& m) {
    nlohmann::ordered_json j;
    j["k"] = m.k;
    j["alpha"] = m.alpha;
    j["A"] = m.A;
    j["B"] = m.B;
    j["C_front"] = m.C_front;
    j["exponent_const"] = m.exponent_const;
    j["power"] = m.power;
    j["D0"] = m.d0;
    j["D0_prime"] = m.d0_prime;
    // reporting defaults: delta = 1/3, c0 = 1/2
    j["beta_default"] = m.beta(1.0 / 3.0);
    j["kappa_default"] = m.kappa(0.5, 1.0 / 3.0);
    j["kappa1_default"] = m.kappa1(0.5, 1.0 / 3.0);
    return j;
}

} // namespace powpart
