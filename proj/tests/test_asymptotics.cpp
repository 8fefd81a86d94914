#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "powpart/asymptotics.hpp"
#include "powpart/gauss_sums.hpp"
#include "powpart/specfun.hpp"

using namespace powpart;
using doctest::Approx;

TEST_CASE("model constants, k = 2") {
    const AsymptoticModel m = asymptotic_model(2);
    CHECK(m.alpha == 0.5);
    CHECK(m.A == Approx(0.176776695296636881).epsilon(1e-15));
    CHECK(m.B == Approx(0.818531739120507997).epsilon(1e-14));
    CHECK(m.C_front == Approx(0.171008598581700498).epsilon(1e-13));
    CHECK(m.exponent_const == Approx(1.65370589179832599).epsilon(1e-13));
    CHECK(m.power == Approx(-5.0 / 6.0).epsilon(1e-15));
    CHECK(m.d0 == 0.0);
    CHECK(m.d0_prime == Approx(-std::numbers::ln2 / 2).epsilon(1e-15));
    CHECK_THROWS_AS(asymptotic_model(1), std::invalid_argument);
}

TEST_CASE("B equals the small-lambda constant") {
    for (int k = 2; k <= 6; ++k) {
        const AsymptoticModel m = asymptotic_model(k);
        // exact route
        CHECK(std::abs(lambda_small_hurwitz(k, 0, 1).real() - m.B) < 1e-12);
        // certified partial-sum route
        const ValueWithBound lam = lambda_small(k, 0, 1, 20000);
        CHECK(std::abs(lam.value - m.B) <= lam.error_bound + 1e-10);
    }
}

TEST_CASE("dirichlet series") {
    // closed form at k=2, s=2
    const double expected = (1.0 + std::pow(2.0, -6) - std::pow(2.0, -3)) *
                            std::pow(std::numbers::pi, 4) / 90.0;
    CHECK(parity_dirichlet_series(2, 2.0) == Approx(expected).epsilon(1e-14));
    CHECK_THROWS_AS(parity_dirichlet_series(2, 0.5), std::domain_error);
    CHECK_THROWS_AS(parity_dirichlet_series(2, 0.0), std::domain_error);

    // partial sums of the defining series converge to the closed form
    double partial = 0.0;
    const long terms = 1000000;
    for (long n = 1; n <= terms; ++n) {
        const double nk = static_cast<double>(n) * n;
        partial += 1.0 / (nk * nk);                       // n^{-ks}, ks = 4
        partial += std::pow(8.0 * nk, -2.0);              // (2^{k+1} n^k)^{-s}
        partial -= 2.0 * std::pow(4.0 * nk, -2.0);        // 2 (2^k n^k)^{-s}
    }
    CHECK(partial == Approx(parity_dirichlet_series(2, 2.0)).epsilon(1e-8));
}

TEST_CASE("saddle_y") {
    // closed value at k=2, n=1e6
    CHECK(saddle_y(2, 1e6) == Approx(5.51235297266108665e-5).epsilon(1e-12));
    // strictly decreasing in n
    CHECK(saddle_y(2, 1e4) > saddle_y(2, 2e4));
    CHECK(saddle_y(3, 1e5) > saddle_y(3, 1e6));
    // n y(n) / n^{alpha/(alpha+1)} is constant
    const double c1 = 1e4 * saddle_y(2, 1e4) / std::pow(1e4, 1.0 / 3.0);
    const double c2 = 4e6 * saddle_y(2, 4e6) / std::pow(4e6, 1.0 / 3.0);
    CHECK(c1 == Approx(c2).epsilon(1e-12));

    // stationarity: d/dy (B y^{-alpha} + n y) = 0 at the saddle
    for (int k : {2, 3, 5}) {
        const AsymptoticModel m = asymptotic_model(k);
        const double n = 5e5;
        const double y = saddle_y(k, n);
        const double h = y * 1e-5;
        auto f = [&](double t) { return m.B * std::pow(t, -m.alpha) + n * t; };
        const double deriv = (f(y + h) - f(y - h)) / (2 * h);
        CHECK(std::abs(deriv) / n < 1e-6);
    }
}

TEST_CASE("main_term") {
    const MainTerm small = main_term(2, 10.0);
    const MainTerm mid = main_term(2, 100.0);
    const MainTerm big = main_term(2, 1000.0);
    CHECK(small.log_value < mid.log_value);
    CHECK(mid.log_value < big.log_value);
    CHECK(big.value == Approx(std::exp(big.log_value)));
    CHECK_THROWS_AS(main_term(2, 0.0), std::invalid_argument);
}

TEST_CASE("log_parity_main") {
    const Complex real_val = log_parity_main(2, Complex{0.05, 0.0});
    CHECK(real_val.imag() == 0.0);
    const AsymptoticModel m = asymptotic_model(2);
    CHECK(real_val.real() ==
          Approx(m.B / std::sqrt(0.05) - 0.5 * std::numbers::ln2).epsilon(1e-14));
    CHECK_THROWS_AS(log_parity_main(2, Complex{0.1, 0.2}), std::domain_error);
}

TEST_CASE("parity main residual decays") {
    // k = 2: the residual is the composed product correction, dominated by
    // the factor at 2^{k+1} y; it decays like exp(-c (8y)^{-1/2}).
    const std::vector<double> ys{0.2, 0.1, 0.05};
    std::vector<double> rs;
    for (double y : ys) rs.push_back(parity_main_residual(2, y));
    CHECK(rs[0] < 1e-3);
    CHECK(rs[1] < rs[0]);
    CHECK(rs[2] < rs[1]);
    CHECK(loglog_slope(ys, rs) > 0.0);

    // k = 3: the linear e^{j tau} term dominates; residual ~ y/240
    for (double y : {0.2, 0.1}) {
        const double r = parity_main_residual(3, y);
        CHECK(r == Approx(y / 240.0).epsilon(0.1));
    }
}

TEST_CASE("loglog_slope") {
    const std::vector<double> y{0.2, 0.1, 0.05, 0.02};
    std::vector<double> r;
    for (double v : y) r.push_back(3.0 * std::pow(v, 1.7));
    CHECK(loglog_slope(y, r) == Approx(1.7).epsilon(1e-12));
    CHECK_THROWS_AS(loglog_slope({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("equidistribution ratio") {
    const ResidueProfile prof = count_by_parts_mod(PartSetSpec::kth_powers(2), 2, 2001);
    const EquidistResult at0 = equidistribution_ratio(prof, 0);
    CHECK(at0.ratio == 1.0);  // only the empty partition, zero parts

    // deviation sign follows the parity of n once a_2(n) > 0
    const EquidistResult even = equidistribution_ratio(prof, 2000);
    const EquidistResult odd = equidistribution_ratio(prof, 2001);
    CHECK(even.deviation > 0.0);
    CHECK(odd.deviation < 0.0);
    CHECK(std::abs(even.deviation) < 1e-4);
    CHECK(even.ratio == Approx(0.5).epsilon(1e-6));

    CHECK_THROWS_AS(equidistribution_ratio(prof, 5000), std::invalid_argument);
}

TEST_CASE("beta window") {
    for (int k = 2; k <= 6; ++k) {
        const AsymptoticModel m = asymptotic_model(k);
        for (double delta : {0.01, 1.0 / 3.0, 0.55, 0.65}) {
            const double beta = m.beta(delta);
            CHECK(beta > (3.0 * k + 1) / (3.0 * k));
            CHECK(beta < (2.0 * k + 1) / (2.0 * k));
        }
    }
}

TEST_CASE("error exponent family") {
    const AsymptoticModel m = asymptotic_model(2);
    // kappa1 -> 1/6 as delta -> 0 with c0 -> 1
    CHECK(m.kappa1(1.0, 1e-9) == Approx(1.0 / 6.0).epsilon(1e-6));
    CHECK(m.kappa(1.0, 1e-9) == Approx(1.0 / 6.0).epsilon(1e-6));
    CHECK(m.kappa1(0.5, 1.0 / 3.0) < m.kappa1(1.0, 1e-9));
}

TEST_CASE("log_big") {
    BigInt v = 1;
    v <<= 100;
    CHECK(log_big(v) == Approx(100 * std::numbers::ln2).epsilon(1e-14));
    v = 12345;
    CHECK(log_big(v) == Approx(std::log(12345.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_big(BigInt(0)), std::invalid_argument);
}
