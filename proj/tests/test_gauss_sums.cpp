#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "powpart/gauss_sums.hpp"
#include "powpart/specfun.hpp"

using namespace powpart;
using doctest::Approx;

TEST_CASE("hurwitz zeta") {
    CHECK(hurwitz_zeta(2.0, 1.0) == Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-14));
    for (double s : {1.2, 1.5, 1.75, 2.0, 3.0}) {
        CHECK(hurwitz_zeta(s, 1.0) == Approx(zeta(s)).epsilon(1e-13));
        CHECK(hurwitz_zeta(s, 0.5) ==
              Approx((std::pow(2.0, s) - 1.0) * zeta(s)).epsilon(1e-13));
        // splitting into residue classes mod 3 reassembles zeta
        const double sum3 = hurwitz_zeta(s, 1.0 / 3) + hurwitz_zeta(s, 2.0 / 3) +
                            hurwitz_zeta(s, 1.0);
        CHECK(std::pow(3.0, -s) * sum3 == Approx(zeta(s)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(hurwitz_zeta(0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 1.5), std::domain_error);
}

TEST_CASE("gauss_sum basics") {
    for (int k : {2, 3, 5}) CHECK(std::abs(gauss_sum(k, 7, 1) - Complex{1, 0}) < 1e-15);
    CHECK(std::abs(gauss_sum(2, 1, 2)) < 1e-14);              // -1 + 1
    CHECK(std::abs(gauss_sum(2, 1, 4) - Complex{2, 2}) < 1e-13);
    CHECK_THROWS_AS(gauss_sum(2, 1, 0), std::invalid_argument);

    // |S| <= b and conjugate symmetry S_k(b-a, b) = conj(S_k(a, b))
    for (long long b = 2; b <= 40; ++b)
        for (long long a = 1; a < b; ++a) {
            const Complex s = gauss_sum(2, a, b);
            CHECK(std::abs(s) <= b + 1e-9);
            CHECK(std::abs(s - std::conj(gauss_sum(2, b - a, b))) < 1e-10);
        }
}

TEST_CASE("stechkin_ratio") {
    CHECK(stechkin_ratio(2, 1, 4) == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(stechkin_ratio(2, 1, 2) == Approx(0.0).scale(1).epsilon(1e-12));
    CHECK_THROWS_AS(stechkin_ratio(2, 2, 4), std::invalid_argument);
    for (int k = 2; k <= 4; ++k)
        for (long long b = 2; b <= 60; ++b)
            for (long long a = 1; a < b; ++a)
                if (std::gcd(a, b) == 1)
                    CHECK(stechkin_ratio(k, a, b) <= kStechkinAssertLimit);
}

TEST_CASE("choose_truncation") {
    const Truncation t = choose_truncation(2, 1e-2);
    CHECK_FALSE(t.capped);
    const double g = gamma_pos(1.5);
    CHECK(t.M == static_cast<long>(std::ceil(std::pow(g * 2 / 1e-2, 2.0))));
    CHECK(choose_truncation(2, 1e-9).capped);
    CHECK(choose_truncation(2, 1e-9).M == kTruncationCap);
    CHECK_THROWS_AS(choose_truncation(2, 0.0), std::invalid_argument);
}

TEST_CASE("lambda_upper rejects bad input") {
    CHECK_THROWS_AS(lambda_upper(2, 2, 4, 100), std::invalid_argument);   // gcd != 1
    CHECK_THROWS_AS(lambda_upper(2, 5, 4, 100), std::invalid_argument);   // a >= b
    CHECK_THROWS_AS(lambda_upper(2, 0, 1, 0), std::invalid_argument);     // M < 1
    CHECK_THROWS_AS(lambda_upper(1, 0, 1, 10), std::invalid_argument);    // k < 2
}

TEST_CASE("lambda_upper at (0,1)") {
    for (int k = 2; k <= 6; ++k) {
        const double s = 1.0 + 1.0 / k;
        const ValueWithBound l = lambda_upper(k, 0, 1, 40000);
        CHECK(std::abs(l.value.imag()) < 1e-12);
        CHECK(std::abs(l.value.real() - gamma_pos(s) * zeta(s)) <= l.error_bound);
        // certified bound scale: bound(M 2^k) = bound(M)/2
        CHECK(lambda_upper(k, 0, 1, 100 << k).error_bound ==
              Approx(lambda_upper(k, 0, 1, 100).error_bound / 2).epsilon(1e-12));
    }
}

TEST_CASE("lambda_upper odd terms vanish at (1,2), k=2") {
    // S_2(m,2) = 0 for odd m, so truncating at 2M and 2M+1 agree exactly
    const ValueWithBound a = lambda_upper(2, 1, 2, 2000);
    const ValueWithBound b = lambda_upper(2, 1, 2, 2001);
    CHECK(std::abs(a.value - b.value) < 1e-15);
}

TEST_CASE("lambda_upper self consistency") {
    for (int k : {2, 3})
        for (auto [a, b] : std::vector<std::pair<long long, long long>>{
                 {0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 5}}) {
            const ValueWithBound m1 = lambda_upper(k, a, b, 5000);
            const ValueWithBound m2 = lambda_upper(k, a, b, 10000);
            CHECK(std::abs(m1.value - m2.value) <= m1.error_bound);
        }
}

TEST_CASE("hurwitz route within certified bound of partial sums") {
    for (int k : {2, 3, 4})
        for (auto [a, b] : std::vector<std::pair<long long, long long>>{
                 {0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 7}}) {
            const ValueWithBound part = lambda_upper(k, a, b, 20000);
            const Complex exact = lambda_upper_hurwitz(k, a, b);
            CHECK(std::abs(part.value - exact) <= part.error_bound);
            const ValueWithBound sp = lambda_small(k, a, b, 20000);
            const Complex se = lambda_small_hurwitz(k, a, b);
            CHECK(std::abs(sp.value - se) <= sp.error_bound);
        }
}

TEST_CASE("lambda_small closed form at (0,1)") {
    for (int k = 2; k <= 6; ++k) {
        const double scale = std::pow(2.0, -(k + 1.0) / k);
        const ValueWithBound lam = lambda_small(k, 0, 1, 20000);
        const ValueWithBound Lam = lambda_upper(k, 0, 1, 20000);
        // lambda_{0,1} = 2^{-(k+1)/k} Lambda_{0,1} by construction here
        CHECK(std::abs(lam.value - scale * Lam.value) < 1e-14);
        // residue identity A Gamma(1/k) zeta(1+1/k), with A = (1/k) 2^{-(k+1)/k}
        const double closed =
            (1.0 / k) * scale * gamma_pos(1.0 / k) * zeta(1.0 + 1.0 / k);
        CHECK(std::abs(lam.value - closed) <= lam.error_bound + 1e-12);
        CHECK(std::abs(lambda_small_hurwitz(k, 0, 1).real() - closed) < 1e-12);
    }
    // numeric spot value for k = 2
    CHECK(lambda_small_hurwitz(2, 0, 1).real() == Approx(0.8186).epsilon(1e-3));
}

TEST_CASE("divisor bound") {
    // prime b: divisor sum = 1 + 1/p
    const double s = 1.5;
    const double expected7 = 3.0 * kStechkinConstant * gamma_pos(s) * zeta(s) *
                             std::pow(7.0, -0.5) * (1.0 + 1.0 / 7.0);
    CHECK(lambda_divisor_bound(2, 7) == Approx(expected7).epsilon(1e-14));
    const double expected2 = 3.0 * kStechkinConstant * gamma_pos(s) * zeta(s) *
                             std::pow(2.0, -0.5) * 1.5;
    CHECK(lambda_divisor_bound(2, 2) == Approx(expected2).epsilon(1e-14));
    CHECK(lambda_divisor_bound_strong(2, 2) <= lambda_divisor_bound(2, 2));
    CHECK_THROWS_AS(lambda_divisor_bound(2, 1), std::invalid_argument);
}

TEST_CASE("lambda magnitudes below the divisor bound") {
    int strong_violations = 0;
    for (int k : {2, 3})
        for (long long b = 2; b <= 60; ++b)
            for (long long a = 0; a < b; ++a) {
                if (std::gcd(a, b) != 1) continue;
                const ValueWithBound lam = lambda_small(k, a, b, 4000);
                const double size = std::abs(lam.value) + lam.error_bound;
                CHECK(size <= lambda_divisor_bound(k, b));
                if (size > lambda_divisor_bound_strong(k, b)) ++strong_violations;
            }
    // the sharper proof-level form is reported, never asserted
    MESSAGE("strong-form exceedances observed: ", strong_violations);
}

TEST_CASE("gauss multiplicativity") {
    CHECK(gauss_multiplicativity_check(2, 1, 1, 7));  // d = 1, identity
    // d = 2: S_2(2,4) vs 2 S_2(1,2)
    CHECK(gauss_multiplicativity_check(2, 2, 1, 4));
    CHECK_THROWS_AS(gauss_multiplicativity_check(2, 2, 2, 4), std::invalid_argument);

    std::mt19937 rng(99);
    for (int rep = 0; rep < 300; ++rep) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const long long b = 2 + static_cast<long long>(rng() % 199);
        long long a = 1 + static_cast<long long>(rng() % (b - 1));
        while (std::gcd(a, b) != 1) a = 1 + static_cast<long long>(rng() % (b - 1));
        const long long m = 1 + static_cast<long long>(rng() % 50);
        CHECK(gauss_multiplicativity_check(k, m, a, b));
    }
}

TEST_CASE("gauss_data json") {
    const GaussData g = gauss_data(2, 1, 4, 2000);
    const auto j = to_json(g);
    CHECK(j["k"] == 2);
    CHECK(j["abs_S"].get<double>() == Approx(std::sqrt(8.0)).epsilon(1e-12));
    CHECK(j["Lambda"].contains("error_bound"));
    CHECK(j["divisor_bound"].get<double>() > 0.0);
}
