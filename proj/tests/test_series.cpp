#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "powpart/counting.hpp"
#include "powpart/series.hpp"
#include "oracles.hpp"

using namespace powpart;

static std::vector<long> to_longs(const TruncatedSeries& s) {
    std::vector<long> out;
    for (const auto& c : s.coeffs) out.push_back(c.get_si());
    return out;
}

TEST_CASE("series_one") {
    CHECK(to_longs(series_one(0)) == std::vector<long>{1});
    CHECK(to_longs(series_one(3)) == std::vector<long>{1, 0, 0, 0});
    CHECK_THROWS_AS(series_one(-1), std::invalid_argument);

    // multiplying the identity by factors equals expanding the factors alone
    const TruncatedSeries via_one = apply_binomial_factor(series_one(5), 2, -1);
    const TruncatedSeries direct = expand_factored_product({{2, -1}}, 5);
    CHECK(via_one == direct);
}

TEST_CASE("apply_binomial_factor basic") {
    const TruncatedSeries one = series_one(3);
    CHECK(to_longs(apply_binomial_factor(one, 1, -1)) == std::vector<long>{1, 1, 1, 1});

    TruncatedSeries s = series_one(3);
    s.coeffs = {BigInt(1), BigInt(1), BigInt(1), BigInt(1)};
    CHECK(to_longs(apply_binomial_factor(s, 2, 1)) == std::vector<long>{1, 1, 0, 0});

    CHECK_THROWS_AS(apply_binomial_factor(one, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(apply_binomial_factor(one, 2, 0), std::invalid_argument);
}

TEST_CASE("apply_binomial_factor inverse round trip") {
    std::mt19937 rng(12345);
    for (int rep = 0; rep < 50; ++rep) {
        TruncatedSeries s = series_one(24);
        for (auto& c : s.coeffs) c = static_cast<long>(rng() % 41) - 20;
        const long e = 1 + static_cast<long>(rng() % 5);
        const long c = (rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 2));
        const TruncatedSeries back =
            apply_binomial_factor(apply_binomial_factor(s, e, c), e, -c);
        CHECK(back == s);
    }
}

TEST_CASE("expand_factored_product examples") {
    // squares <= 4
    CHECK(to_longs(expand_factored_product({{1, -1}, {4, -1}}, 4)) ==
          std::vector<long>{1, 1, 1, 1, 2});
    // all parts: coefficient of q^4 is p(4) = 5
    const TruncatedSeries p =
        expand_factored_product({{1, -1}, {2, -1}, {3, -1}, {4, -1}}, 4);
    CHECK(p[4] == 5);
    // empty product
    CHECK(to_longs(expand_factored_product({}, 2)) == std::vector<long>{1, 0, 0});
}

TEST_CASE("expand_factored_product is order independent") {
    std::vector<SeriesFactor> factors = {{1, -1}, {4, -1}, {9, -1}, {2, 2}, {6, -2}, {3, 1}};
    const TruncatedSeries ref = expand_factored_product(factors, 30);
    std::mt19937 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        std::shuffle(factors.begin(), factors.end(), rng);
        CHECK(expand_factored_product(factors, 30) == ref);
    }
}

TEST_CASE("geometric factors match enumeration") {
    for (int k = 1; k <= 3; ++k) {
        const long N = 40;
        std::vector<SeriesFactor> factors;
        for (long long e : oracle::kth_powers_upto(k, N)) factors.push_back({e, -1});
        const TruncatedSeries s = expand_factored_product(factors, N);
        for (long n = 0; n <= N; ++n)
            CHECK(s[n] == oracle::count(oracle::kth_powers_upto(k, n ? n : 1), n));
    }
}

TEST_CASE("expand_gk small cases") {
    CHECK(to_longs(expand_gk(2, 1)) == std::vector<long>{1, 1});
    CHECK(expand_gk(2, 4)[4] == 0);
    for (int k = 1; k <= 5; ++k) CHECK(expand_gk(k, 0)[0] == 1);
}

TEST_CASE("expand_gk equals signed parity difference") {
    for (int k : {2, 3, 4}) {
        const long N = 200;
        const TruncatedSeries gk = expand_gk(k, N);
        const ResidueProfile prof = count_by_parts_mod(PartSetSpec::kth_powers(k), 2, N);
        for (long n = 0; n <= N; ++n) {
            BigInt expected = prof.at(0, n) - prof.at(1, n);
            if (n % 2 != 0) expected = -expected;
            CHECK(gk[n] == expected);
        }
    }
}

TEST_CASE("factored product equals partition DP") {
    for (int k = 1; k <= 4; ++k) {
        const long N = 120;
        std::vector<SeriesFactor> factors;
        for (long long e : oracle::kth_powers_upto(k, N)) factors.push_back({e, -1});
        const TruncatedSeries s = expand_factored_product(factors, N);
        const std::vector<BigInt> p = count_partitions(PartSetSpec::kth_powers(k), N);
        for (long n = 0; n <= N; ++n) CHECK(s[n] == p[static_cast<size_t>(n)]);
    }
}

TEST_CASE("series json round trip") {
    const TruncatedSeries s = expand_factored_product({{1, -1}, {2, -1}, {3, -1}}, 64);
    const TruncatedSeries back = series_from_json(to_json(s));
    CHECK(back == s);
    CHECK(to_json(s)["order"] == 64);
    CHECK(to_json(s)["coeffs"][0] == "1");
}
