#include "powpart/series.hpp"

#include <stdexcept>
#include <string>

namespace powpart {

TruncatedSeries series_one(long order) {
    if (order < 0) throw std::invalid_argument("series_one: order must be >= 0");
    TruncatedSeries s;
    s.coeffs.assign(static_cast<size_t>(order) + 1, BigInt(0));
    s.coeffs[0] = 1;
    return s;
}

// Multiply in place by (1 - q^e): c[n] -= c[n-e], descending n.
static void mul_one_minus_qe(std::vector<BigInt>& c, long e) {
    for (long n = static_cast<long>(c.size()) - 1; n >= e; --n)
        c[static_cast<size_t>(n)] -= c[static_cast<size_t>(n - e)];
}

// Divide in place by (1 - q^e): c[n] += c[n-e], ascending n.
static void div_one_minus_qe(std::vector<BigInt>& c, long e) {
    const long N = static_cast<long>(c.size()) - 1;
    for (long n = e; n <= N; ++n)
        c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - e)];
}

TruncatedSeries apply_binomial_factor(const TruncatedSeries& s, long e, long c) {
    if (e < 1) throw std::invalid_argument("apply_binomial_factor: exponent must be >= 1");
    if (c == 0) throw std::invalid_argument("apply_binomial_factor: power must be nonzero");
    TruncatedSeries out = s;
    if (e > out.order()) return out;
    if (c > 0)
        for (long i = 0; i < c; ++i) mul_one_minus_qe(out.coeffs, e);
    else
        for (long i = 0; i < -c; ++i) div_one_minus_qe(out.coeffs, e);
    return out;
}

TruncatedSeries expand_factored_product(const std::vector<SeriesFactor>& factors, long N) {
    TruncatedSeries s = series_one(N);
    for (const auto& f : factors) {
        if (f.exponent < 1)
            throw std::invalid_argument("expand_factored_product: exponent must be >= 1");
        if (f.power == 0)
            throw std::invalid_argument("expand_factored_product: power must be nonzero");
        if (f.exponent > N) continue;  // contributes only above order N
        if (f.power > 0)
            for (long i = 0; i < f.power; ++i) mul_one_minus_qe(s.coeffs, f.exponent);
        else
            for (long i = 0; i < -f.power; ++i) div_one_minus_qe(s.coeffs, f.exponent);
    }
    return s;
}

TruncatedSeries expand_gk(int k, long N) {
    if (k < 1) throw std::invalid_argument("expand_gk: k must be >= 1");
    if (N < 0) throw std::invalid_argument("expand_gk: N must be >= 0");
    std::vector<SeriesFactor> factors;
    const long shift = 1L << k;        // 2^k
    const long shift2 = 1L << (k + 1); // 2^{k+1}
    for (long n = 1;; ++n) {
        // n^k with overflow-free early exit: n^k > N terminates the loop.
        long nk = 1;
        bool over = false;
        for (int i = 0; i < k; ++i) {
            if (nk > N / n) { over = true; break; }
            nk *= n;
        }
        if (over || nk > N) break;
        factors.push_back({nk, -1});
        if (nk <= N / shift) factors.push_back({shift * nk, +2});
        if (nk <= N / shift2) factors.push_back({shift2 * nk, -1});
    }
    return expand_factored_product(factors, N);
}

nlohmann::ordered_json to_json(const TruncatedSeries& s) {
    nlohmann::ordered_json j;
    j["order"] = s.order();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : s.coeffs) arr.push_back(c.get_str());
    j["coeffs"] = std::move(arr);
    return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    TruncatedSeries s;
    const long order = j.at("order").get<long>();
    for (const auto& v : j.at("coeffs")) s.coeffs.emplace_back(v.get<std::string>());
    if (s.order() != order)
        throw std::invalid_argument("series_from_json: order/coeffs length mismatch");
    return s;
}

} // namespace powpart
