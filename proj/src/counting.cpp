#include "powpart/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powpart {

std::vector<BigInt> count_partitions(const PartSetSpec& spec, long N) {
    if (N < 0) throw std::invalid_argument("count_partitions: N must be >= 0");
    std::vector<BigInt> dp(static_cast<size_t>(N) + 1, BigInt(0));
    dp[0] = 1;
    for (long long s : parts_up_to(spec, N))
        for (long n = static_cast<long>(s); n <= N; ++n)
            dp[static_cast<size_t>(n)] += dp[static_cast<size_t>(n - s)];
    return dp;
}

ResidueProfile count_by_parts_mod(const PartSetSpec& spec, int m, long N) {
    if (m < 1) throw std::invalid_argument("count_by_parts_mod: m must be >= 1");
    if (N < 0) throw std::invalid_argument("count_by_parts_mod: N must be >= 0");
    ResidueProfile prof;
    prof.m = m;
    prof.table.assign(static_cast<size_t>(m),
                      std::vector<BigInt>(static_cast<size_t>(N) + 1, BigInt(0)));
    prof.table[0][0] = 1;
    // Adding one copy of part s maps (n, a) -> (n+s, a+1 mod m).  Ascending n
    // makes the in-place update unbounded in the multiplicity.
    for (long long s : parts_up_to(spec, N)) {
        for (long n = static_cast<long>(s); n <= N; ++n) {
            const size_t lo = static_cast<size_t>(n - s);
            const size_t hi = static_cast<size_t>(n);
            for (int a = 0; a < m; ++a)
                prof.table[static_cast<size_t>(a)][hi] +=
                    prof.table[static_cast<size_t>((a + m - 1) % m)][lo];
        }
    }
    return prof;
}

std::vector<BigInt> count_bounded_multiplicity(const PartSetSpec& spec, long alpha, long N) {
    if (alpha < 1) throw std::invalid_argument("count_bounded_multiplicity: alpha must be >= 1");
    if (N < 0) throw std::invalid_argument("count_bounded_multiplicity: N must be >= 0");
    std::vector<BigInt> dp(static_cast<size_t>(N) + 1, BigInt(0));
    dp[0] = 1;
    std::vector<BigInt> next(dp.size());
    for (long long s : parts_up_to(spec, N)) {
        for (long n = 0; n <= N; ++n) {
            BigInt acc = dp[static_cast<size_t>(n)];
            for (long j = 1; j < alpha && j * s <= n; ++j)
                acc += dp[static_cast<size_t>(n - j * s)];
            next[static_cast<size_t>(n)] = std::move(acc);
        }
        dp.swap(next);
    }
    return dp;
}

std::vector<BigInt> count_distinct(const std::vector<long long>& parts, long N) {
    if (N < 0) throw std::invalid_argument("count_distinct: N must be >= 0");
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] <= parts[i - 1])
            throw std::invalid_argument("count_distinct: parts must be strictly increasing");
    std::vector<BigInt> dp(static_cast<size_t>(N) + 1, BigInt(0));
    dp[0] = 1;
    for (long long s : parts) {
        if (s > N) break;
        for (long n = N; n >= s; --n)
            dp[static_cast<size_t>(n)] += dp[static_cast<size_t>(n - s)];
    }
    return dp;
}

AlternatingStream alternating_direct(const PartSetSpec& spec, long N) {
    const ResidueProfile prof = count_by_parts_mod(spec, 2, N);
    AlternatingStream out;
    out.a.resize(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        BigInt diff = prof.at(0, n) - prof.at(1, n);
        out.a[static_cast<size_t>(n)] = (n % 2 == 0) ? diff : -diff;
    }
    return out;
}

AlternatingStream alternating_via_convolution(const PartSetSpec& spec, long N) {
    if (N < 0) throw std::invalid_argument("alternating_via_convolution: N must be >= 0");
    long long alpha;
    if (spec.alpha()) {
        alpha = *spec.alpha();
    } else {
        const long range = std::min<long>(std::max<long>(N, 2),
                                          spec.index_limit());
        const HypothesisReport rep = check_hypotheses(spec, range);
        if (!rep.all_pass())
            throw std::invalid_argument(
                "alternating_via_convolution: part set fails the doubling "
                "hypotheses (" + (rep.note.empty() ? std::string("no alpha") : rep.note) + ")");
        alpha = *rep.doubling_alpha;
    }

    // First factor is a series in q^2: index c by its q^2-weight j and
    // convolve at weight 2j.
    const std::vector<BigInt> c = count_bounded_multiplicity(spec, alpha, N / 2);
    const std::vector<BigInt> d = count_distinct(odd_index_subset(spec, N), N);

    AlternatingStream out;
    out.a.assign(static_cast<size_t>(N) + 1, BigInt(0));
    for (long j = 0; 2 * j <= N; ++j) {
        if (c[static_cast<size_t>(j)] == 0) continue;
        for (long i = 0; 2 * j + i <= N; ++i)
            out.a[static_cast<size_t>(2 * j + i)] +=
                c[static_cast<size_t>(j)] * d[static_cast<size_t>(i)];
    }
    for (const BigInt& v : out.a)
        if (v < 0)
            throw std::logic_error("alternating_via_convolution: negative term");
    return out;
}

std::vector<BigInt> glaisher_odd_distinct(long N) {
    std::vector<long long> odds;
    for (long long v = 1; v <= N; v += 2) odds.push_back(v);
    return count_distinct(odds, N);
}

OrderingReport ordering_sequence(const PartSetSpec& spec, int m, long N) {
    if (m < 2) throw std::invalid_argument("ordering_sequence: m must be >= 2");
    if (N < 1) throw std::invalid_argument("ordering_sequence: N must be >= 1");
    const ResidueProfile prof = count_by_parts_mod(spec, m, N);

    OrderingReport rep;
    rep.m = m;
    rep.N = N;
    rep.tuples.reserve(static_cast<size_t>(N));
    for (long n = 1; n <= N; ++n) {
        std::vector<int> idx(static_cast<size_t>(m));
        std::iota(idx.begin(), idx.end(), 0);
        // Non-increasing counts; stable sort keeps smaller residue first on ties.
        std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
            return prof.at(i, n) > prof.at(j, n);
        });
        rep.tuples.push_back(std::move(idx));
    }

    // Observational: smallest period p (then smallest preperiod r) such that
    // u_n = u_{n+p} for all r+1 <= n <= N-p, requiring at least one full
    // extra period of evidence (r + 2p <= N).  No claim beyond the horizon.
    for (long p = 1; 2 * p <= N; ++p) {
        long r = N - p;  // tuples agree on (r, N-p]
        while (r > 0 && rep.tuples[static_cast<size_t>(r - 1)] ==
                            rep.tuples[static_cast<size_t>(r - 1 + p)])
            --r;
        if (r + 2 * p <= N) {
            rep.periodic = true;
            rep.preperiod = r;
            rep.period = p;
            break;
        }
    }
    return rep;
}

std::string profile_to_csv(const ResidueProfile& profile) {
    std::string out = "n";
    for (int a = 0; a < profile.m; ++a) out += ",p" + std::to_string(a);
    out += "\n";
    for (long n = 0; n <= profile.max_weight(); ++n) {
        out += std::to_string(n);
        for (int a = 0; a < profile.m; ++a)
            out += "," + profile.at(a, n).get_str();
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const AlternatingStream& s) {
    nlohmann::ordered_json j;
    j["N"] = s.max_weight();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : s.a) arr.push_back(v.get_str());
    j["a"] = std::move(arr);
    return j;
}

nlohmann::ordered_json to_json(const OrderingReport& r) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["N"] = r.N;
    j["periodic"] = r.periodic;
    if (r.periodic) {
        j["preperiod"] = r.preperiod;
        j["period"] = r.period;
    }
    j["tuples"] = r.tuples;
    return j;
}

} // namespace powpart
