#include "powpart/part_set.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace powpart {

PartSetSpec PartSetSpec::kth_powers(int k) {
    if (k < 1) throw std::invalid_argument("kth_powers: k must be >= 1");
    return PartSetSpec(Kind::KthPowers, k, {});
}

PartSetSpec PartSetSpec::tabulated(std::vector<long long> values) {
    if (values.empty()) throw std::invalid_argument("tabulated: empty table");
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] <= 0)
            throw std::invalid_argument("tabulated: values must be positive");
        if (i > 0 && values[i] <= values[i - 1])
            throw std::invalid_argument("tabulated: f must be strictly increasing");
    }
    return PartSetSpec(Kind::Tabulated, 0, std::move(values));
}

PartSetSpec PartSetSpec::explicit_list(std::vector<long long> parts) {
    if (parts.empty()) throw std::invalid_argument("explicit_list: empty part list");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("explicit_list: parts must be positive");
        if (i > 0 && parts[i] <= parts[i - 1])
            throw std::invalid_argument("explicit_list: parts must be strictly increasing");
    }
    return PartSetSpec(Kind::Explicit, 0, std::move(parts));
}

long PartSetSpec::index_limit() const {
    if (kind_ == Kind::KthPowers) return LONG_MAX;
    return static_cast<long>(values_.size());
}

long long PartSetSpec::value_at(long n) const {
    if (n < 1) throw std::out_of_range("value_at: index must be >= 1");
    if (kind_ == Kind::KthPowers) {
        long long v = 1;
        for (int i = 0; i < k_; ++i) {
            if (v > LLONG_MAX / n) throw std::overflow_error("value_at: n^k overflows");
            v *= n;
        }
        return v;
    }
    if (static_cast<size_t>(n) > values_.size())
        throw std::out_of_range("value_at: beyond table");
    return values_[static_cast<size_t>(n) - 1];
}

PartSetSpec PartSetSpec::with_alpha(long long a) const {
    PartSetSpec copy = *this;
    copy.alpha_ = a;
    return copy;
}

std::string PartSetSpec::describe() const {
    switch (kind_) {
        case Kind::KthPowers: return "powers:k=" + std::to_string(k_);
        case Kind::Tabulated: {
            std::string s = "table:";
            for (size_t i = 0; i < values_.size(); ++i)
                s += (i ? "," : "") + std::to_string(values_[i]);
            return s;
        }
        case Kind::Explicit: {
            std::string s = "explicit:";
            for (size_t i = 0; i < values_.size(); ++i)
                s += (i ? "," : "") + std::to_string(values_[i]);
            return s;
        }
    }
    return "?";
}

HypothesisReport check_hypotheses(const PartSetSpec& spec, long n_max) {
    if (n_max < 1) throw std::invalid_argument("check_hypotheses: n_max must be >= 1");
    HypothesisReport rep;
    rep.checked_up_to = n_max;

    if (spec.kind() == PartSetSpec::Kind::Explicit) {
        // A bare part list has no index function, so b) and c) have no f to test.
        const auto& parts = spec.values();
        rep.f1_is_1 = !parts.empty() && parts.front() == 1;
        rep.odd_at_odds = false;
        rep.increasing = true;  // enforced at construction
        rep.doubling_alpha = std::nullopt;
        rep.note = "explicit set: no index function, doubling hypothesis not testable";
        return rep;
    }

    if (spec.kind() == PartSetSpec::Kind::KthPowers) {
        // f(1)=1, (2n)^k = 2^k n^k = 2 * 2^{k-1} * f(n): everything holds
        // identically, alpha = 2^{k-1}.
        rep.f1_is_1 = true;
        rep.odd_at_odds = true;
        rep.increasing = true;
        rep.doubling_alpha = 1LL << (spec.power_k() - 1);
        return rep;
    }

    const long limit = std::min<long>(n_max, spec.index_limit());
    if (limit < n_max)
        rep.note = "table ends at n=" + std::to_string(limit) +
                   ", checked only that far";
    rep.checked_up_to = limit;

    rep.f1_is_1 = spec.value_at(1) == 1;
    rep.increasing = true;  // enforced at construction
    rep.odd_at_odds = true;
    for (long n = 1; n <= limit; n += 2)
        if (spec.value_at(n) % 2 == 0) { rep.odd_at_odds = false; break; }

    // alpha inferred from n=1 (alpha = f(2)/2), then verified globally.
    if (limit >= 2) {
        const long long f2 = spec.value_at(2);
        if (f2 % 2 == 0) {
            const long long alpha = f2 / 2;
            bool ok = alpha >= 1;
            for (long n = 1; ok && 2 * n <= limit; ++n)
                ok = spec.value_at(2 * n) == 2 * alpha * spec.value_at(n);
            if (ok) rep.doubling_alpha = alpha;
        }
    }
    return rep;
}

std::vector<long long> parts_up_to(const PartSetSpec& spec, long long N) {
    if (N < 0) throw std::invalid_argument("parts_up_to: N must be >= 0");
    std::vector<long long> out;
    switch (spec.kind()) {
        case PartSetSpec::Kind::KthPowers:
            for (long n = 1; spec.value_at(n) <= N; ++n) out.push_back(spec.value_at(n));
            break;
        case PartSetSpec::Kind::Tabulated: {
            const auto& vals = spec.values();
            if (vals.back() <= N)
                throw std::invalid_argument(
                    "parts_up_to: table ends before f exceeds N; the part set below "
                    "N is not fully known");
            for (long long v : vals)
                if (v <= N) out.push_back(v);
            break;
        }
        case PartSetSpec::Kind::Explicit:
            for (long long v : spec.values())
                if (v <= N) out.push_back(v);
            break;
    }
    return out;
}

std::vector<long long> odd_index_subset(const PartSetSpec& spec, long long N) {
    if (N < 0) throw std::invalid_argument("odd_index_subset: N must be >= 0");
    if (spec.kind() == PartSetSpec::Kind::Explicit)
        throw std::invalid_argument("odd_index_subset: explicit sets have no index function");
    if (spec.kind() == PartSetSpec::Kind::Tabulated &&
        spec.values().back() <= N)
        throw std::invalid_argument(
            "odd_index_subset: table ends before f exceeds N");
    std::vector<long long> out;
    for (long n = 1; n <= spec.index_limit(); n += 2) {
        const long long v = spec.value_at(n);
        if (v > N) break;
        out.push_back(v);
    }
    return out;
}

static std::vector<long long> parse_csv_longs(const std::string& text) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoll(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

PartSetSpec parse_part_set(const std::string& text) {
    if (text.rfind("powers:", 0) == 0) {
        const std::string rest = text.substr(7);
        if (rest.rfind("k=", 0) != 0)
            throw std::invalid_argument("part set syntax: powers:k=<int>");
        return PartSetSpec::kth_powers(std::stoi(rest.substr(2)));
    }
    if (text.rfind("table:", 0) == 0) {
        const std::string rest = text.substr(6);
        if (!rest.empty() && rest[0] == '@') {
            std::ifstream in(rest.substr(1));
            if (!in) throw std::invalid_argument("cannot open table file " + rest.substr(1));
            nlohmann::json j;
            in >> j;
            std::map<long, long long> table;
            for (auto it = j.begin(); it != j.end(); ++it)
                table[std::stol(it.key())] = it.value().get<long long>();
            std::vector<long long> values;
            long expect = 1;
            for (const auto& [n, v] : table) {
                if (n != expect)
                    throw std::invalid_argument("table file must map contiguous n = 1,2,...");
                values.push_back(v);
                ++expect;
            }
            return PartSetSpec::tabulated(std::move(values));
        }
        return PartSetSpec::tabulated(parse_csv_longs(rest));
    }
    if (text.rfind("explicit:", 0) == 0)
        return PartSetSpec::explicit_list(parse_csv_longs(text.substr(9)));
    throw std::invalid_argument("unknown part set syntax: " + text);
}

} // namespace powpart
