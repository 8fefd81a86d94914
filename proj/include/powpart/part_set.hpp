#ifndef POWPART_PART_SET_HPP
#define POWPART_PART_SET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace powpart {

// Description of the part set S = {f(n) : n >= 1}.  Three flavors:
//   kth_powers  f(n) = n^k, defined for all n;
//   tabulated   f given by a finite table f(1..n_max);
//   explicit    a bare finite list of admissible parts, with no index
//               function attached (positions are not treated as f).
// Specs are immutable values; `alpha` is filled only after the doubling
// hypothesis f(2n) = 2*alpha*f(n) has been verified (see check_hypotheses).
class PartSetSpec {
public:
    enum class Kind { KthPowers, Tabulated, Explicit };

    static PartSetSpec kth_powers(int k);
    static PartSetSpec tabulated(std::vector<long long> values);   // values[i] = f(i+1)
    static PartSetSpec explicit_list(std::vector<long long> parts);

    Kind kind() const { return kind_; }
    int power_k() const { return k_; }
    // Largest n for which f(n) is known (LONG_MAX-ish for powers).
    long index_limit() const;
    // f(n); throws std::out_of_range beyond the table.
    long long value_at(long n) const;
    const std::vector<long long>& values() const { return values_; }

    std::optional<long long> alpha() const { return alpha_; }
    PartSetSpec with_alpha(long long a) const;

    // Human-readable form, also the CLI syntax: "powers:k=3",
    // "table:1,3,5,...", "explicit:1,4,9".
    std::string describe() const;

private:
    PartSetSpec(Kind kind, int k, std::vector<long long> values)
        : kind_(kind), k_(k), values_(std::move(values)) {}

    Kind kind_;
    int k_ = 0;
    std::vector<long long> values_;   // table values or explicit parts
    std::optional<long long> alpha_;
};

// Outcome of checking, exhaustively on 1 <= n <= checked_up_to:
//   a) f(1) = 1;
//   b) f(n) odd whenever n is odd;
//   c) a single alpha with f(2n) = 2*alpha*f(n) for all 2n in range.
// doubling_alpha is empty when c) fails or cannot be tested (explicit sets
// carry no index function).  For k-th powers alpha = 2^{k-1} analytically.
struct HypothesisReport {
    bool f1_is_1 = false;
    bool odd_at_odds = false;
    bool increasing = false;
    std::optional<long long> doubling_alpha;
    long checked_up_to = 0;
    std::string note;

    bool all_pass() const {
        return f1_is_1 && odd_at_odds && increasing && doubling_alpha.has_value();
    }
};

HypothesisReport check_hypotheses(const PartSetSpec& spec, long n_max);

// All elements of S that are <= N, ascending, no duplicates.  Throws
// std::invalid_argument if a tabulated spec ends before f exceeds N
// (the set below N would be unknown).
std::vector<long long> parts_up_to(const PartSetSpec& spec, long long N);

// {f(2n-1) : n >= 1, f(2n-1) <= N}, ascending.  Rejects explicit sets
// (no index function).
std::vector<long long> odd_index_subset(const PartSetSpec& spec, long long N);

// Parses the CLI syntax: "powers:k=3", "table:@file.json" (JSON object
// mapping n -> f(n)), "table:1,3,5", "explicit:1,4,9".
PartSetSpec parse_part_set(const std::string& text);

} // namespace powpart

#endif
