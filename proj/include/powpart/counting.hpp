#ifndef POWPART_COUNTING_HPP
#define POWPART_COUNTING_HPP

#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "powpart/part_set.hpp"
#include "json.hpp"

namespace powpart {

using BigInt = mpz_class;

// p_S(a, m, n) table: row a (0 <= a < m) counts partitions of n into parts
// from S whose number of parts is congruent to a mod m.  Column sums equal
// the unrestricted count p_S(n); column 0 is the empty partition (a = 0).
struct ResidueProfile {
    int m = 1;
    std::vector<std::vector<BigInt>> table;  // [m][N+1]

    long max_weight() const { return static_cast<long>(table.at(0).size()) - 1; }
    const BigInt& at(int a, long n) const {
        return table[static_cast<size_t>(a)][static_cast<size_t>(n)];
    }
};

// Signed parity difference stream:
//   a[n] = p_S(0,2,n) - p_S(1,2,n)   if n even,
//          p_S(1,2,n) - p_S(0,2,n)   if n odd.
struct AlternatingStream {
    std::vector<BigInt> a;
    long max_weight() const { return static_cast<long>(a.size()) - 1; }
};

// Per-weight permutation of the residue classes, counts sorted
// non-increasingly with ties broken by smaller residue first, plus an
// observational periodicity report on the tuple sequence u_1..u_N.
struct OrderingReport {
    int m = 2;
    long N = 0;
    std::vector<std::vector<int>> tuples;  // tuples[n-1] = u_n
    bool periodic = false;
    long preperiod = 0;  // valid when periodic
    long period = 0;
};

// p_S(n) for 0 <= n <= N by the unbounded-knapsack recurrence; entry 0 = 1.
std::vector<BigInt> count_partitions(const PartSetSpec& spec, long N);

// DP over (weight, number of parts mod m); see ResidueProfile.
ResidueProfile count_by_parts_mod(const PartSetSpec& spec, int m, long N);

// Partitions of n into parts from S with every part used at most alpha-1
// times, i.e. the coefficients of prod_{s in S} (1-x^{alpha*s})/(1-x^s).
std::vector<BigInt> count_bounded_multiplicity(const PartSetSpec& spec, long alpha, long N);

// Partitions into distinct parts from the given strictly increasing list
// (0/1 knapsack); entry 0 = 1.
std::vector<BigInt> count_distinct(const std::vector<long long>& parts, long N);

// a_S from the mod-2 profile by the case definition.
AlternatingStream alternating_direct(const PartSetSpec& spec, long N);

// a_S(n) = sum_{2j <= n} c(j) d(n-2j), where c counts partitions with
// multiplicity < alpha (weighed in units of q^2) and d counts distinct-part
// partitions into the odd-index subset.  Requires a validated alpha; the
// identity is exact for part sets passing all doubling hypotheses, and the
// result is then nonnegative term by term.
AlternatingStream alternating_via_convolution(const PartSetSpec& spec, long N);

// Partitions into odd parts without repetition; equals
// |p_1(0,2,n) - p_1(1,2,n)| by Glaisher's identity.
std::vector<BigInt> glaisher_odd_distinct(long N);

OrderingReport ordering_sequence(const PartSetSpec& spec, int m, long N);

// CSV with header "n,p0,...,p{m-1}", entries as decimal strings.
std::string profile_to_csv(const ResidueProfile& profile);

nlohmann::ordered_json to_json(const AlternatingStream& s);
nlohmann::ordered_json to_json(const OrderingReport& r);

} // namespace powpart

#endif
