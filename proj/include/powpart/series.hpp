#ifndef POWPART_SERIES_HPP
#define POWPART_SERIES_HPP

#include <gmpxx.h>
#include <vector>
#include <cstdint>
#include "json.hpp"

namespace powpart {

using BigInt = mpz_class;

// Truncated power series over Z: coefficient vector indexed by the exponent
// of q, always of length order+1.  All arithmetic is exact; nothing beyond
// index `order` is ever read or written.
struct TruncatedSeries {
    std::vector<BigInt> coeffs;

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    const BigInt& operator[](long n) const { return coeffs[static_cast<size_t>(n)]; }
    BigInt& operator[](long n) { return coeffs[static_cast<size_t>(n)]; }
    bool operator==(const TruncatedSeries&) const = default;
};

// One factor (1 - q^exponent)^power of a factored product.
struct SeriesFactor {
    long exponent;   // e >= 1
    long power;      // c != 0; negative powers are exact divisions
};

// The multiplicative identity 1 + 0*q + ... + 0*q^N.
TruncatedSeries series_one(long order);

// s * (1 - q^e)^c truncated to s.order.  c < 0 is exact division, realized
// by the linear recurrence of the geometric expansion of (1 - q^e)^{-1}.
// Throws std::invalid_argument for e < 1 or c == 0.
TruncatedSeries apply_binomial_factor(const TruncatedSeries& s, long e, long c);

// prod (1 - q^e)^c truncated to order N.  Factors with e > N are skipped;
// the result does not depend on the order of the factors.
TruncatedSeries expand_factored_product(const std::vector<SeriesFactor>& factors, long N);

// Coefficient stream of the signed parity difference for partitions into
// k-th powers, expanded from the factored product
//
//     prod_{n>=1} (1 - q^{2^k n^k})^2 / ( (1 - q^{2^{k+1} n^k}) (1 - q^{n^k}) ).
//
// Coefficient n equals (-1)^n (p_k(0,2,n) - p_k(1,2,n)).
TruncatedSeries expand_gk(int k, long N);

// JSON form {"order": N, "coeffs": ["...", ...]}; coefficients as decimal
// strings since they exceed 64-bit range.
nlohmann::ordered_json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

} // namespace powpart

#endif
