#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "closefactor/fermat.hpp"

// Slow, transparent brute-force ground truth. Everything here exists to
// validate the fast path, so inputs are capped at a 64-bit desk limit and
// the implementations stay as literal as possible.
namespace closefactor::oracle {

inline constexpr std::uint64_t kDefaultDeskLimit = std::numeric_limits<std::uint64_t>::max();

struct PrimePower {
  Natural prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly ascending; product of prime^exponent reconstructs n.
using Factorization = std::vector<PrimePower>;

// Complete factorization by trial division up to isqrt(n). Requires
// 1 <= n <= desk_limit; n = 0 is a domain error, an over-limit n a range
// error.
Factorization trial_factor(const Natural& n, std::uint64_t desk_limit = kDefaultDeskLimit);

// Among all f*g = n with 1 < f <= g, the pair minimizing g - f. Requires a
// composite n within the desk limit; units and primes are rejected.
FactorPair closest_divisor_pair(const Natural& n, std::uint64_t desk_limit = kDefaultDeskLimit);

// |{x : n < x^2 <= m}| by literal enumeration of x.
Natural count_squares_naive(const Natural& n, const Natural& m,
                            std::uint64_t desk_limit = kDefaultDeskLimit);

}  // namespace closefactor::oracle
