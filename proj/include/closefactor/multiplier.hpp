#pragma once

#include <optional>

#include "closefactor/fermat.hpp"

namespace closefactor {

// Witness that r*s*n sits just below a perfect square whose split shares a
// nontrivial divisor with n:
//   n0 = isqrt(r*s*n) + 1,  n0^2 - r*s*n = i^2,  divisor = gcd(n, n0 -+ i),
// with the n0 - i side preferred when both gcds are nontrivial.
struct MultiplierHit {
  Natural r;
  Natural s;  // 1 for the single-multiplier form
  Natural n0;
  Natural i;
  Natural divisor;  // 1 < divisor < n, divisor | n

  friend bool operator==(const MultiplierHit&, const MultiplierHit&) = default;
};

struct SearchConfig {
  Natural r_max = 1;
  Natural s_max = 1;  // 1 disables the dual-multiplier sweep
  bool odd_only = true;
};

// Runs the close-factor step on r*n and recovers a divisor of n by gcd.
// A perfect-square residual whose gcds are both trivial is a miss, not an
// error. Requires n odd >= 3 and r odd >= 1; r = 1 is the plain attack.
std::optional<MultiplierHit> factor_with_multiplier(const Natural& n, const Natural& r);

// Same procedure over r*s*n, for rebalancing both factors.
std::optional<MultiplierHit> factor_with_multiplier_pair(const Natural& n, const Natural& r,
                                                         const Natural& s);

// Exhaustive sweep standing in for an externally supplied multiplier hint:
// r ascends, s ascends per r with s <= r, both odd unless cfg.odd_only is
// cleared. Returns the first hit; deterministic for a fixed cfg.
std::optional<MultiplierHit> search_multiplier(const Natural& n, const SearchConfig& cfg);

}  // namespace closefactor
