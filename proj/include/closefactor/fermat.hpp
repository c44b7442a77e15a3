#pragma once

#include <cstddef>
#include <variant>

#include "closefactor/arith.hpp"

namespace closefactor {

// Ordered nontrivial factor pair: 1 < f <= g and f*g equals the target.
struct FactorPair {
  Natural f;
  Natural g;

  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

// Outcome of the one-shot close-factor attack on an odd n >= 3.
//
// CloseFactors:  n = (n0-i)(n0+i) with n0 = isqrt(n)+1 and n0^2 - n = i^2.
// PerfectSquare: n = root^2 (the degenerate equal-factor case).
// NotApplicable: the residual (isqrt(n)+1)^2 - n admits no nontrivial
//                square split; the attack fails on this n.
struct CloseFactors {
  FactorPair pair;
  Natural i;

  friend bool operator==(const CloseFactors&, const CloseFactors&) = default;
};

struct PerfectSquare {
  Natural root;

  friend bool operator==(const PerfectSquare&, const PerfectSquare&) = default;
};

struct NotApplicable {
  Natural residual;

  friend bool operator==(const NotApplicable&, const NotApplicable&) = default;
};

using CloseFactorOutcome = std::variant<CloseFactors, PerfectSquare, NotApplicable>;

// |{x : n < x^2 <= m}|, computed as isqrt(m) - isqrt(n). Requires n <= m.
Natural count_squares(const Natural& n, const Natural& m);

// Examines only the first square above n, exactly as the method prescribes.
// Requires n >= 3 and odd; an iterated fallback is deliberately absent.
// For n in {3, 5} the square split is the trivial 1*n and is reported as
// NotApplicable rather than as a FactorPair with f = 1.
CloseFactorOutcome close_factor(const Natural& n);

// The attack's success hypothesis |p-q| <= 2^((k+5)/4), evaluated in exact
// integer arithmetic as (p-q)^4 <= 2^(k+5). k is the bit size of p*q.
bool gap_guarantee_holds(const Natural& p, const Natural& q, std::size_t k);

// True iff p and q (of equal bit size) agree on their top ceil(k/4) bits,
// k = bit_size(p*q). Agreement implies gap_guarantee_holds. Unequal bit
// sizes are rejected with std::domain_error.
bool msb_quarter_match(const Natural& p, const Natural& q);

}  // namespace closefactor
