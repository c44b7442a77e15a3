#include "closefactor/multiplier.hpp"

#include <stdexcept>

namespace closefactor {

namespace {

void require_odd_target(const Natural& n) {
  if (n < 3) throw std::domain_error("multiplier: need n >= 3");
  if (mpz_even_p(n.get_mpz_t())) throw std::domain_error("multiplier: need odd n");
}

// The unchecked core: close-factor step on r*s*n, divisor recovery by gcd.
std::optional<MultiplierHit> attempt(const Natural& n, const Natural& r, const Natural& s) {
  const Natural scaled = r * s * n;
  const Natural n0 = isqrt(scaled) + 1;
  Natural residual = n0 * n0;
  residual -= scaled;
  const auto i = is_perfect_square(residual);
  if (!i) return std::nullopt;
  Natural divisor = gcd(n, n0 - *i);
  if (divisor == 1 || divisor == n) {
    divisor = gcd(n, n0 + *i);
    if (divisor == 1 || divisor == n) return std::nullopt;  // spurious square
  }
  return MultiplierHit{r, s, n0, *i, std::move(divisor)};
}

}  // namespace

std::optional<MultiplierHit> factor_with_multiplier(const Natural& n, const Natural& r) {
  return factor_with_multiplier_pair(n, r, 1);
}

std::optional<MultiplierHit> factor_with_multiplier_pair(const Natural& n, const Natural& r,
                                                         const Natural& s) {
  require_odd_target(n);
  if (r < 1 || s < 1 || mpz_even_p(r.get_mpz_t()) || mpz_even_p(s.get_mpz_t())) {
    throw std::domain_error("multiplier: multipliers must be odd naturals >= 1");
  }
  return attempt(n, r, s);
}

std::optional<MultiplierHit> search_multiplier(const Natural& n, const SearchConfig& cfg) {
  require_odd_target(n);
  if (cfg.r_max < 1 || cfg.s_max < 1) {
    throw std::invalid_argument("search_multiplier: r_max and s_max must be >= 1");
  }
  const unsigned step = cfg.odd_only ? 2 : 1;
  for (Natural r = 1; r <= cfg.r_max; r += step) {
    const Natural& s_cap = cfg.s_max < r ? cfg.s_max : r;
    for (Natural s = 1; s <= s_cap; s += step) {
      if (auto hit = attempt(n, r, s)) return hit;
    }
  }
  return std::nullopt;
}

}  // namespace closefactor
