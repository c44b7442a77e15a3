#include "closefactor/fermat.hpp"

#include <stdexcept>

namespace closefactor {

Natural count_squares(const Natural& n, const Natural& m) {
  if (n > m) throw std::invalid_argument("count_squares: need n <= m");
  return isqrt(m) - isqrt(n);
}

CloseFactorOutcome close_factor(const Natural& n) {
  if (n < 3) throw std::domain_error("close_factor: need n >= 3");
  if (mpz_even_p(n.get_mpz_t())) throw std::domain_error("close_factor: need odd n");
  if (auto root = is_perfect_square(n)) return PerfectSquare{std::move(*root)};
  const Natural n0 = isqrt(n) + 1;
  Natural residual = n0 * n0;
  residual -= n;
  if (auto i = is_perfect_square(residual)) {
    Natural f = n0 - *i;
    if (f > 1) return CloseFactors{FactorPair{std::move(f), n0 + *i}, std::move(*i)};
    // n in {3, 5}: the split is the trivial 1*n, which factors nothing.
  }
  return NotApplicable{std::move(residual)};
}

bool gap_guarantee_holds(const Natural& p, const Natural& q, std::size_t k) {
  Natural gap = p > q ? p - q : q - p;
  gap *= gap;
  gap *= gap;
  return gap <= Natural(1) << static_cast<mp_bitcnt_t>(k + 5);
}

bool msb_quarter_match(const Natural& p, const Natural& q) {
  const std::size_t width = bit_size(p);
  if (width != bit_size(q)) {
    throw std::domain_error("msb_quarter_match: p and q must have equal bit size");
  }
  const std::size_t k = bit_size(p * q);
  std::size_t matched = (k + 3) / 4;  // ceil(k/4); conservative when 4 does not divide k
  if (matched > width) matched = width;
  const auto shift = static_cast<mp_bitcnt_t>(width - matched);
  return Natural(p >> shift) == Natural(q >> shift);
}

}  // namespace closefactor
