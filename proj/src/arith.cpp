#include "closefactor/arith.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace closefactor {

namespace {

template <std::size_t M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (std::size_t x = 0; x < M; ++x) table[x * x % M] = true;
  return table;
}

constexpr auto kSquaresMod64 = square_residues<64>();
constexpr auto kSquaresMod63 = square_residues<63>();
constexpr auto kSquaresMod65 = square_residues<65>();
constexpr auto kSquaresMod11 = square_residues<11>();

}  // namespace

Natural isqrt(const Natural& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  if (n < 2) return n;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  // Start above the root: n < 2^bits, so sqrt(n) < 2^ceil(bits/2). Newton
  // iterates then decrease monotonically onto floor(sqrt(n)).
  Natural x = Natural(1) << static_cast<mp_bitcnt_t>((bits + 1) / 2);
  for (;;) {
    Natural y = x + n / x;
    y >>= 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<Natural> is_perfect_square(const Natural& n) {
  if (n < 0) return std::nullopt;
  if (n < 2) return n;
  // Residue filters reject almost all non-squares before the mandatory
  // isqrt confirmation.
  if (!kSquaresMod64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return std::nullopt;
  if (!kSquaresMod63[mpz_fdiv_ui(n.get_mpz_t(), 63)]) return std::nullopt;
  if (!kSquaresMod65[mpz_fdiv_ui(n.get_mpz_t(), 65)]) return std::nullopt;
  if (!kSquaresMod11[mpz_fdiv_ui(n.get_mpz_t(), 11)]) return std::nullopt;
  Natural root = isqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

std::size_t bit_size(const Natural& n) {
  if (n <= 0) throw std::domain_error("bit_size: defined for n >= 1 only");
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

}  // namespace closefactor
