#include "closefactor/oracle.hpp"

#include <stdexcept>
#include <string>

namespace closefactor::oracle {

namespace {

std::uint64_t to_desk_value(const Natural& n, std::uint64_t desk_limit, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative input");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64 || n.get_ui() > desk_limit) {
    throw std::range_error(std::string(what) + ": input exceeds the oracle desk limit");
  }
  return static_cast<std::uint64_t>(n.get_ui());
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = n;
  std::uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

}  // namespace

Factorization trial_factor(const Natural& n, std::uint64_t desk_limit) {
  if (n == 0) throw std::domain_error("trial_factor: need n >= 1");
  std::uint64_t v = to_desk_value(n, desk_limit, "trial_factor");
  Factorization out;
  auto strip = [&](std::uint64_t d) {
    if (v % d != 0) return;
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    out.push_back({Natural(static_cast<unsigned long>(d)), e});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= v / d; d += 2) strip(d);
  if (v > 1) out.push_back({Natural(static_cast<unsigned long>(v)), 1});
  return out;
}

FactorPair closest_divisor_pair(const Natural& n, std::uint64_t desk_limit) {
  const std::uint64_t v = to_desk_value(n, desk_limit, "closest_divisor_pair");
  if (v < 4) throw std::domain_error("closest_divisor_pair: need a composite n");
  // The divisor closest to sqrt(n) minimizes the gap of the pair.
  for (std::uint64_t f = isqrt_u64(v); f >= 2; --f) {
    if (v % f == 0) {
      return FactorPair{Natural(static_cast<unsigned long>(f)),
                        Natural(static_cast<unsigned long>(v / f))};
    }
  }
  throw std::domain_error("closest_divisor_pair: n is prime");
}

Natural count_squares_naive(const Natural& n, const Natural& m, std::uint64_t desk_limit) {
  if (n > m) throw std::invalid_argument("count_squares_naive: need n <= m");
  const std::uint64_t lo = to_desk_value(n, desk_limit, "count_squares_naive");
  const std::uint64_t hi = to_desk_value(m, desk_limit, "count_squares_naive");
  unsigned long count = 0;
  for (unsigned __int128 x = 1; x * x <= hi; ++x) {
    if (x * x > lo) ++count;
  }
  return Natural(count);
}

}  // namespace closefactor::oracle
