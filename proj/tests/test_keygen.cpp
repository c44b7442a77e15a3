#include <doctest.h>

#include <stdexcept>

#include "closefactor/keygen.hpp"
#include "closefactor/oracle.hpp"

using namespace closefactor::keygen;
using closefactor::bit_size;
using closefactor::close_factor;
using closefactor::CloseFactors;
using closefactor::gap_guarantee_holds;
using closefactor::msb_quarter_match;
using closefactor::Natural;
using closefactor::NotApplicable;

TEST_CASE("is_probable_prime fixtures") {
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(3));
  CHECK(is_probable_prime(59));
  CHECK(is_probable_prime(97));
  CHECK(!is_probable_prime(0));
  CHECK(!is_probable_prime(1));
  CHECK(!is_probable_prime(391));  // 17 * 23
  CHECK(closefactor::oracle::trial_factor(391) ==
        closefactor::oracle::Factorization{{17, 1}, {23, 1}});
  CHECK(!is_probable_prime(561));  // Carmichael
  // 2^127 - 1 is prime; 2^128 + 1 is not. Both cross the deterministic
  // witness bound, so the seeded-witness path runs too.
  CHECK(is_probable_prime((Natural(1) << 127) - 1));
  CHECK(!is_probable_prime((Natural(1) << 128) + 1));
}

TEST_CASE("is_probable_prime agrees with trial division below 20000") {
  for (unsigned long v = 2; v < 20000; ++v) {
    const bool by_trial = closefactor::oracle::trial_factor(v).size() == 1 &&
                          closefactor::oracle::trial_factor(v)[0].exponent == 1;
    REQUIRE(is_probable_prime(v) == by_trial);
  }
}

TEST_CASE("random primes are sized and reproducible") {
  SplitMix64 a(9001);
  SplitMix64 b(9001);
  for (std::size_t bits : {16u, 32u, 64u, 128u}) {
    const Natural p = random_prime(a, bits);
    CHECK(bit_size(p) == bits);
    CHECK(is_probable_prime(p));
    CHECK(p == random_prime(b, bits));
  }
}

TEST_CASE("special family fixtures") {
  SUBCASE("alpha = 1") {
    const auto triple = gen_modulus({.mode = GenMode::special_family, .alpha = 1});
    CHECK(triple.n == 65);
    CHECK(triple.p == 5);
    CHECK(triple.q == 13);
  }
  SUBCASE("alpha = 2 gives composite factors by design") {
    const auto triple = gen_modulus({.mode = GenMode::special_family, .alpha = 2});
    CHECK(triple.n == 1025);
    CHECK(triple.p == 25);
    CHECK(triple.q == 41);
    CHECK(triple.p * triple.q == triple.n);
  }
  SUBCASE("identity and divisibility by 5 across the sweep") {
    for (unsigned alpha = 1; alpha <= 20; ++alpha) {
      const auto triple = gen_modulus({.mode = GenMode::special_family, .alpha = alpha});
      REQUIRE(triple.p * triple.q == triple.n);
      REQUIRE(triple.n == (Natural(1) << (4 * alpha + 2)) + 1);
      REQUIRE(triple.n % 5 == 0);
    }
    // The referenced large instance keeps the identity at alpha = 53.
    const auto big = gen_modulus({.mode = GenMode::special_family, .alpha = 53});
    CHECK(big.p * big.q == big.n);
    CHECK(big.n % 5 == 0);
  }
  SUBCASE("alpha = 0 is rejected") {
    CHECK_THROWS_AS(gen_modulus({.mode = GenMode::special_family, .alpha = 0}),
                    std::invalid_argument);
  }
}

TEST_CASE("close_gap recipes factor under the attack") {
  for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
    for (std::size_t bits : {32u, 64u, 96u}) {
      const auto triple =
          gen_modulus({.bits = bits, .mode = GenMode::close_gap, .seed = seed});
      REQUIRE(triple.p * triple.q == triple.n);
      REQUIRE(is_probable_prime(triple.p));
      REQUIRE(is_probable_prime(triple.q));
      REQUIRE(gap_guarantee_holds(triple.p, triple.q, bit_size(triple.n)));
      const auto outcome = close_factor(triple.n);
      const auto* found = std::get_if<CloseFactors>(&outcome);
      REQUIRE(found != nullptr);
      REQUIRE(found->pair.f == triple.p);
      REQUIRE(found->pair.g == triple.q);
    }
  }
}

TEST_CASE("shared_msb recipes match on the top quarter and factor") {
  for (std::uint64_t seed : {3ull, 11ull}) {
    const auto triple = gen_modulus({.bits = 64, .mode = GenMode::shared_msb, .seed = seed});
    REQUIRE(triple.p * triple.q == triple.n);
    REQUIRE(bit_size(triple.p) == bit_size(triple.q));
    REQUIRE(msb_quarter_match(triple.p, triple.q));
    REQUIRE(gap_guarantee_holds(triple.p, triple.q, bit_size(triple.n)));
    REQUIRE(std::holds_alternative<CloseFactors>(close_factor(triple.n)));
  }
}

TEST_CASE("safe recipes resist the one-shot attack") {
  for (std::uint64_t seed : {5ull, 23ull}) {
    const auto triple = gen_modulus({.bits = 64, .mode = GenMode::safe, .seed = seed});
    REQUIRE(triple.p * triple.q == triple.n);
    REQUIRE(is_probable_prime(triple.p));
    REQUIRE(is_probable_prime(triple.q));
    Natural gap4 = triple.q - triple.p;
    gap4 *= gap4;
    gap4 *= gap4;
    const Natural margin = Natural(1) << static_cast<mp_bitcnt_t>(bit_size(triple.n) + 9);
    REQUIRE(gap4 > margin);
    REQUIRE(std::holds_alternative<NotApplicable>(close_factor(triple.n)));
  }
}

TEST_CASE("generation is deterministic in the recipe") {
  const ModulusRecipe recipe{.bits = 48, .mode = GenMode::close_gap, .seed = 1234};
  CHECK(gen_modulus(recipe) == gen_modulus(recipe));
  const auto other = gen_modulus({.bits = 48, .mode = GenMode::close_gap, .seed = 1235});
  CHECK(gen_modulus(recipe).n != other.n);
}

TEST_CASE("random modes reject tiny widths") {
  CHECK_THROWS_AS(gen_modulus({.bits = 8, .mode = GenMode::close_gap}), std::invalid_argument);
  CHECK_THROWS_AS(gen_modulus({.bits = 15, .mode = GenMode::safe}), std::invalid_argument);
}
