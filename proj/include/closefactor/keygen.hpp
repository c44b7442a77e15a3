#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "closefactor/fermat.hpp"

namespace closefactor::keygen {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", 2014). Chosen as a named, trivially portable algorithm so a
// seed pins the generated corpus on any platform or reimplementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

enum class GenMode {
  close_gap,       // prime pair inside the attack's gap window
  shared_msb,      // equal-size primes agreeing on the top quarter of bits
  safe,            // independent primes, gap far outside the window
  special_family,  // 2^(4a+2)+1 with its closed-form two-factor split
};

struct ModulusRecipe {
  std::size_t bits = 0;  // target bit size of n; random modes need >= 16
  GenMode mode = GenMode::close_gap;
  unsigned alpha = 0;  // special_family only, >= 1
  std::uint64_t seed = 0;
};

// n = p*q always. For special_family p and q are the closed-form factors
// (not necessarily prime); the random modes emit probable primes.
struct ModulusTriple {
  Natural n;
  Natural p;
  Natural q;

  friend bool operator==(const ModulusTriple&, const ModulusTriple&) = default;
};

// Bounded retries exhausted without meeting the recipe's postcondition.
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Miller-Rabin. Below 3317044064679887385961981 the first thirteen primes
// are decisive witnesses, so the answer is exact; above, those bases are
// extended with `rounds` extra witnesses drawn from a SplitMix64 stream
// seeded by the low bits of n, keeping the verdict reproducible.
bool is_probable_prime(const Natural& n, unsigned rounds = 25);

// Uniform `bits`-wide odd natural with the top bit forced; draws 64-bit
// words most-significant-first from rng.
Natural random_odd(SplitMix64& rng, std::size_t bits);

// First probable prime at or above a random odd `bits`-wide start, scanning
// in steps of 2 and redrawing if the scan would leave the width.
Natural random_prime(SplitMix64& rng, std::size_t bits);

ModulusTriple gen_modulus(const ModulusRecipe& recipe);

}  // namespace closefactor::keygen
