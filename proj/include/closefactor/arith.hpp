#pragma once

#include <cstddef>
#include <optional>

#include "closefactor/natural.hpp"

namespace closefactor {

// Floor square root: result^2 <= n < (result+1)^2. Pure integer Newton
// iteration, exact at any magnitude.
Natural isqrt(const Natural& n);

// Returns the root x with x^2 = n when n is a perfect square. Cheap residue
// filters run first; a positive answer is always confirmed through isqrt.
std::optional<Natural> is_perfect_square(const Natural& n);

// Number of binary digits, so 2^(bit_size(n)-1) <= n < 2^bit_size(n).
// Undefined for 0 (no leading 1 bit); throws std::domain_error.
std::size_t bit_size(const Natural& n);

Natural gcd(const Natural& a, const Natural& b);

}  // namespace closefactor
