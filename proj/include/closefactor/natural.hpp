#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace closefactor {

// Arbitrary-precision non-negative integer. GMP supplies the representation
// and ring operations; every algorithm of interest lives in this project.
// All library entry points assume (and preserve) value >= 0.
using Natural = mpz_class;

// Parses a decimal or 0x/0X-prefixed hexadecimal natural. Leading/trailing
// whitespace is tolerated; signs are not. Returns nullopt on any malformed
// input, including the empty string.
std::optional<Natural> parse_natural(std::string_view text);

std::string to_dec_string(const Natural& n);

}  // namespace closefactor
