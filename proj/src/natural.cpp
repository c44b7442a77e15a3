#include "closefactor/natural.hpp"

#include <cctype>

namespace closefactor {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool all_digits(std::string_view text, bool hex) {
  if (text.empty()) return false;
  for (char c : text) {
    const bool ok = hex ? std::isxdigit(static_cast<unsigned char>(c)) != 0
                        : std::isdigit(static_cast<unsigned char>(c)) != 0;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::optional<Natural> parse_natural(std::string_view text) {
  text = trim(text);
  int base = 10;
  if (text.size() > 2 && (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X")) {
    base = 16;
    text.remove_prefix(2);
  }
  if (!all_digits(text, base == 16)) return std::nullopt;
  Natural n;
  if (mpz_set_str(n.get_mpz_t(), std::string(text).c_str(), base) != 0) return std::nullopt;
  return n;
}

std::string to_dec_string(const Natural& n) { return n.get_str(10); }

}  // namespace closefactor
