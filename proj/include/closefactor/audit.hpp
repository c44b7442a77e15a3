#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "closefactor/multiplier.hpp"

namespace closefactor {

enum class Verdict {
  vulnerable_close_gap,
  vulnerable_with_multiplier,
  not_vulnerable_at_tested_depth,
};

// Canonical report tokens: VULNERABLE_CLOSE_GAP etc.
std::string_view to_string(Verdict verdict);

// Per-modulus verdict plus the evidence. Vulnerable verdicts always carry
// factors that multiply back to the modulus; a perfect-square modulus is
// reported vulnerable with f = g = root.
struct AuditReport {
  Natural modulus;
  Verdict verdict = Verdict::not_vulnerable_at_tested_depth;
  std::optional<FactorPair> factors;
  std::optional<Natural> n0;         // square-split witness, when one exists
  std::optional<Natural> i;
  std::optional<MultiplierHit> hit;  // set for the multiplier verdict
  Natural r_max_tested = 1;
  Natural s_max_tested = 1;
  std::int64_t elapsed_ms = 0;
};

// close_factor first; on NotApplicable and cfg.r_max > 1, the multiplier
// sweep. Elapsed time covers the attack only.
AuditReport audit_modulus(const Natural& n, const SearchConfig& cfg);

}  // namespace closefactor
