#include "closefactor/audit.hpp"

#include <chrono>
#include <utility>

namespace closefactor {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::vulnerable_close_gap:
      return "VULNERABLE_CLOSE_GAP";
    case Verdict::vulnerable_with_multiplier:
      return "VULNERABLE_WITH_MULTIPLIER";
    case Verdict::not_vulnerable_at_tested_depth:
      return "NOT_VULNERABLE_AT_TESTED_DEPTH";
  }
  return "NOT_VULNERABLE_AT_TESTED_DEPTH";
}

AuditReport audit_modulus(const Natural& n, const SearchConfig& cfg) {
  AuditReport report;
  report.modulus = n;
  report.r_max_tested = cfg.r_max;
  report.s_max_tested = cfg.s_max;

  const auto started = std::chrono::steady_clock::now();
  const CloseFactorOutcome outcome = close_factor(n);
  if (const auto* found = std::get_if<CloseFactors>(&outcome)) {
    report.verdict = Verdict::vulnerable_close_gap;
    report.factors = found->pair;
    report.i = found->i;
    report.n0 = found->pair.f + found->i;
  } else if (const auto* square = std::get_if<PerfectSquare>(&outcome)) {
    report.verdict = Verdict::vulnerable_close_gap;
    report.factors = FactorPair{square->root, square->root};
  } else if (cfg.r_max > 1) {
    if (auto hit = search_multiplier(n, cfg)) {
      report.verdict = Verdict::vulnerable_with_multiplier;
      Natural cofactor = n / hit->divisor;
      report.factors = hit->divisor < cofactor ? FactorPair{hit->divisor, std::move(cofactor)}
                                               : FactorPair{std::move(cofactor), hit->divisor};
      report.n0 = hit->n0;
      report.i = hit->i;
      report.hit = std::move(hit);
    }
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace closefactor
