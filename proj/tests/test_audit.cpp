#include <doctest.h>

#include <stdexcept>

#include "closefactor/audit.hpp"

using closefactor::audit_modulus;
using closefactor::AuditReport;
using closefactor::FactorPair;
using closefactor::Natural;
using closefactor::SearchConfig;
using closefactor::Verdict;

TEST_CASE("audit verdicts on the paper modules") {
  SUBCASE("2773 falls to the plain attack") {
    const AuditReport report = audit_modulus(2773, SearchConfig{1, 1, true});
    CHECK(report.verdict == Verdict::vulnerable_close_gap);
    REQUIRE(report.factors.has_value());
    CHECK(*report.factors == FactorPair{47, 59});
    REQUIRE(report.n0.has_value());
    CHECK(*report.n0 == 53);
    REQUIRE(report.i.has_value());
    CHECK(*report.i == 6);
    CHECK(!report.hit.has_value());
  }
  SUBCASE("136793 needs the multiplier sweep") {
    const AuditReport report = audit_modulus(136793, SearchConfig{50, 1, true});
    CHECK(report.verdict == Verdict::vulnerable_with_multiplier);
    REQUIRE(report.hit.has_value());
    CHECK(report.hit->r == 17);
    CHECK(report.hit->divisor == 89);
    REQUIRE(report.factors.has_value());
    CHECK(*report.factors == FactorPair{89, 1537});
  }
  SUBCASE("1081 survives depth 1") {
    const AuditReport report = audit_modulus(1081, SearchConfig{1, 1, true});
    CHECK(report.verdict == Verdict::not_vulnerable_at_tested_depth);
    CHECK(!report.factors.has_value());
    CHECK(report.r_max_tested == 1);
  }
  SUBCASE("a perfect square is vulnerable with equal factors") {
    const AuditReport report = audit_modulus(9, SearchConfig{1, 1, true});
    CHECK(report.verdict == Verdict::vulnerable_close_gap);
    REQUIRE(report.factors.has_value());
    CHECK(*report.factors == FactorPair{3, 3});
  }
}

TEST_CASE("vulnerable evidence always multiplies back") {
  for (unsigned long v : {2773ul, 9ul, 15211ul, 136793ul, 155227ul, 24961ul}) {
    const Natural n(v);
    const AuditReport report = audit_modulus(n, SearchConfig{30, 15, true});
    if (report.verdict == Verdict::not_vulnerable_at_tested_depth) continue;
    REQUIRE(report.factors.has_value());
    REQUIRE(report.factors->f * report.factors->g == n);
    REQUIRE(report.factors->f <= report.factors->g);
  }
}

TEST_CASE("audit propagates domain errors for even moduli") {
  CHECK_THROWS_AS(audit_modulus(1082, SearchConfig{1, 1, true}), std::domain_error);
}
