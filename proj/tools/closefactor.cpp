// closefactor: factor / audit / gen / count-squares / bench front end.
//
// Exit codes (stable for scripting):
//   0  success / factored / vulnerable
//   2  attack not applicable at the tested depth
//   64 usage error (bad flags, unparsable input, invalid recipe)
//   65 domain or data error (even modulus, generation failure, ...)

#include <fstream>
#include <iostream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "closefactor/audit.hpp"
#include "closefactor/bench.hpp"
#include "closefactor/keygen.hpp"
#include "closefactor/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotApplicable = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

using closefactor::Natural;
using nlohmann::json;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int data_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitData;
}

std::string dec(const Natural& n) { return closefactor::to_dec_string(n); }

// ---------------------------------------------------------------- factor --

int run_factor(const std::string& input, bool as_json) {
  const auto n = closefactor::parse_natural(input);
  if (!n) return usage_error("'" + input + "' is not a positive integer");
  closefactor::CloseFactorOutcome outcome;
  try {
    outcome = closefactor::close_factor(*n);
  } catch (const std::domain_error& e) {
    return data_error(e.what());
  }

  if (const auto* found = std::get_if<closefactor::CloseFactors>(&outcome)) {
    if (as_json) {
      json out{{"modulus", dec(*n)},
               {"outcome", "factored"},
               {"factors", {dec(found->pair.f), dec(found->pair.g)}},
               {"n0", dec(found->pair.f + found->i)},
               {"i", dec(found->i)}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << dec(found->pair.f) << " " << dec(found->pair.g) << "\n";
    }
    return kExitOk;
  }
  if (const auto* square = std::get_if<closefactor::PerfectSquare>(&outcome)) {
    if (as_json) {
      json out{{"modulus", dec(*n)},
               {"outcome", "perfect_square"},
               {"factors", {dec(square->root), dec(square->root)}},
               {"root", dec(square->root)}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << dec(square->root) << " " << dec(square->root) << "\n";
    }
    return kExitOk;
  }
  const auto& na = std::get<closefactor::NotApplicable>(outcome);
  if (as_json) {
    json out{{"modulus", dec(*n)}, {"outcome", "not_applicable"}, {"residual", dec(na.residual)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "not applicable: residual " << dec(na.residual) << " is not a perfect square\n";
  }
  return kExitNotApplicable;
}

// ----------------------------------------------------------------- audit --

json report_to_json(const closefactor::AuditReport& report) {
  json out{{"modulus", dec(report.modulus)},
           {"verdict", std::string(to_string(report.verdict))},
           {"elapsed_ms", report.elapsed_ms}};
  if (report.factors) out["factors"] = {dec(report.factors->f), dec(report.factors->g)};
  if (report.n0) out["n0"] = dec(*report.n0);
  if (report.i) out["i"] = dec(*report.i);
  if (report.hit) {
    out["r"] = dec(report.hit->r);
    out["s"] = dec(report.hit->s);
  }
  return out;
}

void print_report_line(const closefactor::AuditReport& report) {
  std::cout << dec(report.modulus) << " " << to_string(report.verdict);
  if (report.factors) {
    std::cout << " f=" << dec(report.factors->f) << " g=" << dec(report.factors->g);
  }
  if (report.hit) std::cout << " r=" << dec(report.hit->r) << " s=" << dec(report.hit->s);
  if (report.n0) std::cout << " n0=" << dec(*report.n0);
  if (report.i) std::cout << " i=" << dec(*report.i);
  std::cout << " r_max=" << dec(report.r_max_tested) << " s_max=" << dec(report.s_max_tested)
            << " elapsed_ms=" << report.elapsed_ms << "\n";
}

struct AuditFlags {
  unsigned long r_max = 1;
  unsigned long s_max = 1;
  bool as_json = false;
};

closefactor::SearchConfig search_config(const AuditFlags& flags) {
  closefactor::SearchConfig cfg;
  cfg.r_max = static_cast<unsigned long>(flags.r_max);
  cfg.s_max = static_cast<unsigned long>(flags.s_max);
  return cfg;
}

int run_audit_single(const std::string& input, const AuditFlags& flags) {
  const auto n = closefactor::parse_natural(input);
  if (!n) return usage_error("'" + input + "' is not a positive integer");
  closefactor::AuditReport report;
  try {
    report = closefactor::audit_modulus(*n, search_config(flags));
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::domain_error& e) {
    return data_error(e.what());
  }
  if (flags.as_json) {
    std::cout << report_to_json(report).dump() << "\n";
  } else {
    print_report_line(report);
  }
  return report.verdict == closefactor::Verdict::not_vulnerable_at_tested_depth
             ? kExitNotApplicable
             : kExitOk;
}

// One report line per input line, in input order; parse failures become
// error lines and flip the final exit status without stopping the batch.
int run_audit_batch(std::istream& in, const AuditFlags& flags) {
  const closefactor::SearchConfig cfg = search_config(flags);
  bool any_error = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto n = closefactor::parse_natural(line);
    if (!n) {
      any_error = true;
      if (flags.as_json) {
        std::cout << json{{"input", line}, {"error", "not a positive integer"}}.dump() << "\n";
      } else {
        std::cout << line << " ERROR not a positive integer\n";
      }
      continue;
    }
    try {
      const auto report = closefactor::audit_modulus(*n, cfg);
      if (flags.as_json) {
        std::cout << report_to_json(report).dump() << "\n";
      } else {
        print_report_line(report);
      }
    } catch (const std::exception& e) {
      any_error = true;
      if (flags.as_json) {
        std::cout << json{{"input", line}, {"error", e.what()}}.dump() << "\n";
      } else {
        std::cout << line << " ERROR " << e.what() << "\n";
      }
    }
  }
  return any_error ? kExitData : kExitOk;
}

// ------------------------------------------------------------------- gen --

int run_gen(const std::string& mode_token, std::size_t bits, unsigned alpha, std::uint64_t seed,
            bool as_json) {
  closefactor::keygen::ModulusRecipe recipe;
  recipe.bits = bits;
  recipe.alpha = alpha;
  recipe.seed = seed;
  if (mode_token == "close") {
    recipe.mode = closefactor::keygen::GenMode::close_gap;
  } else if (mode_token == "msb") {
    recipe.mode = closefactor::keygen::GenMode::shared_msb;
  } else if (mode_token == "safe") {
    recipe.mode = closefactor::keygen::GenMode::safe;
  } else if (mode_token == "special") {
    recipe.mode = closefactor::keygen::GenMode::special_family;
  } else {
    return usage_error("--mode must be one of close|msb|safe|special");
  }

  closefactor::keygen::ModulusTriple triple;
  try {
    triple = closefactor::keygen::gen_modulus(recipe);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const closefactor::keygen::generation_error& e) {
    return data_error(e.what());
  }
  if (as_json) {
    json out{{"mode", mode_token}, {"n", dec(triple.n)}, {"p", dec(triple.p)},
             {"q", dec(triple.q)}};
    if (recipe.mode == closefactor::keygen::GenMode::special_family) {
      out["alpha"] = alpha;
    } else {
      out["bits"] = bits;
      out["seed"] = seed;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n=" << dec(triple.n) << " p=" << dec(triple.p) << " q=" << dec(triple.q)
              << " mode=" << mode_token << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------- count-squares --

int run_count_squares(const std::string& n_text, const std::string& m_text, bool as_json) {
  const auto n = closefactor::parse_natural(n_text);
  const auto m = closefactor::parse_natural(m_text);
  if (!n || !m) return usage_error("count-squares expects two positive integers");
  if (*n > *m) return usage_error("count-squares: need n <= m");
  const Natural count = closefactor::count_squares(*n, *m);
  if (as_json) {
    std::cout << json{{"n", dec(*n)}, {"m", dec(*m)}, {"count", dec(count)}}.dump() << "\n";
  } else {
    std::cout << dec(count) << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- bench --

int run_bench(const std::vector<std::size_t>& bits, const std::vector<std::string>& mult_tokens,
              unsigned trials, std::uint64_t seed, bool no_timing) {
  closefactor::bench::SweepSpec spec;
  spec.bit_sizes = bits;
  spec.trials_per_cell = trials;
  spec.seed = seed;
  spec.measure_latency = !no_timing;
  try {
    for (const std::string& token : mult_tokens) {
      spec.gap_multipliers.push_back(closefactor::bench::parse_gap_multiplier(token));
    }
    const auto cells = closefactor::bench::run_sweep(spec);
    closefactor::bench::write_csv(std::cout, cells);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const closefactor::keygen::generation_error& e) {
    return data_error(e.what());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Close-prime factoring, RSA/Rabin weak-modulus audit, and key tooling"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // factor
  auto* factor = app.add_subcommand("factor", "Factor n via the first square above it");
  std::string factor_input;
  bool factor_json = false;
  factor->add_option("n", factor_input, "modulus (decimal or 0x hex)")->required();
  factor->add_flag("--json", factor_json, "emit one JSON object");
  factor->callback([&] { exit_code = run_factor(factor_input, factor_json); });

  // audit
  auto* audit = app.add_subcommand("audit", "Per-modulus weak-key verdict with evidence");
  std::string audit_input;
  AuditFlags audit_flags;
  bool batch = false;
  audit->add_option("input", audit_input, "modulus, or the input file with --batch");
  audit->add_flag("--batch", batch, "read one modulus per line (from the file argument or stdin)");
  audit->add_option("--r-max", audit_flags.r_max, "multiplier sweep depth (default 1: no sweep)");
  audit->add_option("--s-max", audit_flags.s_max, "dual-multiplier depth (default 1: single)");
  audit->add_flag("--json", audit_flags.as_json, "emit one JSON object per report");
  audit->callback([&] {
    if (audit_flags.r_max < 1 || audit_flags.s_max < 1) {
      exit_code = usage_error("--r-max and --s-max must be >= 1");
      return;
    }
    if (batch) {
      if (!audit_input.empty() && audit_input != "-") {
        std::ifstream file(audit_input);
        if (!file) {
          exit_code = usage_error("cannot open batch file '" + audit_input + "'");
          return;
        }
        exit_code = run_audit_batch(file, audit_flags);
      } else {
        exit_code = run_audit_batch(std::cin, audit_flags);
      }
    } else if (audit_input.empty()) {
      exit_code = usage_error("audit needs a modulus argument or --batch");
    } else {
      exit_code = run_audit_single(audit_input, audit_flags);
    }
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a test modulus n = p*q");
  std::string gen_mode;
  std::size_t gen_bits = 0;
  unsigned gen_alpha = 0;
  std::uint64_t gen_seed = 0;
  bool gen_json = false;
  gen->add_option("--mode", gen_mode, "close|msb|safe|special")->required();
  gen->add_option("--bits", gen_bits, "target bit size of n (random modes)");
  gen->add_option("--alpha", gen_alpha, "family exponent (special mode)");
  gen->add_option("--seed", gen_seed, "deterministic seed (default 0)");
  gen->add_flag("--json", gen_json, "emit one JSON object");
  gen->callback([&] { exit_code = run_gen(gen_mode, gen_bits, gen_alpha, gen_seed, gen_json); });

  // count-squares
  auto* count = app.add_subcommand("count-squares", "Count perfect squares x^2 with n < x^2 <= m");
  std::string count_n;
  std::string count_m;
  bool count_json = false;
  count->add_option("n", count_n, "lower bound (exclusive)")->required();
  count->add_option("m", count_m, "upper bound (inclusive)")->required();
  count->add_flag("--json", count_json, "emit one JSON object");
  count->callback([&] { exit_code = run_count_squares(count_n, count_m, count_json); });

  // bench
  auto* bench = app.add_subcommand("bench", "Success-rate and latency sweep, CSV on stdout");
  std::vector<std::size_t> bench_bits;
  std::vector<std::string> bench_mults;
  unsigned bench_trials = 10;
  std::uint64_t bench_seed = 0;
  bool bench_no_timing = false;
  bench->add_option("--bits", bench_bits, "modulus bit sizes")->required()->delimiter(',');
  bench->add_option("--gap-mults", bench_mults, "multipliers applied to the gap bound")
      ->required()
      ->delimiter(',');
  bench->add_option("--trials", bench_trials, "trials per cell (default 10)");
  bench->add_option("--seed", bench_seed, "deterministic seed (default 0)");
  bench->add_flag("--no-timing", bench_no_timing, "zero the latency column for byte-stable CSV");
  bench->callback([&] {
    exit_code = run_bench(bench_bits, bench_mults, bench_trials, bench_seed, bench_no_timing);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return exit_code;
}
