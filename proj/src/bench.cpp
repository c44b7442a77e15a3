#include "closefactor/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "closefactor/keygen.hpp"

namespace closefactor::bench {

namespace {

using keygen::SplitMix64;

// SplitMix64 finalizer over a ^ rotated b: cell and trial streams stay
// independent of sweep execution order.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return SplitMix64(a ^ (b * 0x9E3779B97F4A7C15ull)).next();
}

Natural fourth_root_floor(const Natural& n) { return isqrt(isqrt(n)); }

bool multiplier_less(const GapMultiplier& a, const GapMultiplier& b) {
  return a.num * b.den < b.num * a.den;
}

struct Trial {
  Natural p;
  Natural q;
};

// Prime pair with gap targeted at multiplier * 2^((k_lo+5)/4): q is the
// largest probable prime in (p, p + target]. k_lo is the smallest bit size
// p*q can realize, so multiplier <= 1 keeps the pair inside the guarantee.
std::optional<Trial> make_trial(SplitMix64& rng, std::size_t bits, const GapMultiplier& mult) {
  const std::size_t half = (bits + 1) / 2;
  const std::size_t k_lo = 2 * half - 1;
  Natural scaled = mult.num * mult.num;
  scaled *= scaled;
  scaled <<= static_cast<mp_bitcnt_t>(k_lo + 5);
  Natural den4 = mult.den * mult.den;
  den4 *= den4;
  Natural target = fourth_root_floor(scaled / den4);
  if (target < 2) target = 2;  // p = q disallowed; the minimal odd-prime gap
  for (unsigned attempt = 0; attempt < 32; ++attempt) {
    const Natural p = keygen::random_prime(rng, half);
    Natural q = p + target;
    if (mpz_even_p(q.get_mpz_t())) q -= 1;
    for (; q > p; q -= 2) {
      if (keygen::is_probable_prime(q)) return Trial{p, std::move(q)};
    }
  }
  return std::nullopt;
}

std::int64_t median(std::vector<std::int64_t>& values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2;
}

}  // namespace

GapMultiplier parse_gap_multiplier(std::string_view text) {
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw std::invalid_argument("gap multiplier: empty value");
  }
  Natural num = 0;
  Natural den = 1;
  for (std::string_view part : {whole, frac}) {
    for (char c : part) {
      if (c < '0' || c > '9') throw std::invalid_argument("gap multiplier: not a decimal number");
      num = num * 10 + (c - '0');
    }
  }
  for (std::size_t d = 0; d < frac.size(); ++d) den *= 10;
  const Natural common = gcd(num, den);
  return GapMultiplier{num / common, den / common, std::string(text)};
}

std::vector<SweepCell> run_sweep(const SweepSpec& spec) {
  if (spec.trials_per_cell < 1) {
    throw std::invalid_argument("run_sweep: trials_per_cell must be >= 1");
  }
  if (spec.bit_sizes.empty() || spec.gap_multipliers.empty()) {
    throw std::invalid_argument("run_sweep: need at least one bit size and one multiplier");
  }

  std::vector<std::size_t> bits = spec.bit_sizes;
  std::sort(bits.begin(), bits.end());
  std::vector<GapMultiplier> mults = spec.gap_multipliers;
  std::sort(mults.begin(), mults.end(), multiplier_less);

  std::vector<SweepCell> cells;
  for (std::size_t b = 0; b < bits.size(); ++b) {
    for (std::size_t m = 0; m < mults.size(); ++m) {
      SweepCell cell;
      cell.bit_size = bits[b];
      cell.gap_multiplier = mults[m].label;
      const std::uint64_t cell_seed = mix_seed(mix_seed(spec.seed, bits[b]), m);
      std::vector<std::int64_t> latencies;
      for (unsigned t = 0; t < spec.trials_per_cell; ++t) {
        SplitMix64 rng(mix_seed(cell_seed, t));
        const auto trial = make_trial(rng, bits[b], mults[m]);
        if (!trial) {
          ++cell.skipped;
          continue;
        }
        const Natural n = trial->p * trial->q;
        const auto started = std::chrono::steady_clock::now();
        const CloseFactorOutcome outcome = close_factor(n);
        const auto elapsed = std::chrono::steady_clock::now() - started;
        ++cell.trials;
        if (std::holds_alternative<CloseFactors>(outcome)) ++cell.successes;
        cell.all_within_guarantee =
            cell.all_within_guarantee && gap_guarantee_holds(trial->p, trial->q, bit_size(n));
        if (spec.measure_latency) {
          latencies.push_back(
              std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count());
        }
      }
      cell.median_us = median(latencies);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

void write_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << "bit_size,gap_multiplier,trials,successes,success_fraction,median_us\n";
  for (const SweepCell& cell : cells) {
    const double fraction =
        cell.trials == 0 ? 0.0 : static_cast<double>(cell.successes) / cell.trials;
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4f", fraction);
    out << cell.bit_size << ',' << cell.gap_multiplier << ',' << cell.trials << ','
        << cell.successes << ',' << buffer << ',' << cell.median_us << '\n';
  }
}

std::string to_csv(const std::vector<SweepCell>& cells) {
  std::ostringstream out;
  write_csv(out, cells);
  return out.str();
}

}  // namespace closefactor::bench
