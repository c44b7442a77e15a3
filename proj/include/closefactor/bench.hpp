#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "closefactor/natural.hpp"

namespace closefactor::bench {

// Exact rational scalar applied to the gap bound 2^((k+5)/4). The label
// keeps the user's spelling for stable CSV output.
struct GapMultiplier {
  Natural num;
  Natural den;
  std::string label;
};

// Accepts plain decimals ("2", "0.5", "1.25"); throws std::invalid_argument
// otherwise. The value is kept exact as num/den in lowest terms.
GapMultiplier parse_gap_multiplier(std::string_view text);

struct SweepSpec {
  std::vector<std::size_t> bit_sizes;
  std::vector<GapMultiplier> gap_multipliers;
  unsigned trials_per_cell = 1;
  std::uint64_t seed = 0;
  // Latency is the one nondeterministic column; clearing this zeroes it so
  // the CSV is byte-stable for a fixed (spec, seed).
  bool measure_latency = true;
};

struct SweepCell {
  std::size_t bit_size = 0;
  std::string gap_multiplier;  // label, as parsed
  unsigned trials = 0;         // completed trials; skips are excluded
  unsigned successes = 0;
  unsigned skipped = 0;        // generation failures, recorded not aborted
  bool all_within_guarantee = true;  // every realized gap met (q-p)^4 <= 2^(k+5)
  std::int64_t median_us = 0;
};

// For each (bit_size, gap_multiplier) cell: seeded prime pairs with gap
// targeted at multiplier * 2^((k+5)/4), close_factor per trial, success
// fraction and median attack latency. Rows come back sorted by
// (bit_size, gap_multiplier value). The trial corpus depends only on
// (spec, seed).
std::vector<SweepCell> run_sweep(const SweepSpec& spec);

// Header: bit_size,gap_multiplier,trials,successes,success_fraction,median_us
void write_csv(std::ostream& out, const std::vector<SweepCell>& cells);
std::string to_csv(const std::vector<SweepCell>& cells);

}  // namespace closefactor::bench
