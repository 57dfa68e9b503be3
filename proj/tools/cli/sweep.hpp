#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burrset/burrset.h"
#include "cache.hpp"

namespace burrcli {

struct SweepOptions {
  std::vector<std::uint64_t> b1_values;
  // Default per b1: [3 b1 + 5, 6 b1 + 10].
  std::optional<std::uint64_t> b2_min;
  std::optional<std::uint64_t> b2_max;
  // Candidates are scanned up to b1 + b2 + 1 + slack; slack defaults to b1.
  std::optional<std::uint64_t> b3_slack;
  unsigned jobs = 1;
  burr_limits limits = burr_limits_default();
  std::optional<std::string> cache_path;
  // Cells completed between cache checkpoints.
  std::size_t checkpoint_every = 16;
};

struct SweepRow {
  std::uint64_t b1 = 0;
  std::uint64_t b2 = 0;
  std::int64_t m = 0;
  std::uint64_t predicted_b3 = 0;
  std::optional<std::uint64_t> found_b3;
  bool match = false;
  std::uint64_t nodes = 0;  // summed over every candidate b3, cached or fresh
  bool decided = true;
  double seconds = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // canonical (b1, b2) order
  std::uint64_t new_nodes = 0;
  std::size_t cache_hits = 0;
  std::size_t searches = 0;
  bool any_inconclusive() const;
};

// Validates options (throws CliError) and runs every cell.
SweepReport run_sweep(const SweepOptions& opts);

// Header plus one line per row. Timing is appended unless deterministic.
std::string sweep_csv(const std::vector<SweepRow>& rows, bool deterministic);

}  // namespace burrcli
