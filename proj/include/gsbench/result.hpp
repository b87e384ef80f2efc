#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsbench/planner.hpp"

namespace gsbench {

/// Timing and accounting for one config. Carries a copy of the config fields
/// that reports print; backend and thread count are deliberately absent so a
/// report does not depend on how the run was parallelized.
struct KernelResult {
  std::string config_name;
  Kernel kernel = Kernel::Gather;
  std::string pattern;
  std::uint64_t pattern_length = 0;
  std::uint64_t delta = 0;
  std::uint64_t count = 0;
  unsigned runs = 0;
  /// True for the stride-1 reference config a suite injects.
  bool baseline = false;

  std::vector<double> run_times;
  double min_time = 0.0;
  std::uint64_t moved_bytes = 0;
  double bandwidth_mb_s = 0.0;

  bool operator==(const KernelResult &) const = default;
};

/// 8 * len(pattern) * count. Index-buffer traffic is not counted.
std::uint64_t moved_bytes(const RunConfig &config);

/// Builds the result for `config` from its measured run times. Throws
/// ConfigError when run_times is empty or any entry is not positive.
KernelResult make_result(const RunConfig &config, std::vector<double> run_times,
                         bool baseline = false);

} // namespace gsbench
