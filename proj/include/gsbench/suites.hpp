#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsbench/planner.hpp"

namespace gsbench {

struct Suite {
  std::string name;
  std::vector<RunConfig> configs;
  /// Position of the stride-1 reference config.
  std::size_t baseline_index = 0;
  /// Scatter reference in suites that mix both kernels.
  std::optional<std::size_t> scatter_baseline_index;
};

struct SuiteOptions {
  /// Data volume each config aims to move.
  std::uint64_t target_bytes = std::uint64_t{1} << 28;
  /// Ceiling on the large buffer; configs whose delta would need more have
  /// their count reduced so the whole suite still fits one arena.
  std::uint64_t max_arena_bytes = std::uint64_t{1} << 30;
  unsigned runs = 10;
  Backend backend = Backend::parallel_default();
};

/// One row of the application pattern table.
struct AppPattern {
  std::string_view name;
  Kernel kernel;
  std::uint64_t delta;
  std::string_view indices;
  std::string_view type;
};

/// The 34 application-derived patterns (29 gathers, then 5 scatters).
std::span<const AppPattern> app_patterns() noexcept;

/// Iterations needed to move about target_bytes with a `length`-entry
/// pattern, capped so extent + delta*(count-1) stays within max_arena_bytes.
/// Never less than 1.
std::uint64_t count_for(std::uint64_t length, std::uint64_t extent, std::uint64_t delta,
                        const SuiteOptions &options);

/// UNIFORM:len:stride for strides 1..128 (doubling), delta = len*stride so
/// consecutive iterations never share an element. Baseline: stride 1.
Suite suite_ustride(Kernel kernel, std::uint64_t len = 16, const SuiteOptions &options = {});

/// UNIFORM:8:1, delta 8, 2^24 gathers. Ignores target_bytes.
Suite suite_stream_like(const SuiteOptions &options = {});

/// The application table, optionally restricted to one kernel, with a
/// UNIFORM:16:1 delta-16 baseline injected ahead of each kernel's rows.
Suite suite_apps(std::optional<Kernel> kernel_filter = std::nullopt,
                 const SuiteOptions &options = {});

/// ustride-gather, ustride-scatter, stream, apps, apps-gather, apps-scatter.
std::span<const std::string_view> suite_names() noexcept;

/// Throws ConfigError for an unknown name.
Suite make_suite(std::string_view name, const SuiteOptions &options = {});

} // namespace gsbench
