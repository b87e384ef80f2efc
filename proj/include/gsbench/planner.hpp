#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsbench/patterns.hpp"

namespace CLI {
class App;
}

namespace gsbench {

enum class Kernel { Gather, Scatter };

enum class BackendKind { Serial, Parallel };

struct Backend {
  BackendKind kind = BackendKind::Parallel;
  unsigned threads = 1;

  static Backend serial() { return {BackendKind::Serial, 1}; }
  static Backend parallel(unsigned threads) { return {BackendKind::Parallel, threads}; }
  /// Parallel over every hardware thread OpenMP reports.
  static Backend parallel_default();

  unsigned thread_count() const noexcept { return kind == BackendKind::Serial ? 1 : threads; }
  bool operator==(const Backend &) const = default;
};

/// One benchmark measurement: `count` gathers (or scatters) of `pattern`,
/// iteration i based at element i*delta, timed `runs` times.
struct RunConfig {
  std::string name;
  Kernel kernel = Kernel::Gather;
  IndexPattern pattern;
  std::uint64_t delta = 0;
  std::uint64_t count = 1;
  unsigned runs = 10;
  Backend backend = Backend::parallel_default();

  bool operator==(const RunConfig &) const = default;
};

/// Sizes of the single arena allocation that serves a whole batch.
struct ArenaPlan {
  std::uint64_t large_elements = 0;
  std::uint64_t small_elements = 0;
  unsigned max_threads = 1;

  bool operator==(const ArenaPlan &) const = default;
};

std::string_view to_string(Kernel kernel) noexcept;
std::string_view to_string(BackendKind kind) noexcept;
/// Case-insensitive "gather" / "scatter". Throws ConfigError otherwise.
Kernel parse_kernel(std::string_view text);
BackendKind parse_backend(std::string_view text);

/// extent(pattern) + delta*(count-1): one past the last large-buffer element
/// the config touches. Throws ConfigError on 64-bit overflow.
std::uint64_t required_elements(const RunConfig &config);

/// Checks the RunConfig invariants (non-empty pattern, count >= 1, runs >= 1,
/// threads >= 1, sizing fits in 64 bits). Throws ConfigError.
void validate_config(const RunConfig &config);

/// Flags shared by every front end that builds a single RunConfig.
struct RunFlags {
  std::optional<std::string> kernel;
  std::optional<std::string> pattern;
  std::optional<std::uint64_t> delta;
  std::optional<std::uint64_t> count;
  std::optional<unsigned> runs;
  std::optional<std::string> backend;
  std::optional<unsigned> threads;
  std::optional<std::string> name;
};

/// Registers -k/-p/-d/-l/-r/-b/-t/-n on `app`, writing into `flags`.
void add_run_flags(CLI::App &app, RunFlags &flags);

/// Applies -b/-t to a backend. "serial" with an explicit thread count other
/// than 1 is a UsageError.
Backend resolve_backend(const std::optional<std::string> &backend,
                        const std::optional<unsigned> &threads);

/// Builds one RunConfig from parsed flags. Missing -k/-p/-d/-l raise
/// UsageError; a bad pattern or config raises ParseError/ConfigError.
RunConfig config_from_flags(const RunFlags &flags);

/// Parses a run-flag argument list (no program name) into a one-config batch.
std::vector<RunConfig> parse_cli(std::span<const std::string> args);

/// Parses a JSON array of config objects. Errors name the offending entry.
std::vector<RunConfig> parse_json(std::string_view document);

/// Serializes a batch in the schema parse_json reads. Generator patterns are
/// written in the pattern grammar, custom patterns as integer arrays.
std::string emit_json(std::span<const RunConfig> batch);

/// Throws ConfigError on an empty batch or an invalid config.
ArenaPlan plan_arena(std::span<const RunConfig> batch);

} // namespace gsbench
