#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsbench/arena.hpp"
#include "gsbench/planner.hpp"
#include "gsbench/result.hpp"
#include "gsbench/timer.hpp"

namespace gsbench {

struct ValidationVerdict {
  bool passed = true;
  std::string message;
  /// Large-buffer element (scatter) or small-buffer lane (gather) of the
  /// first mismatch.
  std::optional<std::uint64_t> element;
  /// Iteration of the first mismatch (gather only).
  std::optional<std::uint64_t> iteration;
};

/// True if two different iterations of the config write the same
/// large-buffer element, i.e. some pair of distinct offsets a < b has
/// (b - a) = k*delta with 1 <= k < count.
bool iterations_overlap(const IndexPattern &pattern, std::uint64_t delta, std::uint64_t count);

/// Value a scatter validation places in lane `lane` of thread `thread`'s small
/// buffer; exactly representable as a double.
double scatter_tag(unsigned thread, std::uint64_t lane) noexcept;

/// Runs configs against one pre-allocated arena. Not thread-safe; the
/// parallelism lives inside each kernel invocation.
class Engine {
public:
  Engine(BufferArena &arena, Timer &timer);

  /// config.runs timed sweeps of all count iterations. No warm-up.
  KernelResult run_gather(const RunConfig &config);
  KernelResult run_scatter(const RunConfig &config);

  /// One untimed warm-up pass, then the timed runs of the config's kernel.
  KernelResult run(const RunConfig &config);

  /// Executes one untimed pass with known fill values and checks every
  /// produced element against a direct interpretation of the access rule.
  /// A parallel scatter whose iterations overlap throws ConfigError
  /// ("nondeterministic overlap"): its final values depend on scheduling.
  ValidationVerdict validate(const RunConfig &config);

  /// run() over every config, in order.
  std::vector<KernelResult> sweep(std::span<const RunConfig> batch);

  /// Running fold of one buffer element per timed run.
  double checksum() const noexcept { return checksum_; }

private:
  void prepare(const RunConfig &config);
  void execute(const RunConfig &config);

  BufferArena &arena_;
  Timer &timer_;
  double checksum_ = 0.0;
};

/// Plans the arena for `batch`, allocates it once from `allocator`, and sweeps.
struct BatchOutcome {
  std::vector<KernelResult> results;
  double checksum = 0.0;
};
BatchOutcome run_batch(std::span<const RunConfig> batch, Timer &timer,
                       ArenaAllocator &allocator = default_arena_allocator());

} // namespace gsbench
