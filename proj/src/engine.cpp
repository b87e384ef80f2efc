#include "gsbench/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "gsbench/error.hpp"
#include "gsbench/kernels.hpp"

namespace gsbench {

namespace {

kernels::KernelShape shape_of(const RunConfig &config) {
  return {config.pattern.size(), config.delta, config.count};
}

bool is_parallel(const RunConfig &config) {
  return config.backend.kind == BackendKind::Parallel;
}

unsigned owner_of(std::uint64_t iteration, std::uint64_t count, unsigned team) {
  return static_cast<unsigned>(static_cast<unsigned __int128>(iteration) * team / count);
}

void fill_parallel(std::span<double> buffer, std::uint64_t n, unsigned threads,
                   auto &&value_of) {
  const auto limit = static_cast<std::int64_t>(n);
  double *data = buffer.data();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t k = 0; k < limit; ++k)
    data[k] = value_of(static_cast<std::uint64_t>(k));
}

std::string where(const RunConfig &config) {
  return config.name.empty() ? std::string("config") : "config '" + config.name + "'";
}

} // namespace

std::uint64_t moved_bytes(const RunConfig &config) {
  std::uint64_t per_iteration = 0;
  std::uint64_t total = 0;
  if (__builtin_mul_overflow(std::uint64_t{sizeof(double)}, config.pattern.size(),
                             &per_iteration) ||
      __builtin_mul_overflow(per_iteration, config.count, &total))
    throw ConfigError(where(config) + ": moved bytes overflow 64 bits");
  return total;
}

KernelResult make_result(const RunConfig &config, std::vector<double> run_times, bool baseline) {
  if (run_times.empty())
    throw ConfigError(where(config) + ": no run times");
  for (double t : run_times)
    if (!(t > 0.0))
      throw ConfigError(where(config) + ": timer produced a non-positive run time");

  KernelResult r;
  r.config_name = config.name;
  r.kernel = config.kernel;
  r.pattern = render(config.pattern);
  r.pattern_length = config.pattern.size();
  r.delta = config.delta;
  r.count = config.count;
  r.runs = config.runs;
  r.baseline = baseline;
  r.min_time = *std::min_element(run_times.begin(), run_times.end());
  r.run_times = std::move(run_times);
  r.moved_bytes = moved_bytes(config);
  r.bandwidth_mb_s = static_cast<double>(r.moved_bytes) / r.min_time / 1e6;
  return r;
}

bool iterations_overlap(const IndexPattern &pattern, std::uint64_t delta, std::uint64_t count) {
  if (count <= 1)
    return false;
  if (delta == 0)
    return true;
  // Two offsets collide across iterations only if they share a residue mod
  // delta; within a residue class the closest pair decides.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;
  keyed.reserve(pattern.size());
  for (auto v : pattern.indices)
    keyed.emplace_back(v % delta, v);
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  for (std::size_t k = 1; k < keyed.size(); ++k) {
    if (keyed[k].first != keyed[k - 1].first)
      continue;
    const std::uint64_t steps = (keyed[k].second - keyed[k - 1].second) / delta;
    if (steps < count)
      return true;
  }
  return false;
}

double scatter_tag(unsigned thread, std::uint64_t lane) noexcept {
  return static_cast<double>((static_cast<std::uint64_t>(thread) << 32) | (lane & 0xffffffffu));
}

Engine::Engine(BufferArena &arena, Timer &timer) : arena_(arena), timer_(timer) {
  // The iteration partition assumes the team size requested is delivered.
  omp_set_dynamic(0);
}

void Engine::prepare(const RunConfig &config) {
  validate_config(config);
  arena_.check_fits(config);
  const auto &idx = config.pattern.indices;
  for (unsigned t = 0; t < config.backend.thread_count(); ++t) {
    std::copy(idx.begin(), idx.end(), arena_.indices(t).begin());
    auto small = arena_.small(t);
    for (std::uint64_t j = 0; j < idx.size(); ++j)
      small[j] = config.kernel == Kernel::Scatter ? scatter_tag(t, j) : 0.0;
  }
}

void Engine::execute(const RunConfig &config) {
  const auto shape = shape_of(config);
  const unsigned threads = config.backend.thread_count();
  if (config.kernel == Kernel::Gather) {
    if (is_parallel(config))
      kernels::gather_parallel(arena_, shape, threads);
    else
      kernels::gather_serial(arena_, shape);
  } else {
    if (is_parallel(config))
      kernels::scatter_parallel(arena_, shape, threads);
    else
      kernels::scatter_serial(arena_, shape);
  }
}

KernelResult Engine::run_gather(const RunConfig &config) {
  if (config.kernel != Kernel::Gather)
    throw ConfigError(where(config) + ": run_gather called on a scatter config");
  prepare(config);
  std::vector<double> times;
  times.reserve(config.runs);
  for (unsigned r = 0; r < config.runs; ++r) {
    const double start = timer_.now();
    execute(config);
    const double stop = timer_.now();
    times.push_back(stop - start);
    for (unsigned t = 0; t < config.backend.thread_count(); ++t)
      checksum_ += arena_.small(t)[0];
  }
  return make_result(config, std::move(times));
}

KernelResult Engine::run_scatter(const RunConfig &config) {
  if (config.kernel != Kernel::Scatter)
    throw ConfigError(where(config) + ": run_scatter called on a gather config");
  prepare(config);
  std::vector<double> times;
  times.reserve(config.runs);
  const std::uint64_t probe = config.pattern.indices.front();
  for (unsigned r = 0; r < config.runs; ++r) {
    const double start = timer_.now();
    execute(config);
    const double stop = timer_.now();
    times.push_back(stop - start);
    checksum_ += arena_.large()[probe];
  }
  return make_result(config, std::move(times));
}

KernelResult Engine::run(const RunConfig &config) {
  prepare(config);
  execute(config);
  return config.kernel == Kernel::Gather ? run_gather(config) : run_scatter(config);
}

std::vector<KernelResult> Engine::sweep(std::span<const RunConfig> batch) {
  std::vector<KernelResult> results;
  results.reserve(batch.size());
  for (const auto &config : batch)
    results.push_back(run(config));
  return results;
}

ValidationVerdict Engine::validate(const RunConfig &config) {
  const std::uint64_t required = required_elements(config);
  const unsigned threads = config.backend.thread_count();
  const auto shape = shape_of(config);
  const auto &idx = config.pattern.indices;

  if (config.kernel == Kernel::Scatter && is_parallel(config) && threads > 1 &&
      iterations_overlap(config.pattern, config.delta, config.count))
    throw ConfigError(where(config) +
                      ": nondeterministic overlap; parallel scatter iterations write the same "
                      "elements, validate with the serial backend");
  prepare(config);

  ValidationVerdict verdict;
  if (config.kernel == Kernel::Gather) {
    fill_parallel(arena_.large(), required, arena_.plan().max_threads,
                  [](std::uint64_t k) { return static_cast<double>(k); });

    struct Mismatch {
      std::uint64_t iteration = 0;
      std::uint64_t lane = 0;
      double got = 0.0;
      bool found = false;
      std::uint64_t seen = 0;
    };
    // One cache line per thread keeps the observers from false sharing.
    struct alignas(kCacheLine) Slot {
      Mismatch m;
    };
    std::vector<Slot> slots(threads);
    auto observer = [&](unsigned t, std::uint64_t i, const double *small) {
      auto &m = slots[t].m;
      ++m.seen;
      if (m.found)
        return;
      for (std::uint64_t j = 0; j < idx.size(); ++j) {
        if (small[j] != static_cast<double>(i * config.delta + idx[j])) {
          m = {i, j, small[j], true, m.seen};
          return;
        }
      }
    };
    if (is_parallel(config))
      kernels::gather_parallel(arena_, shape, threads, observer);
    else
      kernels::gather_serial(arena_, shape, observer);

    std::uint64_t seen = 0;
    const Mismatch *first = nullptr;
    for (const auto &slot : slots) {
      seen += slot.m.seen;
      if (slot.m.found && (!first || slot.m.iteration < first->iteration))
        first = &slot.m;
    }
    if (first) {
      verdict.passed = false;
      verdict.iteration = first->iteration;
      verdict.element = first->lane;
      verdict.message = "gather mismatch at iteration " + std::to_string(first->iteration) +
                        " lane " + std::to_string(first->lane) + ": expected " +
                        std::to_string(first->iteration * config.delta + idx[first->lane]) +
                        ", got " + std::to_string(first->got);
    } else if (seen != config.count) {
      verdict.passed = false;
      verdict.message = "gather executed " + std::to_string(seen) + " iterations, expected " +
                        std::to_string(config.count);
    }
    return verdict;
  }

  constexpr double kUntouched = -1.0;
  fill_parallel(arena_.large(), required, arena_.plan().max_threads,
                [](std::uint64_t) { return kUntouched; });
  unsigned team = 1;
  if (is_parallel(config))
    team = kernels::scatter_parallel(arena_, shape, threads);
  else
    kernels::scatter_serial(arena_, shape);

  // Walk the writes backwards so the first visit of an element is its last
  // writer in program order.
  const auto large = arena_.large();
  std::vector<bool> written(required, false);
  std::uint64_t bad = std::numeric_limits<std::uint64_t>::max();
  double bad_expected = 0.0;
  for (std::uint64_t i = config.count; i-- > 0;) {
    const unsigned owner = is_parallel(config) ? owner_of(i, config.count, team) : 0;
    for (std::uint64_t j = idx.size(); j-- > 0;) {
      const std::uint64_t e = i * config.delta + idx[j];
      if (written[e])
        continue;
      written[e] = true;
      const double expected = scatter_tag(owner, j);
      if (large[e] != expected && e < bad) {
        bad = e;
        bad_expected = expected;
      }
    }
  }
  for (std::uint64_t e = 0; e < std::min(required, bad); ++e) {
    if (!written[e] && large[e] != kUntouched) {
      bad = e;
      bad_expected = kUntouched;
      break;
    }
  }
  if (bad != std::numeric_limits<std::uint64_t>::max()) {
    verdict.passed = false;
    verdict.element = bad;
    verdict.message = "scatter mismatch at element " + std::to_string(bad) + ": expected " +
                      std::to_string(bad_expected) + ", got " + std::to_string(large[bad]);
  }
  return verdict;
}

BatchOutcome run_batch(std::span<const RunConfig> batch, Timer &timer,
                       ArenaAllocator &allocator) {
  BatchOutcome outcome;
  if (batch.empty())
    return outcome;
  BufferArena arena(plan_arena(batch), allocator);
  Engine engine(arena, timer);
  outcome.results = engine.sweep(batch);
  outcome.checksum = engine.checksum();
  return outcome;
}

} // namespace gsbench
