#pragma once

// Gather and scatter kernels. The serial kernels are the reference the
// OpenMP kernels are tested against; both run the same per-range loop.
//
// Iteration i of a config is based at element i*delta of the large buffer:
//   gather:  small[j] = large[i*delta + idx[j]]
//   scatter: large[i*delta + idx[j]] = small[j]
//
// An observer is invoked after every iteration with (thread, i, small). The
// default observer is only a compiler memory barrier, which keeps the loads
// and stores of each iteration from being merged or elided.

#include <cstdint>

#include <omp.h>

#include "gsbench/arena.hpp"

namespace gsbench::kernels {

struct KernelShape {
  std::uint64_t length = 0;
  std::uint64_t delta = 0;
  std::uint64_t count = 0;
};

struct IterationRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Contiguous block of iterations owned by `thread` out of `threads`:
/// iteration i belongs to thread floor(i * threads / count).
constexpr IterationRange partition(std::uint64_t count, unsigned threads, unsigned thread) {
  auto first = [&](unsigned t) {
    const auto scaled = static_cast<unsigned __int128>(t) * count;
    return static_cast<std::uint64_t>((scaled + threads - 1) / threads);
  };
  return {first(thread), first(thread + 1)};
}

inline void clobber_memory() noexcept { asm volatile("" ::: "memory"); }

struct NoObserver {
  void operator()(unsigned, std::uint64_t, const double *) const noexcept { clobber_memory(); }
};

template <typename Observer>
inline void gather_range(const double *__restrict large, double *__restrict small,
                         const std::uint64_t *__restrict idx, const KernelShape &shape,
                         IterationRange range, unsigned thread, Observer &observer) {
  const std::uint64_t len = shape.length;
  for (std::uint64_t i = range.begin; i < range.end; ++i) {
    const double *__restrict src = large + i * shape.delta;
    for (std::uint64_t j = 0; j < len; ++j)
      small[j] = src[idx[j]];
    observer(thread, i, small);
  }
}

template <typename Observer>
inline void scatter_range(double *__restrict large, const double *__restrict small,
                          const std::uint64_t *__restrict idx, const KernelShape &shape,
                          IterationRange range, unsigned thread, Observer &observer) {
  const std::uint64_t len = shape.length;
  for (std::uint64_t i = range.begin; i < range.end; ++i) {
    double *__restrict dst = large + i * shape.delta;
    for (std::uint64_t j = 0; j < len; ++j)
      dst[idx[j]] = small[j];
    observer(thread, i, small);
  }
}

template <typename Observer = NoObserver>
void gather_serial(BufferArena &arena, const KernelShape &shape, Observer &&observer = {}) {
  gather_range(arena.large().data(), arena.small(0).data(), arena.indices(0).data(), shape,
               {0, shape.count}, 0, observer);
}

template <typename Observer = NoObserver>
void scatter_serial(BufferArena &arena, const KernelShape &shape, Observer &&observer = {}) {
  scatter_range(arena.large().data(), arena.small(0).data(), arena.indices(0).data(), shape,
                {0, shape.count}, 0, observer);
}

/// Runs on a team of `threads`; returns the team size OpenMP delivered, which
/// determines the iteration partition.
template <typename Observer = NoObserver>
unsigned gather_parallel(BufferArena &arena, const KernelShape &shape, unsigned threads,
                         Observer &&observer = {}) {
  unsigned team = 0;
  double *large = arena.large().data();
#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<unsigned>(omp_get_thread_num());
    const auto nt = static_cast<unsigned>(omp_get_num_threads());
#pragma omp master
    team = nt;
    gather_range(large, arena.small(t).data(), arena.indices(t).data(), shape,
                 partition(shape.count, nt, t), t, observer);
  }
  return team;
}

template <typename Observer = NoObserver>
unsigned scatter_parallel(BufferArena &arena, const KernelShape &shape, unsigned threads,
                          Observer &&observer = {}) {
  unsigned team = 0;
  double *large = arena.large().data();
#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<unsigned>(omp_get_thread_num());
    const auto nt = static_cast<unsigned>(omp_get_num_threads());
#pragma omp master
    team = nt;
    scatter_range(large, arena.small(t).data(), arena.indices(t).data(), shape,
                  partition(shape.count, nt, t), t, observer);
  }
  return team;
}

} // namespace gsbench::kernels
