#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "gsbench/planner.hpp"

namespace gsbench {

/// Source of the arena's backing memory. Tests substitute a counting
/// allocator to observe how many allocations a batch performs.
class ArenaAllocator {
public:
  virtual ~ArenaAllocator() = default;
  virtual void *allocate(std::size_t bytes, std::size_t alignment) = 0;
  virtual void deallocate(void *ptr, std::size_t bytes, std::size_t alignment) noexcept = 0;
};

/// Aligned operator new / delete.
ArenaAllocator &default_arena_allocator() noexcept;

inline constexpr std::size_t kCacheLine = 64;

/// All memory a batch touches, obtained in one allocation:
///
///   [ large buffer ][ slot 0 ][ slot 1 ] ... [ slot max_threads-1 ]
///
/// Each slot holds one thread's small buffer (gather destination / scatter
/// source) followed by that thread's private copy of the index buffer. Every
/// region starts on a cache line and is a whole number of cache lines long,
/// so no two threads' regions share a line.
class BufferArena {
public:
  explicit BufferArena(const ArenaPlan &plan,
                       ArenaAllocator &allocator = default_arena_allocator());
  ~BufferArena();

  BufferArena(BufferArena &&other) noexcept;
  BufferArena &operator=(BufferArena &&) = delete;
  BufferArena(const BufferArena &) = delete;
  BufferArena &operator=(const BufferArena &) = delete;

  const ArenaPlan &plan() const noexcept { return plan_; }

  std::span<double> large() noexcept { return {large_, plan_.large_elements}; }
  std::span<const double> large() const noexcept { return {large_, plan_.large_elements}; }

  /// Thread `thread`'s small buffer, plan().small_elements long.
  std::span<double> small(unsigned thread) noexcept;
  std::span<std::uint64_t> indices(unsigned thread) noexcept;

  std::size_t bytes() const noexcept { return bytes_; }

  /// Throws std::logic_error if `config` does not fit this arena.
  void check_fits(const RunConfig &config) const;

private:
  ArenaPlan plan_;
  ArenaAllocator *allocator_;
  std::size_t bytes_ = 0;
  std::size_t slot_bytes_ = 0;
  std::size_t small_bytes_ = 0;
  std::byte *base_ = nullptr;
  double *large_ = nullptr;
};

} // namespace gsbench
