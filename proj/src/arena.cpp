#include "gsbench/arena.hpp"

#include <cstring>
#include <limits>
#include <new>
#include <stdexcept>

#include <omp.h>

#include "gsbench/error.hpp"

namespace gsbench {

namespace {

class NewDeleteAllocator final : public ArenaAllocator {
public:
  void *allocate(std::size_t bytes, std::size_t alignment) override {
    return ::operator new(bytes, std::align_val_t{alignment});
  }
  void deallocate(void *ptr, std::size_t, std::size_t alignment) noexcept override {
    ::operator delete(ptr, std::align_val_t{alignment});
  }
};

std::size_t line_bytes(std::uint64_t elements, std::size_t element_size) {
  constexpr auto kLimit = std::numeric_limits<std::size_t>::max() - kCacheLine;
  if (elements > kLimit / element_size)
    throw ConfigError("arena size overflows the address space");
  const std::size_t raw = static_cast<std::size_t>(elements) * element_size;
  return (raw + kCacheLine - 1) / kCacheLine * kCacheLine;
}

} // namespace

ArenaAllocator &default_arena_allocator() noexcept {
  static NewDeleteAllocator instance;
  return instance;
}

BufferArena::BufferArena(const ArenaPlan &plan, ArenaAllocator &allocator)
    : plan_(plan), allocator_(&allocator) {
  if (plan_.large_elements == 0 || plan_.small_elements == 0 || plan_.max_threads == 0)
    throw ConfigError("arena plan has an empty region");

  const std::size_t large_bytes = line_bytes(plan_.large_elements, sizeof(double));
  small_bytes_ = line_bytes(plan_.small_elements, sizeof(double));
  slot_bytes_ = small_bytes_ + line_bytes(plan_.small_elements, sizeof(std::uint64_t));
  const std::size_t slots = slot_bytes_ * plan_.max_threads;
  if (slots / plan_.max_threads != slot_bytes_ || large_bytes > SIZE_MAX - slots)
    throw ConfigError("arena size overflows the address space");
  bytes_ = large_bytes + slots;

  try {
    base_ = static_cast<std::byte *>(allocator_->allocate(bytes_, kCacheLine));
  } catch (const std::bad_alloc &) {
    throw ConfigError("cannot allocate a " + std::to_string(bytes_) + "-byte arena");
  }
  large_ = reinterpret_cast<double *>(base_);

  // First touch from the same static partition the kernels use.
  const auto n = static_cast<std::int64_t>(plan_.large_elements);
#pragma omp parallel for schedule(static) num_threads(plan_.max_threads)
  for (std::int64_t k = 0; k < n; ++k)
    large_[k] = 0.0;
  std::memset(base_ + large_bytes, 0, slots);
}

BufferArena::BufferArena(BufferArena &&other) noexcept
    : plan_(other.plan_), allocator_(other.allocator_), bytes_(other.bytes_),
      slot_bytes_(other.slot_bytes_), small_bytes_(other.small_bytes_), base_(other.base_),
      large_(other.large_) {
  other.base_ = nullptr;
  other.large_ = nullptr;
}

BufferArena::~BufferArena() {
  if (base_)
    allocator_->deallocate(base_, bytes_, kCacheLine);
}

std::span<double> BufferArena::small(unsigned thread) noexcept {
  auto *slot = base_ + (bytes_ - slot_bytes_ * (plan_.max_threads - thread));
  return {reinterpret_cast<double *>(slot), plan_.small_elements};
}

std::span<std::uint64_t> BufferArena::indices(unsigned thread) noexcept {
  auto *slot = base_ + (bytes_ - slot_bytes_ * (plan_.max_threads - thread)) + small_bytes_;
  return {reinterpret_cast<std::uint64_t *>(slot), plan_.small_elements};
}

void BufferArena::check_fits(const RunConfig &config) const {
  if (required_elements(config) > plan_.large_elements ||
      config.pattern.size() > plan_.small_elements ||
      config.backend.thread_count() > plan_.max_threads)
    throw std::logic_error("config '" + config.name + "' does not fit the planned arena");
}

} // namespace gsbench
