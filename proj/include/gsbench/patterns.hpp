#pragma once

// Index patterns: the short offset buffers that define the footprint of one
// gather or scatter. Offsets are in elements, one element being an 8-byte word.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gsbench {

struct UniformStride {
  std::uint64_t n;
  std::uint64_t stride;
  bool operator==(const UniformStride &) const = default;
};

/// Stride-1 run with a single jump of `gap` placed before position `break_pos`.
struct MostlyStride1 {
  std::uint64_t n;
  std::uint64_t break_pos;
  std::uint64_t gap;
  bool operator==(const MostlyStride1 &) const = default;
};

/// Star-shaped stencil: `dims` axes, `branch` points per direction, with
/// axis j scaled by size^j.
struct Laplacian {
  std::uint64_t dims;
  std::uint64_t branch;
  std::uint64_t size;
  bool operator==(const Laplacian &) const = default;
};

struct RandomIndices {
  std::uint64_t n;
  std::uint64_t bound;
  std::uint64_t seed;
  bool operator==(const RandomIndices &) const = default;
};

struct Custom {
  bool operator==(const Custom &) const = default;
};

using PatternDescriptor =
    std::variant<UniformStride, MostlyStride1, Laplacian, RandomIndices, Custom>;

struct IndexPattern {
  std::vector<std::uint64_t> indices;
  PatternDescriptor descriptor = Custom{};
  std::string label;

  std::size_t size() const noexcept { return indices.size(); }
  bool operator==(const IndexPattern &) const = default;
};

/// [0, stride, 2*stride, ...] with n entries. Throws RangeError on n == 0,
/// stride == 0, or when (n-1)*stride overflows.
IndexPattern gen_uniform(std::uint64_t n, std::uint64_t stride);

/// indices[0] = 0 and indices[j] = indices[j-1] + (j == break_pos ? gap : 1).
/// Requires 1 <= break_pos < n and gap >= 1.
IndexPattern gen_ms1(std::uint64_t n, std::uint64_t break_pos, std::uint64_t gap);

/// Sorted offsets {0} U {+-k*size^j : j < dims, 1 <= k <= branch}, shifted so
/// the minimum is 0. Always 2*dims*branch + 1 entries; collisions (size too
/// small for the branch length) are kept as duplicates.
IndexPattern gen_laplacian(std::uint64_t dims, std::uint64_t branch, std::uint64_t size);

/// n indices drawn uniformly from [0, bound).
///
/// The generator is std::mt19937_64 seeded with `seed`; each draw is reduced
/// to [0, bound) by rejection of the top partial range followed by modulo, so
/// the buffer depends only on (n, bound, seed) and not on the standard
/// library in use.
IndexPattern gen_random(std::uint64_t n, std::uint64_t bound, std::uint64_t seed);

/// Custom pattern from an explicit offset list; order and duplicates are kept.
IndexPattern make_custom(std::vector<std::uint64_t> indices, std::string label = {});

/// Parses the pattern grammar:
///   UNIFORM:N:STRIDE | MS1:N:BREAK:GAP | LAPLACIAN:D:L:SIZE |
///   RANDOM:N:BOUND:SEED | idx0,idx1,...
/// Throws ParseError, naming the offending field, for malformed text and for
/// out-of-range parameters. The gen_* functions throw RangeError directly.
IndexPattern parse_pattern(std::string_view text);

/// Inverse of parse_pattern: generator forms render as their descriptor,
/// Custom renders as a comma list.
std::string render(const IndexPattern &pattern);

/// Comma-separated offsets, no spaces.
std::string render_indices(std::span<const std::uint64_t> indices);

/// max(indices) + 1, in elements.
std::uint64_t extent(const IndexPattern &pattern) noexcept;

} // namespace gsbench
