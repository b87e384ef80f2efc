#include "gsbench/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>

#include "gsbench/error.hpp"

namespace gsbench {

namespace {

constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t &out) {
  return __builtin_mul_overflow(a, b, &out);
}

void require(bool ok, const std::string &what) {
  if (!ok)
    throw RangeError(what);
}

std::uint64_t parse_field(std::string_view text, std::string_view field) {
  std::uint64_t value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (text.empty())
    throw ParseError("pattern field '" + std::string(field) + "' is empty");
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw RangeError("pattern field '" + std::string(field) + "' does not fit in 64 bits: " +
                     std::string(text));
  if (ec != std::errc{} || ptr != last)
    throw ParseError("pattern field '" + std::string(field) + "' is not a decimal integer: '" +
                     std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::uint64_t> parse_fields(std::string_view keyword,
                                        std::span<const std::string_view> parts,
                                        std::initializer_list<std::string_view> names) {
  if (parts.size() != names.size())
    throw ParseError(std::string(keyword) + " expects " + std::to_string(names.size()) +
                     " fields, got " + std::to_string(parts.size()));
  std::vector<std::uint64_t> values;
  auto name = names.begin();
  for (auto part : parts)
    values.push_back(parse_field(part, *name++));
  return values;
}

// Unbiased draw in [0, bound).
std::uint64_t bounded(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

} // namespace

IndexPattern gen_uniform(std::uint64_t n, std::uint64_t stride) {
  require(n >= 1, "UNIFORM: N must be >= 1 (zero-length pattern)");
  require(stride >= 1, "UNIFORM: STRIDE must be >= 1");
  std::uint64_t last = 0;
  require(!mul_overflows(n - 1, stride, last), "UNIFORM: (N-1)*STRIDE overflows");

  IndexPattern p;
  p.indices.resize(n);
  for (std::uint64_t j = 0; j < n; ++j)
    p.indices[j] = j * stride;
  p.descriptor = UniformStride{n, stride};
  return p;
}

IndexPattern gen_ms1(std::uint64_t n, std::uint64_t break_pos, std::uint64_t gap) {
  require(n >= 2, "MS1: N must be >= 2 to hold a break");
  require(break_pos >= 1 && break_pos < n, "MS1: BREAK must lie in [1, N-1]");
  require(gap >= 1, "MS1: GAP must be >= 1");
  // Last index is (n-2) + gap.
  require(gap <= kMax - (n - 2), "MS1: (N-2)+GAP overflows");

  IndexPattern p;
  p.indices.resize(n);
  p.indices[0] = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    p.indices[j] = p.indices[j - 1] + (j == break_pos ? gap : 1);
  p.descriptor = MostlyStride1{n, break_pos, gap};
  return p;
}

IndexPattern gen_laplacian(std::uint64_t dims, std::uint64_t branch, std::uint64_t size) {
  require(dims >= 1, "LAPLACIAN: D must be >= 1");
  require(branch >= 1, "LAPLACIAN: L must be >= 1");
  require(size >= 1, "LAPLACIAN: SIZE must be >= 1");

  // The shifted maximum is 2 * branch * size^(dims-1); check that fits.
  std::uint64_t top_scale = 1;
  for (std::uint64_t j = 1; j < dims; ++j)
    require(!mul_overflows(top_scale, size, top_scale), "LAPLACIAN: SIZE^(D-1) overflows");
  std::uint64_t shift = 0;
  require(!mul_overflows(branch, top_scale, shift), "LAPLACIAN: L*SIZE^(D-1) overflows");
  std::uint64_t top = 0;
  require(!mul_overflows(shift, 2, top) && top != kMax, "LAPLACIAN: 2*L*SIZE^(D-1) overflows");
  std::uint64_t count = 0;
  require(!mul_overflows(dims, branch, count) && count <= (kMax - 1) / 2,
          "LAPLACIAN: 2*D*L+1 overflows");

  IndexPattern p;
  p.indices.reserve(2 * count + 1);
  p.indices.push_back(shift);
  std::uint64_t scale = 1;
  for (std::uint64_t j = 0; j < dims; ++j) {
    for (std::uint64_t k = 1; k <= branch; ++k) {
      const std::uint64_t offset = k * scale;
      p.indices.push_back(shift - offset);
      p.indices.push_back(shift + offset);
    }
    if (j + 1 < dims)
      scale *= size;
  }
  std::sort(p.indices.begin(), p.indices.end());
  p.descriptor = Laplacian{dims, branch, size};
  return p;
}

IndexPattern gen_random(std::uint64_t n, std::uint64_t bound, std::uint64_t seed) {
  require(n >= 1, "RANDOM: N must be >= 1 (zero-length pattern)");
  require(bound >= 1, "RANDOM: BOUND must be >= 1");

  std::mt19937_64 rng(seed);
  IndexPattern p;
  p.indices.resize(n);
  for (auto &idx : p.indices)
    idx = bounded(rng, bound);
  p.descriptor = RandomIndices{n, bound, seed};
  return p;
}

IndexPattern make_custom(std::vector<std::uint64_t> indices, std::string label) {
  require(!indices.empty(), "custom pattern must not be empty (zero-length pattern)");
  require(*std::max_element(indices.begin(), indices.end()) != kMax,
          "custom pattern extent overflows");
  IndexPattern p;
  p.indices = std::move(indices);
  p.descriptor = Custom{};
  p.label = std::move(label);
  return p;
}

namespace {

IndexPattern parse_pattern_impl(std::string_view text) {
  if (text.empty())
    throw ParseError("empty pattern (zero-length pattern)");

  auto parts = split(text, ':');
  if (parts.size() == 1) {
    std::vector<std::uint64_t> indices;
    std::size_t position = 0;
    for (auto token : split(text, ','))
      indices.push_back(parse_field(token, "index " + std::to_string(position++)));
    return make_custom(std::move(indices));
  }

  const auto keyword = parts.front();
  const auto fields = std::span<const std::string_view>(parts).subspan(1);
  if (keyword == "UNIFORM") {
    auto v = parse_fields(keyword, fields, {"N", "STRIDE"});
    return gen_uniform(v[0], v[1]);
  }
  if (keyword == "MS1") {
    auto v = parse_fields(keyword, fields, {"N", "BREAK", "GAP"});
    return gen_ms1(v[0], v[1], v[2]);
  }
  if (keyword == "LAPLACIAN") {
    auto v = parse_fields(keyword, fields, {"D", "L", "SIZE"});
    return gen_laplacian(v[0], v[1], v[2]);
  }
  if (keyword == "RANDOM") {
    auto v = parse_fields(keyword, fields, {"N", "BOUND", "SEED"});
    return gen_random(v[0], v[1], v[2]);
  }
  throw ParseError("unknown pattern keyword '" + std::string(keyword) + "'");
}

} // namespace

IndexPattern parse_pattern(std::string_view text) {
  try {
    return parse_pattern_impl(text);
  } catch (const RangeError &e) {
    throw ParseError(e.what());
  }
}

std::string render_indices(std::span<const std::uint64_t> indices) {
  std::string out;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (j)
      out += ',';
    out += std::to_string(indices[j]);
  }
  return out;
}

std::string render(const IndexPattern &pattern) {
  auto s = [](std::uint64_t v) { return std::to_string(v); };
  return std::visit(
      [&](const auto &d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, UniformStride>)
          return "UNIFORM:" + s(d.n) + ":" + s(d.stride);
        else if constexpr (std::is_same_v<T, MostlyStride1>)
          return "MS1:" + s(d.n) + ":" + s(d.break_pos) + ":" + s(d.gap);
        else if constexpr (std::is_same_v<T, Laplacian>)
          return "LAPLACIAN:" + s(d.dims) + ":" + s(d.branch) + ":" + s(d.size);
        else if constexpr (std::is_same_v<T, RandomIndices>)
          return "RANDOM:" + s(d.n) + ":" + s(d.bound) + ":" + s(d.seed);
        else
          return render_indices(pattern.indices);
      },
      pattern.descriptor);
}

std::uint64_t extent(const IndexPattern &pattern) noexcept {
  if (pattern.indices.empty())
    return 0;
  return *std::max_element(pattern.indices.begin(), pattern.indices.end()) + 1;
}

} // namespace gsbench
