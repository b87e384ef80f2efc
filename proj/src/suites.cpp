#include "gsbench/suites.hpp"

#include <algorithm>

#include "gsbench/error.hpp"

namespace gsbench {

namespace {

// Index buffers are element offsets; deltas are transcribed as published.
constexpr AppPattern kAppPatterns[] = {
    {"PENNANT-G0", Kernel::Gather, 2, "2,484,482,0,4,486,484,2,6,488,486,4,8,490,488,6", ""},
    {"PENNANT-G1", Kernel::Gather, 2, "0,2,484,482,2,4,486,484,4,6,488,486,6,8,490,488", ""},
    {"PENNANT-G2", Kernel::Gather, 2, "0,4,8,12,16,20,24,28,32,36,40,44,48,52,56,60", "Stride-4"},
    {"PENNANT-G3", Kernel::Gather, 2, "4,8,12,0,20,24,28,16,36,40,44,32,52,56,60,48", ""},
    {"PENNANT-G4", Kernel::Gather, 4, "0,0,0,0,1,1,1,1,2,2,2,2,3,3,3,3", "Broadcast"},
    {"PENNANT-G5", Kernel::Gather, 4, "4,8,12,0,20,24,28,16,36,40,44,32,52,56,60,48", ""},
    {"PENNANT-G6", Kernel::Gather, 480, "482,0,2,484,484,2,4,486,486,4,6,488,488,6,8,490", ""},
    {"PENNANT-G7", Kernel::Gather, 482, "482,0,2,484,484,2,4,486,486,4,6,488,488,6,8,490", ""},
    {"PENNANT-G8", Kernel::Gather, 129608, "2,0,0,0,2,0,0,0,2,0,0,0,2,0,0,0", ""},
    {"PENNANT-G9", Kernel::Gather, 388852, "0,0,0,0,1,1,1,1,2,2,2,2,3,3,3,3", "Broadcast"},
    {"PENNANT-G10", Kernel::Gather, 388848, "0,0,0,0,1,1,1,1,2,2,2,2,3,3,3,3", "Broadcast"},
    {"PENNANT-G11", Kernel::Gather, 388848, "0,0,0,0,1,1,1,1,2,2,2,2,3,3,3,3", "Broadcast"},
    {"PENNANT-G12", Kernel::Gather, 518408, "6,0,2,4,14,8,10,12,22,16,18,20,30,24,26,28", ""},
    {"PENNANT-G13", Kernel::Gather, 518408, "6,0,2,4,14,8,10,12,22,16,18,20,30,24,26,28", ""},
    {"PENNANT-G14", Kernel::Gather, 1036816, "6,0,2,4,14,8,10,12,22,16,18,20,30,24,26,28", ""},
    {"PENNANT-G15", Kernel::Gather, 1882384, "0,0,0,0,1,1,1,1,2,2,2,2,3,3,3,3", "Broadcast"},
    {"LULESH-G0", Kernel::Gather, 1, "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15", "Stride-1"},
    {"LULESH-G1", Kernel::Gather, 8, "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15", "Stride-1"},
    {"LULESH-G2", Kernel::Gather, 1, "0,8,16,24,32,40,48,56,64,72,80,88,96,104,112,120", "Stride-8"},
    {"LULESH-G3", Kernel::Gather, 8, "0,24,48,72,96,120,144,168,192,216,240,264,288,312,336,360", "Stride-24"},
    {"LULESH-G4", Kernel::Gather, 4, "0,24,48,72,96,120,144,168,192,216,240,264,288,312,336,360", "Stride-24"},
    {"LULESH-G5", Kernel::Gather, 1, "0,24,48,72,96,120,144,168,192,216,240,264,288,312,336,360", "Stride-24"},
    {"LULESH-G6", Kernel::Gather, 8, "0,24,48,72,96,120,144,168,192,216,240,264,288,312,336,360", "Stride-24"},
    {"LULESH-G7", Kernel::Gather, 41, "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15", "Stride-1"},
    {"NEKBONE-G0", Kernel::Gather, 3, "0,6,12,18,24,30,36,42,48,54,60,66,72,78,84,90", "Stride-6"},
    {"NEKBONE-G1", Kernel::Gather, 8, "0,6,12,18,24,30,36,42,48,54,60,66,72,78,84,90", "Stride-6"},
    {"NEKBONE-G2", Kernel::Gather, 8, "0,6,12,18,24,30,36,42,48,54,60,66,72,78,84,90", "Stride-6"},
    {"AMG-G0", Kernel::Gather, 1, "1333,0,1,36,37,72,73,1296,1297,1332,1368,1369,2592,2593,2628,2629", "Mostly Stride-1"},
    {"AMG-G1", Kernel::Gather, 1, "1333,0,1,2,36,37,38,72,73,74,1296,1297,1298,1332,1334,1368", "Mostly Stride-1"},
    {"PENNANT-S0", Kernel::Scatter, 1, "0,4,8,12,16,20,24,28,32,36,40,44,48,52,56,60", "Stride-4"},
    {"LULESH-S0", Kernel::Scatter, 1, "0,8,16,24,32,40,48,56,64,72,80,88,96,104,112,120", "Stride-8"},
    {"LULESH-S1", Kernel::Scatter, 8, "0,24,48,72,96,120,144,168,192,216,240,264,288,312,336,360", "Stride-24"},
    {"LULESH-S2", Kernel::Scatter, 1, "0,24,48,72,96,120,144,168,192,216,240,264,288,312,336,360", "Stride-24"},
    {"LULESH-S3", Kernel::Scatter, 0, "0,24,48,72,96,120,144,168,192,216,240,264,288,312,336,360", "Stride-24"},
};

constexpr std::string_view kSuiteNames[] = {"ustride-gather", "ustride-scatter", "stream",
                                            "apps",           "apps-gather",     "apps-scatter"};

RunConfig make_config(std::string name, Kernel kernel, IndexPattern pattern, std::uint64_t delta,
                      const SuiteOptions &options) {
  RunConfig c;
  c.name = std::move(name);
  c.kernel = kernel;
  c.delta = delta;
  c.count = count_for(pattern.size(), extent(pattern), delta, options);
  c.pattern = std::move(pattern);
  c.runs = options.runs;
  c.backend = options.backend;
  return c;
}

RunConfig baseline_config(Kernel kernel, const SuiteOptions &options) {
  return make_config(std::string("stride1-") + std::string(to_string(kernel)), kernel,
                     gen_uniform(16, 1), 16, options);
}

} // namespace

std::span<const AppPattern> app_patterns() noexcept { return kAppPatterns; }

std::span<const std::string_view> suite_names() noexcept { return kSuiteNames; }

std::uint64_t count_for(std::uint64_t length, std::uint64_t extent, std::uint64_t delta,
                        const SuiteOptions &options) {
  const std::uint64_t per_iteration = sizeof(double) * std::max<std::uint64_t>(length, 1);
  std::uint64_t count = std::max<std::uint64_t>(options.target_bytes / per_iteration, 1);
  const std::uint64_t max_elements = options.max_arena_bytes / sizeof(double);
  if (delta > 0 && extent <= max_elements)
    count = std::min(count, (max_elements - extent) / delta + 1);
  return count;
}

Suite suite_ustride(Kernel kernel, std::uint64_t len, const SuiteOptions &options) {
  Suite suite;
  suite.name = std::string("ustride-") + std::string(to_string(kernel));
  for (std::uint64_t stride = 1; stride <= 128; stride *= 2)
    suite.configs.push_back(make_config("stride-" + std::to_string(stride), kernel,
                                        gen_uniform(len, stride), len * stride, options));
  suite.baseline_index = 0;
  return suite;
}

Suite suite_stream_like(const SuiteOptions &options) {
  RunConfig c;
  c.name = "stream";
  c.kernel = Kernel::Gather;
  c.pattern = gen_uniform(8, 1);
  c.delta = 8;
  c.count = std::uint64_t{1} << 24;
  c.runs = options.runs;
  c.backend = options.backend;
  return Suite{"stream", {std::move(c)}, 0, std::nullopt};
}

Suite suite_apps(std::optional<Kernel> kernel_filter, const SuiteOptions &options) {
  Suite suite;
  suite.name = !kernel_filter ? "apps" : "apps-" + std::string(to_string(*kernel_filter));
  for (Kernel kernel : {Kernel::Gather, Kernel::Scatter}) {
    if (kernel_filter && *kernel_filter != kernel)
      continue;
    if (suite.configs.empty())
      suite.baseline_index = 0;
    else
      suite.scatter_baseline_index = suite.configs.size();
    suite.configs.push_back(baseline_config(kernel, options));
    for (const auto &row : kAppPatterns) {
      if (row.kernel != kernel)
        continue;
      auto pattern = parse_pattern(row.indices);
      pattern.label = std::string(row.name);
      suite.configs.push_back(
          make_config(std::string(row.name), kernel, std::move(pattern), row.delta, options));
    }
  }
  return suite;
}

Suite make_suite(std::string_view name, const SuiteOptions &options) {
  if (name == "ustride-gather")
    return suite_ustride(Kernel::Gather, 16, options);
  if (name == "ustride-scatter")
    return suite_ustride(Kernel::Scatter, 16, options);
  if (name == "stream")
    return suite_stream_like(options);
  if (name == "apps")
    return suite_apps(std::nullopt, options);
  if (name == "apps-gather")
    return suite_apps(Kernel::Gather, options);
  if (name == "apps-scatter")
    return suite_apps(Kernel::Scatter, options);
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

} // namespace gsbench
