#include "gsbench/planner.hpp"

#include <algorithm>
#include <cctype>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "gsbench/error.hpp"

namespace gsbench {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

} // namespace

Backend Backend::parallel_default() {
  return parallel(static_cast<unsigned>(std::max(1, omp_get_max_threads())));
}

std::string_view to_string(Kernel kernel) noexcept {
  return kernel == Kernel::Gather ? "gather" : "scatter";
}

std::string_view to_string(BackendKind kind) noexcept {
  return kind == BackendKind::Serial ? "serial" : "parallel";
}

Kernel parse_kernel(std::string_view text) {
  auto k = lower(text);
  if (k == "gather")
    return Kernel::Gather;
  if (k == "scatter")
    return Kernel::Scatter;
  throw ConfigError("unknown kernel '" + std::string(text) + "' (expected gather or scatter)");
}

BackendKind parse_backend(std::string_view text) {
  auto b = lower(text);
  if (b == "serial")
    return BackendKind::Serial;
  if (b == "parallel")
    return BackendKind::Parallel;
  throw ConfigError("unknown backend '" + std::string(text) + "' (expected serial or parallel)");
}

std::uint64_t required_elements(const RunConfig &config) {
  if (config.count == 0)
    throw ConfigError("count must be >= 1");
  std::uint64_t span = 0;
  std::uint64_t total = 0;
  if (__builtin_mul_overflow(config.delta, config.count - 1, &span) ||
      __builtin_add_overflow(extent(config.pattern), span, &total))
    throw ConfigError("config '" + config.name + "': extent + delta*(count-1) overflows 64 bits");
  return total;
}

void validate_config(const RunConfig &config) {
  const std::string who = config.name.empty() ? "config" : "config '" + config.name + "'";
  if (config.pattern.indices.empty())
    throw ConfigError(who + ": pattern is empty");
  if (config.count < 1)
    throw ConfigError(who + ": count must be >= 1");
  if (config.runs < 1)
    throw ConfigError(who + ": runs must be >= 1");
  if (config.backend.kind == BackendKind::Parallel && config.backend.threads < 1)
    throw ConfigError(who + ": threads must be >= 1");
  // The arena is addressed in bytes.
  if (required_elements(config) > std::numeric_limits<std::uint64_t>::max() / sizeof(double))
    throw ConfigError(who + ": required memory overflows 64 bits");
}

void add_run_flags(CLI::App &app, RunFlags &flags) {
  app.add_option("-k,--kernel", flags.kernel, "gather or scatter (case-insensitive)");
  app.add_option("-p,--pattern", flags.pattern,
                 "UNIFORM:N:STRIDE | MS1:N:BREAK:GAP | LAPLACIAN:D:L:SIZE | "
                 "RANDOM:N:BOUND:SEED | idx0,idx1,...");
  app.add_option("-d,--delta", flags.delta, "base-address step between iterations (elements)");
  app.add_option("-l,--count", flags.count, "number of gathers or scatters")
      ->check(CLI::PositiveNumber);
  app.add_option("-r,--runs", flags.runs, "timed repetitions (default 10)")
      ->check(CLI::PositiveNumber);
  app.add_option("-b,--backend", flags.backend, "serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}, CLI::ignore_case));
  app.add_option("-t,--threads", flags.threads, "threads for the parallel backend")
      ->check(CLI::PositiveNumber);
  app.add_option("-n,--name", flags.name, "label for the config");
}

Backend resolve_backend(const std::optional<std::string> &backend,
                        const std::optional<unsigned> &threads) {
  const auto kind = backend ? parse_backend(*backend) : BackendKind::Parallel;
  if (kind == BackendKind::Serial) {
    if (threads && *threads != 1)
      throw UsageError("--threads: the serial backend runs on exactly one thread");
    return Backend::serial();
  }
  if (threads)
    return Backend::parallel(*threads);
  return Backend::parallel_default();
}

RunConfig config_from_flags(const RunFlags &flags) {
  if (!flags.kernel)
    throw UsageError("missing required flag -k/--kernel");
  if (!flags.pattern)
    throw UsageError("missing required flag -p/--pattern");
  if (!flags.delta)
    throw UsageError("missing required flag -d/--delta");
  if (!flags.count)
    throw UsageError("missing required flag -l/--count");

  RunConfig config;
  try {
    config.kernel = parse_kernel(*flags.kernel);
  } catch (const ConfigError &e) {
    throw UsageError(std::string("-k/--kernel: ") + e.what());
  }
  config.pattern = parse_pattern(*flags.pattern);
  config.delta = *flags.delta;
  config.count = *flags.count;
  config.runs = flags.runs.value_or(10);
  config.backend = resolve_backend(flags.backend, flags.threads);
  config.name = flags.name.value_or(render(config.pattern));
  validate_config(config);
  return config;
}

std::vector<RunConfig> parse_cli(std::span<const std::string> args) {
  CLI::App app{"gather/scatter run flags"};
  RunFlags flags;
  add_run_flags(app, flags);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }
  return {config_from_flags(flags)};
}

namespace {

using nlohmann::json;

template <typename T>
T get_number(const json &entry, const char *key, std::size_t index, T minimum) {
  const auto &v = entry.at(key);
  if (!v.is_number_integer())
    throw ConfigError("entry " + std::to_string(index) + ": '" + key + "' must be an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u < static_cast<std::uint64_t>(minimum) || u > std::numeric_limits<T>::max())
      throw ConfigError("entry " + std::to_string(index) + ": '" + key + "' out of range");
    return static_cast<T>(u);
  }
  // Negative values arrive as signed integers.
  auto s = v.get<std::int64_t>();
  if (s < static_cast<std::int64_t>(minimum))
    throw ConfigError("entry " + std::to_string(index) + ": '" + key + "' must be >= " +
                      std::to_string(minimum));
  return static_cast<T>(s);
}

std::string get_string(const json &entry, const char *key, std::size_t index) {
  const auto &v = entry.at(key);
  if (!v.is_string())
    throw ConfigError("entry " + std::to_string(index) + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

RunConfig config_from_json(const json &entry, std::size_t index) {
  const std::string where = "entry " + std::to_string(index);
  if (!entry.is_object())
    throw ConfigError(where + ": expected an object");
  static const std::vector<std::string> known = {"name",  "kernel",  "pattern", "delta",
                                                 "count", "runs",    "threads", "backend"};
  for (const auto &item : entry.items())
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      throw ConfigError(where + ": unknown field '" + item.key() + "'");
  for (const char *key : {"kernel", "pattern", "delta", "count"})
    if (!entry.contains(key))
      throw ConfigError(where + ": missing field '" + key + "'");

  RunConfig config;
  try {
    config.kernel = parse_kernel(get_string(entry, "kernel", index));

    const auto &pattern = entry.at("pattern");
    if (pattern.is_string()) {
      config.pattern = parse_pattern(pattern.get<std::string>());
    } else if (pattern.is_array()) {
      std::vector<std::uint64_t> indices;
      for (const auto &v : pattern) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
          throw ConfigError(where + ": pattern entries must be non-negative integers");
        indices.push_back(v.get<std::uint64_t>());
      }
      config.pattern = make_custom(std::move(indices));
    } else {
      throw ConfigError(where + ": 'pattern' must be a string or an integer array");
    }

    config.delta = get_number<std::uint64_t>(entry, "delta", index, 0);
    config.count = get_number<std::uint64_t>(entry, "count", index, 1);
    if (entry.contains("runs"))
      config.runs = get_number<unsigned>(entry, "runs", index, 1);

    std::optional<std::string> backend;
    std::optional<unsigned> threads;
    if (entry.contains("backend"))
      backend = get_string(entry, "backend", index);
    if (entry.contains("threads"))
      threads = get_number<unsigned>(entry, "threads", index, 1);
    config.backend = resolve_backend(backend, threads);

    config.name = entry.contains("name") ? get_string(entry, "name", index) : render(config.pattern);
    validate_config(config);
  } catch (const ConfigError &e) {
    const std::string msg = e.what();
    throw ConfigError(msg.rfind(where, 0) == 0 ? msg : where + ": " + msg);
  } catch (const Error &e) {
    throw ConfigError(where + ": " + e.what());
  }
  return config;
}

} // namespace

std::vector<RunConfig> parse_json(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_array())
    throw ConfigError("config document must be a JSON array of objects");
  std::vector<RunConfig> batch;
  batch.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i)
    batch.push_back(config_from_json(doc[i], i));
  return batch;
}

std::string emit_json(std::span<const RunConfig> batch) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto &c : batch) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["kernel"] = to_string(c.kernel);
    if (std::holds_alternative<Custom>(c.pattern.descriptor))
      entry["pattern"] = c.pattern.indices;
    else
      entry["pattern"] = render(c.pattern);
    entry["delta"] = c.delta;
    entry["count"] = c.count;
    entry["runs"] = c.runs;
    entry["backend"] = to_string(c.backend.kind);
    if (c.backend.kind == BackendKind::Parallel)
      entry["threads"] = c.backend.threads;
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

ArenaPlan plan_arena(std::span<const RunConfig> batch) {
  if (batch.empty())
    throw ConfigError("cannot plan an arena for an empty batch");
  ArenaPlan plan;
  for (const auto &config : batch) {
    validate_config(config);
    plan.large_elements = std::max(plan.large_elements, required_elements(config));
    plan.small_elements = std::max<std::uint64_t>(plan.small_elements, config.pattern.size());
    plan.max_threads = std::max(plan.max_threads, config.backend.thread_count());
  }
  return plan;
}

} // namespace gsbench
