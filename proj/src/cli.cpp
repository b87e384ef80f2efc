#include "gsbench/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsbench/engine.hpp"
#include "gsbench/error.hpp"
#include "gsbench/metrics.hpp"
#include "gsbench/planner.hpp"
#include "gsbench/report.hpp"
#include "gsbench/suites.hpp"

namespace gsbench {

namespace {

struct CliOptions {
  RunFlags run;
  std::optional<std::string> file;
  std::optional<std::string> suite;
  std::string format = "text";
  std::optional<std::string> output;
  bool validate = false;
  std::optional<std::uint64_t> target_bytes;
  std::optional<std::uint64_t> max_arena_bytes;
  std::optional<std::string> reference;
  std::optional<std::string> export_config;
  bool normalized = false;
  bool bwbw = false;
  std::optional<double> fake_time;
};

struct Batch {
  std::vector<RunConfig> configs;
  std::optional<std::size_t> baseline;
  std::optional<std::size_t> scatter_baseline;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_reference(const std::string &text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size())
        throw std::invalid_argument(token);
    } catch (const std::exception &) {
      throw UsageError("--reference: '" + token + "' is not a number");
    }
  }
  return values;
}

Batch build_batch(const CliOptions &o) {
  const bool has_single = o.run.kernel || o.run.pattern || o.run.delta || o.run.count;
  const int sources = int(has_single) + int(o.file.has_value()) + int(o.suite.has_value());
  if (sources == 0)
    throw UsageError("nothing to run: give -k/-p/-d/-l, -f <json> or --suite <name>");
  if (sources > 1)
    throw UsageError("-k/-p/-d/-l, -f and --suite are mutually exclusive");
  if ((o.target_bytes || o.max_arena_bytes) && !o.suite)
    throw UsageError("--target-bytes and --max-arena-bytes apply only to --suite");

  Batch batch;
  if (has_single) {
    batch.configs.push_back(config_from_flags(o.run));
    return batch;
  }

  if (o.run.name)
    throw UsageError("-n/--name applies only to a single -p config");
  if (o.file) {
    batch.configs = parse_json(read_file(*o.file));
    if (batch.configs.empty())
      throw ConfigError("'" + *o.file + "' contains no configs");
    if (o.run.runs || o.run.backend || o.run.threads) {
      const auto backend = resolve_backend(o.run.backend, o.run.threads);
      for (auto &c : batch.configs) {
        if (o.run.runs)
          c.runs = *o.run.runs;
        if (o.run.backend || o.run.threads)
          c.backend = backend;
      }
    }
    return batch;
  }

  SuiteOptions options;
  if (o.target_bytes)
    options.target_bytes = *o.target_bytes;
  if (o.max_arena_bytes)
    options.max_arena_bytes = *o.max_arena_bytes;
  if (o.run.runs)
    options.runs = *o.run.runs;
  options.backend = resolve_backend(o.run.backend, o.run.threads);
  auto suite = make_suite(*o.suite, options);
  batch.configs = std::move(suite.configs);
  batch.baseline = suite.baseline_index;
  batch.scatter_baseline = suite.scatter_baseline_index;
  return batch;
}

int execute(const CliOptions &o, std::ostream &out, std::ostream &err, const CliEnvironment &env) {
  OutputSpec spec;
  spec.format = parse_format(o.format);
  spec.destination = o.output;
  spec.include_normalized = o.normalized;
  spec.include_bwbw = o.bwbw;
  std::optional<std::vector<double>> reference;
  if (o.reference)
    reference = parse_reference(*o.reference);

  Batch batch = build_batch(o);

  if (o.export_config) {
    std::ofstream file(*o.export_config, std::ios::binary | std::ios::trunc);
    if (!file || !(file << emit_json(batch.configs)))
      throw IoError("cannot write '" + *o.export_config + "'");
    return kExitOk;
  }

  SteadyTimer steady;
  std::optional<FakeTimer> fake;
  Timer *timer = env.timer ? env.timer : &steady;
  if (o.fake_time) {
    if (!(*o.fake_time > 0.0))
      throw UsageError("--fake-time must be positive");
    timer = &fake.emplace(std::vector<double>{*o.fake_time});
  }

  BufferArena arena(plan_arena(batch.configs),
                    env.allocator ? *env.allocator : default_arena_allocator());
  Engine engine(arena, *timer);

  if (o.validate) {
    for (const auto &config : batch.configs) {
      const auto verdict = engine.validate(config);
      if (!verdict.passed) {
        err << "validation failed for '" << config.name << "': " << verdict.message << "\n";
        return kExitValidationFailed;
      }
    }
    err << "validation passed for " << batch.configs.size() << " config(s)\n";
  }

  auto results = engine.sweep(batch.configs);
  std::optional<double> baseline_bw;
  std::optional<double> scatter_baseline_bw;
  if (batch.baseline) {
    results[*batch.baseline].baseline = true;
    baseline_bw = results[*batch.baseline].bandwidth_mb_s;
  }
  if (batch.scatter_baseline) {
    results[*batch.scatter_baseline].baseline = true;
    scatter_baseline_bw = results[*batch.scatter_baseline].bandwidth_mb_s;
  }
  const auto report =
      summarize(std::move(results), baseline_bw, std::move(reference), scatter_baseline_bw);
  emit_report(report, spec, out);

  char line[64];
  std::snprintf(line, sizeof line, "%.17g", engine.checksum());
  err << "checksum: " << line << "\n";
  return kExitOk;
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err,
            const CliEnvironment &env) {
  CLI::App app{"gsbench: gather/scatter memory bandwidth benchmark"};
  app.name("gsbench");
  CliOptions o;
  add_run_flags(app, o.run);
  app.add_option("-f,--file", o.file, "JSON array of run configs");
  app.add_option("--suite", o.suite,
                 "built-in suite: ustride-gather, ustride-scatter, stream, apps, apps-gather, "
                 "apps-scatter");
  app.add_option("--format", o.format, "text, csv or json (default text)");
  app.add_option("-o,--output", o.output, "write the report here instead of stdout");
  app.add_flag("--validate", o.validate, "check kernel results against a reference first");
  app.add_option("--target-bytes", o.target_bytes, "bytes each suite config moves")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-arena-bytes", o.max_arena_bytes, "cap on a suite's large buffer")
      ->check(CLI::PositiveNumber);
  app.add_option("--reference", o.reference,
                 "comma-separated reference bandwidths to correlate against");
  app.add_option("--export-config", o.export_config,
                 "write the batch as JSON configs and exit without running");
  app.add_flag("--normalized", o.normalized, "add percent-of-stride-1 to text and CSV output");
  app.add_flag("--bwbw", o.bwbw, "add bandwidth-bandwidth points to text output");
  app.add_option("--fake-time", o.fake_time, "report every run as taking this many seconds")
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for the flag list\n";
    return kExitUsage;
  }

  try {
    return execute(o, out, err, env);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError &e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error &e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitInvalidConfig;
  }
}

} // namespace gsbench
