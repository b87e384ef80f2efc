#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gsbench/engine.hpp"
#include "gsbench/error.hpp"
#include "gsbench/suites.hpp"
#include "oracles.hpp"

using namespace gsbench;

#ifndef GSBENCH_TEST_DATA
#error "GSBENCH_TEST_DATA must point at tests/data"
#endif

namespace {

struct GoldenRow {
  std::string name, kernel, delta, indices, type;
};

std::vector<GoldenRow> golden_rows() {
  std::ifstream in(std::string(GSBENCH_TEST_DATA) + "/apps_patterns.txt");
  REQUIRE(in);
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ss(line);
    GoldenRow r;
    ss >> r.name >> r.kernel >> r.delta >> r.indices >> r.type;
    rows.push_back(r);
  }
  return rows;
}

} // namespace

TEST_CASE("application table matches the checked-in transcription") {
  const auto rows = golden_rows();
  const auto table = app_patterns();
  REQUIRE(rows.size() == 34);
  REQUIRE(table.size() == 34);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CAPTURE(rows[k].name);
    CHECK(table[k].name == rows[k].name);
    CHECK(to_string(table[k].kernel) == rows[k].kernel);
    CHECK(std::to_string(table[k].delta) == rows[k].delta);
    const auto p = parse_pattern(table[k].indices);
    CHECK(std::holds_alternative<Custom>(p.descriptor));
    CHECK(render(p) == rows[k].indices);
    CHECK(p.size() == 16);
  }
}

TEST_CASE("apps suite") {
  SuiteOptions opt;
  auto all = suite_apps(std::nullopt, opt);
  CHECK(all.name == "apps");
  CHECK(all.configs.size() == 36);
  CHECK(all.baseline_index == 0);
  REQUIRE(all.scatter_baseline_index);
  CHECK(*all.scatter_baseline_index == 30);
  CHECK(all.configs[30].kernel == Kernel::Scatter);
  CHECK(render(all.configs[30].pattern) == "UNIFORM:16:1");

  std::size_t gathers = 0, scatters = 0;
  for (std::size_t k = 0; k < all.configs.size(); ++k) {
    if (k == all.baseline_index || k == *all.scatter_baseline_index)
      continue;
    (all.configs[k].kernel == Kernel::Gather ? gathers : scatters)++;
  }
  CHECK(gathers == 29);
  CHECK(scatters == 5);

  auto find = [&](std::string_view name) -> const RunConfig & {
    for (const auto &c : all.configs)
      if (c.name == name)
        return c;
    FAIL("missing " << name);
    throw;
  };
  const auto &nek = find("NEKBONE-G0");
  CHECK(nek.pattern.indices == gen_uniform(16, 6).indices);
  CHECK(nek.delta == 3);
  const auto &s3 = find("LULESH-S3");
  CHECK(s3.kernel == Kernel::Scatter);
  CHECK(s3.pattern.indices == gen_uniform(16, 24).indices);
  CHECK(s3.delta == 0);
  CHECK(s3.pattern.label == "LULESH-S3");

  // Small-delta configs reach the target; large-delta ones stay inside the arena cap.
  CHECK(moved_bytes(find("LULESH-G0")) >= opt.target_bytes);
  CHECK(moved_bytes(s3) >= opt.target_bytes);
  for (const auto &c : all.configs)
    CHECK(required_elements(c) * sizeof(double) <= opt.max_arena_bytes);

  CHECK(suite_apps(Kernel::Gather, opt).configs.size() == 30);
  auto sc = suite_apps(Kernel::Scatter, opt);
  CHECK(sc.configs.size() == 6);
  CHECK(sc.baseline_index == 0);
  CHECK(sc.configs[0].kernel == Kernel::Scatter);
  CHECK_FALSE(sc.scatter_baseline_index);
}

TEST_CASE("ustride suite") {
  auto s = suite_ustride(Kernel::Gather);
  REQUIRE(s.configs.size() == 8);
  std::uint64_t stride = 1;
  for (const auto &c : s.configs) {
    CHECK(c.pattern.descriptor == PatternDescriptor{UniformStride{16, stride}});
    CHECK(c.delta == 16 * stride);
    stride *= 2;
  }
  CHECK(s.baseline_index == 0);
  CHECK(s.configs[0].delta == 16);

  SuiteOptions small;
  small.target_bytes = 1 << 20;
  auto t = suite_ustride(Kernel::Scatter, 16, small);
  CHECK(t.configs[0].count == 8192);
  CHECK(t.configs[0].kernel == Kernel::Scatter);
}

TEST_CASE("ustride iterations never share elements") {
  SuiteOptions tiny;
  tiny.target_bytes = 8 * 16 * 6;
  for (const auto &c : suite_ustride(Kernel::Gather, 16, tiny).configs) {
    REQUIRE(c.count == 6);
    for (std::uint64_t i = 0; i + 1 < c.count; ++i) {
      std::set<std::uint64_t> here, next;
      for (auto v : c.pattern.indices) {
        here.insert(i * c.delta + v);
        next.insert((i + 1) * c.delta + v);
      }
      for (auto e : here)
        CHECK(next.count(e) == 0);
    }
    CHECK_FALSE(oracle::writes_overlap(c.pattern.indices, c.delta, c.count));
  }
}

TEST_CASE("stream suite") {
  auto s = suite_stream_like();
  REQUIRE(s.configs.size() == 1);
  const auto &c = s.configs[0];
  CHECK(c.pattern.indices == gen_uniform(8, 1).indices);
  CHECK(c.delta == 8);
  CHECK(c.count == (1u << 24));
  CHECK(c.runs == 10);
  CHECK(moved_bytes(c) == (std::uint64_t{1} << 30));
  CHECK(s.baseline_index == 0);
}

TEST_CASE("count_for") {
  SuiteOptions o;
  o.target_bytes = 1 << 20;
  o.max_arena_bytes = 1 << 30;
  CHECK(count_for(16, 16, 16, o) == 8192);
  o.max_arena_bytes = 8 * 1000;
  CHECK(count_for(16, 16, 100, o) == (1000 - 16) / 100 + 1);
  CHECK(count_for(16, 16, 0, o) == 8192);
  o.target_bytes = 1;
  CHECK(count_for(16, 16, 1, o) == 1);
}

TEST_CASE("registry") {
  CHECK(suite_names().size() == 6);
  SuiteOptions o;
  o.target_bytes = 1 << 16;
  for (auto name : suite_names())
    CHECK(make_suite(name, o).name == name);
  CHECK_THROWS_AS(make_suite("apps-gsop", o), ConfigError);
}

TEST_CASE("every suite config plans and validates at reduced counts") {
  SuiteOptions o;
  o.target_bytes = 8 * 16 * 4;
  o.backend = Backend::serial();
  for (auto name : suite_names()) {
    if (name == "stream")
      continue;
    auto suite = make_suite(name, o);
    for (auto &c : suite.configs) {
      c.count = std::min<std::uint64_t>(c.count, 4);
      CAPTURE(c.name);
      const auto plan = plan_arena(std::vector{c});
      const auto addrs = oracle::touched(c.pattern.indices, c.delta, c.count);
      CHECK(*addrs.rbegin() < plan.large_elements);
      BufferArena arena(plan);
      FakeTimer timer({1.0});
      Engine engine(arena, timer);
      CHECK(engine.validate(c).passed);
    }
  }
}
