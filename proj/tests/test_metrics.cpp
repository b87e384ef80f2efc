#include <doctest.h>

#include <random>

#include "gsbench/error.hpp"
#include "gsbench/metrics.hpp"
#include "oracles.hpp"

using namespace gsbench;

namespace {

KernelResult result(std::string name, double bw, Kernel kernel = Kernel::Gather) {
  KernelResult r;
  r.config_name = std::move(name);
  r.kernel = kernel;
  r.bandwidth_mb_s = bw;
  return r;
}

} // namespace

TEST_CASE("harmonic_mean") {
  CHECK(harmonic_mean(std::vector{7.5}) == 7.5);
  CHECK(harmonic_mean(std::vector{2.0, 6.0}) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(harmonic_mean(std::vector{1.0, 2.0, 4.0}) == doctest::Approx(12.0 / 7.0).epsilon(1e-15));
  CHECK_THROWS_AS(harmonic_mean(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(harmonic_mean(std::vector{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(harmonic_mean(std::vector{1.0, -3.0}), DomainError);
}

TEST_CASE("harmonic mean never exceeds the arithmetic mean") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(1e-3, 1e6);
  for (int k = 0; k < 1000; ++k) {
    std::vector<double> v(1 + rng() % 20);
    double sum = 0;
    for (auto &x : v)
      sum += x = dist(rng);
    CHECK(harmonic_mean(v) <= sum / v.size() * (1 + 1e-12));
  }
}

TEST_CASE("pearson_r") {
  const std::vector<double> x = {1, 2, 3, 4, 10};
  std::vector<double> neg;
  for (double v : x)
    neg.push_back(-v);
  CHECK(pearson_r(x, x) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson_r(x, neg) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(pearson_r(std::vector{1.0, 2.0, 3.0}, std::vector{2.0, 2.0, 5.0}) ==
        doctest::Approx(3.0 / std::sqrt(12.0)).epsilon(1e-14));
  CHECK_THROWS_AS(pearson_r(std::vector{1.0, 2.0}, std::vector{1.0}), DomainError);
  CHECK_THROWS_AS(pearson_r(std::vector{1.0}, std::vector{1.0}), DomainError);
  CHECK_THROWS_AS(pearson_r(std::vector{1.0, 1.0, 1.0}, std::vector{1.0, 2.0, 3.0}), DomainError);
}

TEST_CASE("pearson_r matches the sample-moment formula and is affine invariant") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> dist(0, 10);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = dist(rng);
      y[j] = 0.5 * x[j] + dist(rng);
    }
    const double r = pearson_r(x, y);
    CHECK(r == doctest::Approx(oracle::pearson_sample(x, y)).epsilon(1e-9));
    const double a = std::exp(std::uniform_real_distribution<double>(-3, 3)(rng));
    const double b = dist(rng) * 100;
    std::vector<double> ax(n);
    for (std::size_t j = 0; j < n; ++j)
      ax[j] = a * x[j] + b;
    CHECK(pearson_r(ax, y) == doctest::Approx(r).epsilon(1e-9));
  }
}

TEST_CASE("normalize_to_baseline") {
  std::vector<KernelResult> rs = {result("same", 800), result("cache", 1600),
                                  result("slow", 50)};
  auto n = normalize_to_baseline(rs, 800);
  CHECK(n[0].percent == 100.0);
  CHECK(n[1].percent == 200.0);
  CHECK(n[2].percent == 6.25);
  CHECK(n[2].config_name == "slow");
  CHECK_THROWS_AS(normalize_to_baseline(rs, 0), DomainError);
  CHECK_THROWS_AS(normalize_to_baseline(rs, -1), DomainError);

  // Homogeneity.
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const double base = 1 + rng() % 100000;
    std::vector<KernelResult> a, b;
    for (int j = 0; j < 5; ++j) {
      const double bw = 1 + rng() % 100000;
      a.push_back(result("x", bw));
      b.push_back(result("x", 2 * bw));
    }
    auto na = normalize_to_baseline(a, base);
    auto nb = normalize_to_baseline(b, 2 * base);
    for (int j = 0; j < 5; ++j)
      CHECK(na[j].percent == doctest::Approx(nb[j].percent).epsilon(1e-15));
  }
}

TEST_CASE("bwbw_points") {
  auto only = bwbw_points(std::vector<KernelResult>{}, 1000);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == BwBwPoint{1000, 1000, "stride-1"});

  auto pts = bwbw_points(std::vector{result("q", 250)}, 1000);
  REQUIRE(pts.size() == 2);
  CHECK(pts[1] == BwBwPoint{1000, 250, "q"});
  CHECK(std::size(kBwBwGuides) == 5);
  CHECK(kBwBwGuides[4] == 1.0 / 16);
  CHECK_THROWS_AS(bwbw_points(std::vector<KernelResult>{}, 0), DomainError);
}

TEST_CASE("summarize") {
  auto rep = summarize({result("a", 2), result("b", 6)});
  CHECK(rep.min_bw == 2);
  CHECK(rep.max_bw == 6);
  CHECK(rep.harmonic_mean_bw == doctest::Approx(3));
  CHECK_FALSE(rep.baseline_bw);
  CHECK_FALSE(rep.normalized);
  CHECK_FALSE(rep.correlation_r);

  auto single = summarize({result("s", 123.25)});
  CHECK(single.min_bw == 123.25);
  CHECK(single.max_bw == 123.25);
  CHECK(single.harmonic_mean_bw == 123.25);

  auto corr = summarize({result("a", 2), result("b", 6), result("c", 5)}, std::nullopt,
                        std::vector<double>{2, 6, 5});
  CHECK(*corr.correlation_r == doctest::Approx(1.0));

  auto base = summarize({result("base", 100), result("g", 50), result("s", 30, Kernel::Scatter),
                         result("sbase", 60, Kernel::Scatter)},
                        100.0, std::nullopt, 60.0);
  REQUIRE(base.normalized);
  CHECK((*base.normalized)[0].percent == 100);
  CHECK((*base.normalized)[1].percent == 50);
  CHECK((*base.normalized)[2].percent == 50);
  CHECK((*base.normalized)[3].percent == 100);
  REQUIRE(base.bwbw);
  CHECK(base.bwbw->size() == 6);

  CHECK_THROWS_AS(summarize({}), DomainError);
  CHECK_THROWS_AS(summarize({result("a", 1)}, std::nullopt, std::vector<double>{1, 2}),
                  DomainError);
}

TEST_CASE("summarize keeps min <= hmean <= max") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 500; ++k) {
    std::vector<KernelResult> rs;
    const double same = 1 + rng() % 1000;
    for (std::size_t j = 0; j < 1 + rng() % 10; ++j)
      rs.push_back(result("r", (k % 2) ? same * 0.1 : 0.1 + (rng() % 100000) / 7.0));
    auto rep = summarize(rs);
    CHECK(rep.min_bw <= rep.harmonic_mean_bw);
    CHECK(rep.harmonic_mean_bw <= rep.max_bw);
  }
}
