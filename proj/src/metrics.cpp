#include "gsbench/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "gsbench/error.hpp"

namespace gsbench {

namespace {

void require_baseline(double baseline_bw) {
  if (!(baseline_bw > 0.0) || !std::isfinite(baseline_bw))
    throw DomainError("baseline bandwidth must be positive and finite");
}

double mean(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v)
    sum += x;
  return sum / static_cast<double>(v.size());
}

} // namespace

double harmonic_mean(std::span<const double> values) {
  if (values.empty())
    throw DomainError("harmonic mean of an empty list");
  double reciprocal_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0))
      throw DomainError("harmonic mean requires positive values");
    reciprocal_sum += 1.0 / v;
  }
  return static_cast<double>(values.size()) / reciprocal_sum;
}

double pearson_r(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw DomainError("pearson_r: length mismatch");
  if (xs.size() < 2)
    throw DomainError("pearson_r: need at least two points");
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - mx;
    const double dy = ys[k] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw DomainError("pearson_r: constant input has zero standard deviation");
  const double n = static_cast<double>(xs.size());
  const double r = (sxy / n) / (std::sqrt(sxx / n) * std::sqrt(syy / n));
  return std::clamp(r, -1.0, 1.0);
}

std::vector<NormalizedPoint> normalize_to_baseline(std::span<const KernelResult> results,
                                                   double baseline_bw) {
  require_baseline(baseline_bw);
  std::vector<NormalizedPoint> out;
  out.reserve(results.size());
  for (const auto &r : results)
    out.push_back({r.config_name, 100.0 * r.bandwidth_mb_s / baseline_bw});
  return out;
}

std::vector<BwBwPoint> bwbw_points(std::span<const KernelResult> results, double baseline_bw) {
  require_baseline(baseline_bw);
  std::vector<BwBwPoint> out;
  out.reserve(results.size() + 1);
  out.push_back({baseline_bw, baseline_bw, "stride-1"});
  for (const auto &r : results)
    out.push_back({baseline_bw, r.bandwidth_mb_s, r.config_name});
  return out;
}

SuiteReport summarize(std::vector<KernelResult> results, std::optional<double> baseline_bw,
                      std::optional<std::vector<double>> reference,
                      std::optional<double> scatter_baseline_bw) {
  if (results.empty())
    throw DomainError("cannot summarize an empty result list");
  if (scatter_baseline_bw && !baseline_bw)
    throw DomainError("a scatter baseline needs a primary baseline");

  SuiteReport report;
  std::vector<double> bw;
  bw.reserve(results.size());
  for (const auto &r : results)
    bw.push_back(r.bandwidth_mb_s);
  report.max_bw = *std::max_element(bw.begin(), bw.end());
  report.min_bw = *std::min_element(bw.begin(), bw.end());
  report.harmonic_mean_bw = std::clamp(harmonic_mean(bw), report.min_bw, report.max_bw);

  if (baseline_bw) {
    require_baseline(*baseline_bw);
    if (scatter_baseline_bw)
      require_baseline(*scatter_baseline_bw);
    report.baseline_bw = baseline_bw;
    report.scatter_baseline_bw = scatter_baseline_bw;
    std::vector<NormalizedPoint> normalized;
    std::vector<BwBwPoint> points;
    const double scatter_base = scatter_baseline_bw.value_or(*baseline_bw);
    points.push_back({*baseline_bw, *baseline_bw, "stride-1"});
    if (scatter_baseline_bw)
      points.push_back({scatter_base, scatter_base, "stride-1-scatter"});
    for (const auto &r : results) {
      const double base = r.kernel == Kernel::Scatter ? scatter_base : *baseline_bw;
      auto one = std::span<const KernelResult>(&r, 1);
      normalized.push_back(normalize_to_baseline(one, base).front());
      points.push_back(bwbw_points(one, base).back());
    }
    report.normalized = std::move(normalized);
    report.bwbw = std::move(points);
  }

  if (reference)
    report.correlation_r = pearson_r(bw, *reference);

  report.results = std::move(results);
  return report;
}

} // namespace gsbench
