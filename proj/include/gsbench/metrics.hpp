#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsbench/result.hpp"

namespace gsbench {

struct NormalizedPoint {
  std::string config_name;
  double percent = 0.0;
  bool operator==(const NormalizedPoint &) const = default;
};

/// One point of a bandwidth-vs-bandwidth plot: x is the stride-1 bandwidth
/// of the platform, y the pattern's bandwidth. Stride-1 lies on x = y.
struct BwBwPoint {
  double baseline_mb_s = 0.0;
  double pattern_mb_s = 0.0;
  std::string config_name;
  bool operator==(const BwBwPoint &) const = default;
};

/// Fractions of the baseline drawn as guide lines (slope-1 lines in log-log).
inline constexpr double kBwBwGuides[] = {1.0, 0.5, 0.25, 0.125, 0.0625};

struct SuiteReport {
  std::vector<KernelResult> results;
  double max_bw = 0.0;
  double min_bw = 0.0;
  double harmonic_mean_bw = 0.0;
  std::optional<double> baseline_bw;
  /// Separate stride-1 reference for scatter rows of a mixed batch; when
  /// absent, scatter rows are normalized against baseline_bw.
  std::optional<double> scatter_baseline_bw;
  std::optional<std::vector<NormalizedPoint>> normalized;
  std::optional<std::vector<BwBwPoint>> bwbw;
  std::optional<double> correlation_r;
};

/// n / sum(1/v). Throws DomainError on an empty list or a non-positive value.
double harmonic_mean(std::span<const double> values);

/// Pearson correlation, computed with population (1/n) moments.
/// Throws DomainError on length mismatch, fewer than 2 points, or constant input.
double pearson_r(std::span<const double> xs, std::span<const double> ys);

/// 100 * bandwidth / baseline_bw for each result. Values above 100 mean the
/// pattern is served from cache.
std::vector<NormalizedPoint> normalize_to_baseline(std::span<const KernelResult> results,
                                                   double baseline_bw);

/// One point per result at x = baseline_bw, preceded by the ("stride-1")
/// diagonal point.
std::vector<BwBwPoint> bwbw_points(std::span<const KernelResult> results, double baseline_bw);

/// Batch statistics plus optional normalization (baseline given) and
/// correlation of the bandwidths against `reference`.
SuiteReport summarize(std::vector<KernelResult> results,
                      std::optional<double> baseline_bw = std::nullopt,
                      std::optional<std::vector<double>> reference = std::nullopt,
                      std::optional<double> scatter_baseline_bw = std::nullopt);

} // namespace gsbench
