#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "gsbench/metrics.hpp"

namespace gsbench {

enum class ReportFormat { Text, Csv, Json };

struct OutputSpec {
  ReportFormat format = ReportFormat::Text;
  /// Standard output when empty.
  std::optional<std::string> destination;
  bool include_normalized = false;
  bool include_bwbw = false;
};

/// Case-insensitive "text" / "csv" / "json". Throws UsageError otherwise.
ReportFormat parse_format(std::string_view text);

/// Renders a report. Output depends only on the report contents, never on
/// locale or run environment.
///
/// Text: aligned table (name, kernel, pattern, delta, count, min_time_s,
/// bandwidth_MB_s) with 6 significant digits, then MIN/MAX/HMEAN and R.
/// CSV: RFC 4180, header
///   name,kernel,pattern,delta,count,runs,moved_bytes,min_time_s,bandwidth_mb_s
/// with times to 9 decimals and bandwidths to 3 decimals.
/// JSON: every field including all run times, at full double precision.
std::string render_report(const SuiteReport &report, const OutputSpec &spec);

/// Writes render_report() to spec.destination, or to `console` when no
/// destination is set. Returns the number of bytes written; throws IoError.
std::size_t emit_report(const SuiteReport &report, const OutputSpec &spec, std::ostream &console);
std::size_t emit_report(const SuiteReport &report, const OutputSpec &spec);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

} // namespace gsbench
