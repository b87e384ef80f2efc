#include "gsbench/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "gsbench/error.hpp"

namespace gsbench {

namespace {

std::string fmt(const char *format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

std::string sig6(double v) { return fmt("%#.6g", v); }

std::string pad(const std::string &s, std::size_t width, bool right) {
  if (s.size() >= width)
    return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

std::string render_text(const SuiteReport &report, const OutputSpec &spec) {
  const std::vector<std::string> header = {"name",  "kernel",     "pattern",       "delta",
                                           "count", "min_time_s", "bandwidth_MB_s"};
  const std::vector<bool> right = {false, false, false, true, true, true, true};
  std::vector<std::vector<std::string>> rows;
  for (const auto &r : report.results)
    rows.push_back({r.config_name, std::string(to_string(r.kernel)), r.pattern,
                    std::to_string(r.delta), std::to_string(r.count), sig6(r.min_time),
                    sig6(r.bandwidth_mb_s)});

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto &row : rows)
      width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string> &cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c)
        out += "  ";
      // No trailing padding on the last column.
      out += c + 1 == cells.size() && !right[c] ? cells[c] : pad(cells[c], width[c], right[c]);
    }
    return out + "\n";
  };

  std::string out = line(header);
  for (const auto &row : rows)
    out += line(row);
  out += "\n";
  out += "MIN    " + sig6(report.min_bw) + " MB/s\n";
  out += "MAX    " + sig6(report.max_bw) + " MB/s\n";
  out += "HMEAN  " + sig6(report.harmonic_mean_bw) + " MB/s\n";
  if (report.correlation_r)
    out += "R      " + sig6(*report.correlation_r) + "\n";

  if (spec.include_normalized && report.normalized) {
    out += "\npercent of stride-1 bandwidth (" + sig6(*report.baseline_bw) + " MB/s";
    if (report.scatter_baseline_bw)
      out += ", scatter " + sig6(*report.scatter_baseline_bw) + " MB/s";
    out += ")\n";
    std::size_t w = 0;
    for (const auto &p : *report.normalized)
      w = std::max(w, p.config_name.size());
    for (const auto &p : *report.normalized)
      out += pad(p.config_name, w, false) + "  " + sig6(p.percent) + "\n";
  }
  if (spec.include_bwbw && report.bwbw) {
    out += "\nbandwidth-bandwidth points (x = stride-1 MB/s, y = pattern MB/s)\n";
    for (const auto &p : *report.bwbw)
      out += p.config_name + "  " + sig6(p.baseline_mb_s) + "  " + sig6(p.pattern_mb_s) + "\n";
  }
  return out;
}

std::string render_csv(const SuiteReport &report, const OutputSpec &spec) {
  const bool percent = spec.include_normalized && report.normalized;
  std::string out = "name,kernel,pattern,delta,count,runs,moved_bytes,min_time_s,bandwidth_mb_s";
  out += percent ? ",percent_of_baseline\r\n" : "\r\n";
  for (std::size_t k = 0; k < report.results.size(); ++k) {
    const auto &r = report.results[k];
    out += csv_field(r.config_name) + "," + std::string(to_string(r.kernel)) + "," +
           csv_field(r.pattern) + "," + std::to_string(r.delta) + "," + std::to_string(r.count) +
           "," + std::to_string(r.runs) + "," + std::to_string(r.moved_bytes) + "," +
           fmt("%.9f", r.min_time) + "," + fmt("%.3f", r.bandwidth_mb_s);
    if (percent)
      out += "," + fmt("%.3f", (*report.normalized)[k].percent);
    out += "\r\n";
  }
  return out;
}

std::string render_json(const SuiteReport &report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  ordered_json results = ordered_json::array();
  for (const auto &r : report.results) {
    ordered_json entry;
    entry["name"] = r.config_name;
    entry["kernel"] = to_string(r.kernel);
    entry["pattern"] = r.pattern;
    entry["pattern_length"] = r.pattern_length;
    entry["delta"] = r.delta;
    entry["count"] = r.count;
    entry["runs"] = r.runs;
    entry["baseline"] = r.baseline;
    entry["run_times_s"] = r.run_times;
    entry["min_time_s"] = r.min_time;
    entry["moved_bytes"] = r.moved_bytes;
    entry["bandwidth_mb_s"] = r.bandwidth_mb_s;
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);

  ordered_json summary;
  summary["min_bw_mb_s"] = report.min_bw;
  summary["max_bw_mb_s"] = report.max_bw;
  summary["harmonic_mean_bw_mb_s"] = report.harmonic_mean_bw;
  if (report.baseline_bw)
    summary["baseline_bw_mb_s"] = *report.baseline_bw;
  if (report.scatter_baseline_bw)
    summary["scatter_baseline_bw_mb_s"] = *report.scatter_baseline_bw;
  if (report.correlation_r)
    summary["correlation_r"] = *report.correlation_r;
  doc["summary"] = std::move(summary);

  if (report.normalized) {
    ordered_json normalized = ordered_json::array();
    for (const auto &p : *report.normalized)
      normalized.push_back({{"name", p.config_name}, {"percent", p.percent}});
    doc["normalized"] = std::move(normalized);
  }
  if (report.bwbw) {
    ordered_json points = ordered_json::array();
    for (const auto &p : *report.bwbw)
      points.push_back({{"name", p.config_name},
                        {"x_baseline_mb_s", p.baseline_mb_s},
                        {"y_pattern_mb_s", p.pattern_mb_s}});
    ordered_json bwbw;
    bwbw["points"] = std::move(points);
    bwbw["guide_fractions"] = kBwBwGuides;
    doc["bwbw"] = std::move(bwbw);
  }
  return doc.dump(2) + "\n";
}

} // namespace

ReportFormat parse_format(std::string_view text) {
  std::string f(text);
  std::transform(f.begin(), f.end(), f.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (f == "text")
    return ReportFormat::Text;
  if (f == "csv")
    return ReportFormat::Csv;
  if (f == "json")
    return ReportFormat::Json;
  throw UsageError("--format: expected text, csv or json, got '" + std::string(text) + "'");
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_report(const SuiteReport &report, const OutputSpec &spec) {
  switch (spec.format) {
  case ReportFormat::Csv:
    return render_csv(report, spec);
  case ReportFormat::Json:
    return render_json(report);
  case ReportFormat::Text:
    break;
  }
  return render_text(report, spec);
}

std::size_t emit_report(const SuiteReport &report, const OutputSpec &spec) {
  return emit_report(report, spec, std::cout);
}

std::size_t emit_report(const SuiteReport &report, const OutputSpec &spec, std::ostream &console) {
  const std::string text = render_report(report, spec);
  if (!spec.destination) {
    console << text << std::flush;
    if (!console)
      throw IoError("failed writing report to standard output");
    return text.size();
  }
  std::ofstream file(*spec.destination, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoError("cannot open '" + *spec.destination + "' for writing");
  file << text;
  file.close();
  if (!file)
    throw IoError("failed writing '" + *spec.destination + "'");
  return text.size();
}

} // namespace gsbench
