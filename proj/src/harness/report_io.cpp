#include "harness/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

namespace charsum::harness {

using json = nlohmann::ordered_json;

namespace {

json a_index_json(const VerificationReport& r) { return r.a_index ? json(*r.a_index) : json(nullptr); }

// JSON has no NaN; a NaN deviation is reported as null (and always fails).
json number(double x) { return std::isfinite(x) ? json(round3(x)) : json(nullptr); }

}  // namespace

double round3(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return std::strtod(buf, nullptr);
}

std::string report_json(const RunConfig& config, const RunResult& result) {
  json doc;
  doc["tolerance"] = {{"floor", config.tolerance.floor}, {"scale", config.tolerance.scale}};
  doc["summary"] = {{"reports", result.reports.size()},     {"checks", result.total_checks()},
                    {"failed", result.failed_checks()},     {"max_deviation", number(result.max_deviation())},
                    {"wall_seconds", result.wall_seconds},  {"exit_code", result.exit_code}};
  json reports = json::array();
  json checks = json::array();
  for (const auto& r : result.reports) {
    reports.push_back({{"suite", r.suite},
                       {"q", r.q},
                       {"a_index", a_index_json(r)},
                       {"octic", r.octic},
                       {"checks", r.checks.size()},
                       {"failed", r.failures()},
                       {"max_deviation", number(r.max_deviation)},
                       {"wall_seconds", r.wall_seconds}});
    for (const auto& c : r.checks)
      checks.push_back({{"suite", r.suite},
                        {"q", r.q},
                        {"a_index", a_index_json(r)},
                        {"octic", r.octic},
                        {"check_id", c.check_id},
                        {"inputs", c.inputs},
                        {"deviation", number(c.deviation)},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
  }
  doc["reports"] = std::move(reports);
  doc["checks"] = std::move(checks);
  return doc.dump(1) + "\n";
}

std::string report_csv(const RunResult& result) {
  std::string out = "suite,q,a_index,octic,checks,failed,max_deviation,wall_seconds\n";
  char buf[64];
  for (const auto& r : result.reports) {
    out += r.suite + "," + std::to_string(r.q) + "," + (r.a_index ? std::to_string(*r.a_index) : "") + "," +
           std::to_string(r.octic) + "," + std::to_string(r.checks.size()) + "," + std::to_string(r.failures()) + ",";
    std::snprintf(buf, sizeof buf, "%.2e,%.3f\n", r.max_deviation, r.wall_seconds);
    out += buf;
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace charsum::harness
