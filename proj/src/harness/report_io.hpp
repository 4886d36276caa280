#pragma once

#include <string>

#include "harness/config.hpp"
#include "harness/runner.hpp"

namespace charsum::harness {

/// Deviation rounded to three significant digits, as stored in reports.
double round3(double x);

std::string report_json(const RunConfig& config, const RunResult& result);
/// One row per report: suite,q,a_index,octic,checks,failed,max_deviation,wall_seconds.
std::string report_csv(const RunResult& result);

/// Throws Error(Io) when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace charsum::harness
