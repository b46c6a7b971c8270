// Machine-readable report output (CSV and JSON).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qss/harness/experiment.hpp"

namespace qss::harness {

enum class ReportFormat { Csv, Json };

ReportFormat parse_format(const std::string& name);

// CSV columns: variant,strategy,n,p,m,trials,detection_rate,detection_ci_low,
// detection_ci_high,cheater_accuracy,reconstruction_rate,epsilon_hat,seed
std::string render_csv(const std::vector<MetricsReport>& reports);

// JSON: array of objects mirroring the CSV field names.
std::string render_json(const std::vector<MetricsReport>& reports);

std::vector<MetricsReport> parse_json(const std::string& text);

void write_report(const std::vector<MetricsReport>& reports, const std::string& path,
                  ReportFormat format);

} // namespace qss::harness
