#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revadd/analysis.hpp"
#include "revadd/circuit.hpp"

namespace revadd {

inline constexpr int kReportSchema = 1;

/// One in-memory report; every rendering below is derived from it.
struct ReportDocument {
  std::string title;
  std::optional<std::string> generated_at;  // omitted for reproducible output
  std::vector<std::pair<std::string, MetricsReport>> metrics;
  std::vector<ComparisonTable> tables;
  std::vector<FormulaLedger> ledgers;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
};

/// "22.58" for 2258 hundredths, "-" for nullopt.
std::string format_hundredths(const std::optional<std::int64_t>& hundredths);

std::string to_json(const ReportDocument& doc);
std::string to_markdown(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);

/// Structural JSON of a circuit (lines with roles, gates, stages) plus its metrics.
std::string circuit_to_json(const Circuit& circuit, const std::vector<std::string>& comments = {});

/// UTC time stamp in ISO 8601.
std::string utc_timestamp();

}  // namespace revadd
