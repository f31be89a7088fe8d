#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "revadd/generators.hpp"
#include "revadd/report.hpp"

namespace revadd {
namespace {

ReportDocument sample() {
  ReportDocument doc;
  doc.title = "sample";
  const std::vector<std::size_t> ns{8, 16};
  doc.tables = comparison_report(TableKind::WithCarry, ns);
  doc.metrics.emplace_back("rbcd-3", measure(gen_rbcd(3)));
  doc.ledgers.push_back(check_formulas(Family::RcaWithCarry, ns));
  doc.discrepancies = bcd_discrepancies();
  return doc;
}

TEST(Report, FormatHundredths) {
  EXPECT_EQ(format_hundredths(2258), "22.58");
  EXPECT_EQ(format_hundredths(640), "6.40");
  EXPECT_EQ(format_hundredths(7), "0.07");
  EXPECT_EQ(format_hundredths(std::nullopt), "-");
}

TEST(Report, JsonIsVersionedWithIntegerMetrics) {
  const auto j = nlohmann::json::parse(to_json(sample()));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_FALSE(j.contains("generated_at"));
  const auto& m = j["metrics"][0];
  EXPECT_EQ(m["circuit"], "rbcd-3");
  EXPECT_TRUE(m["quantum_cost"].is_number_integer());
  EXPECT_EQ(m["quantum_cost"], 70);
  const auto& row = j["tables"][0]["rows"][1];
  EXPECT_EQ(row["proposed"], 234);
  EXPECT_TRUE(row["improvement_hundredths"][0].is_number_integer());
  EXPECT_TRUE(j["tables"][0]["rows"][0]["improvement_hundredths"][1].is_null());
  EXPECT_EQ(j["formula_ledgers"][0]["pass"], true);
  EXPECT_FALSE(j["discrepancies"].empty());
}

TEST(Report, RenderingsShareOneDocument) {
  const ReportDocument doc = sample();
  const auto j = nlohmann::json::parse(to_json(doc));
  const std::string md = to_markdown(doc);
  const std::string csv = to_csv(doc);
  for (const auto& row : j["tables"][0]["rows"]) {
    const std::string proposed = std::to_string(row["proposed"].get<int>());
    EXPECT_NE(md.find("| " + proposed + " |"), std::string::npos);
    EXPECT_NE(csv.find("," + proposed + ","), std::string::npos);
  }
  EXPECT_NE(md.find("## Discrepancy ledger"), std::string::npos);
  EXPECT_NE(csv.find("# discrepancy ledger"), std::string::npos);
  EXPECT_NE(md.find("| 8 | 130 | 114 | 114 | 12.30 | - |"), std::string::npos) << md;
}

TEST(Report, Timestamp) {
  ReportDocument doc = sample();
  doc.generated_at = utc_timestamp();
  EXPECT_EQ(doc.generated_at->size(), 20u);
  EXPECT_EQ(nlohmann::json::parse(to_json(doc))["generated_at"], *doc.generated_at);
  EXPECT_EQ(to_json(sample()), to_json(sample()));
}

TEST(Report, CircuitJson) {
  const auto j = nlohmann::json::parse(circuit_to_json(gen_rbcd(1), {"note"}));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["name"], "rbcd-1");
  EXPECT_EQ(j["lines"].size(), 11u);
  EXPECT_EQ(j["metrics"]["quantum_cost"], 88);
  EXPECT_EQ(j["metrics"]["ancilla_inputs"], 2);
  EXPECT_EQ(j["comments"][0], "note");
  int constants = 0;
  for (const auto& l : j["lines"]) constants += l.contains("constant");
  EXPECT_EQ(constants, 2);
}

}  // namespace
}  // namespace revadd
