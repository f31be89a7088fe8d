#include "revadd/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <nlohmann/json.hpp>

namespace revadd {

using json = nlohmann::ordered_json;

std::string format_hundredths(const std::optional<std::int64_t>& hundredths) {
  if (!hundredths) return "-";
  const std::int64_t v = *hundredths;
  std::string frac = std::to_string(v % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(v / 100) + "." + frac;
}

namespace {

std::string status(const FormulaCheck& c) {
  if (c.equal()) return "equal";
  return c.asserted ? "DIFF" : "recorded";
}

json census_json(const Census& census) {
  json out = json::object();
  for (const auto& [kind, count] : census) out[std::string(to_string(kind))] = count;
  return out;
}

json metrics_json(const MetricsReport& m) {
  json out;
  out["width"] = m.width;
  out["gates"] = m.gates;
  out["quantum_cost"] = m.quantum_cost;
  out["step_delay"] = m.step_delay ? json(*m.step_delay) : json(nullptr);
  out["asap_depth"] = m.asap_depth;
  out["ancilla_inputs"] = m.ancilla_inputs;
  out["garbage_outputs"] = m.garbage_outputs;
  out["gate_census"] = census_json(m.gate_census);
  return out;
}

std::string role_name(const InputRole& r) { return std::holds_alternative<Ancilla>(r) ? "ancilla" : "primary"; }

std::string role_name(const OutputRole& r) {
  if (std::holds_alternative<Useful>(r)) return "useful";
  if (std::holds_alternative<RegeneratedInput>(r)) return "regenerated";
  return "garbage";
}

template <class Row>
void md_row(std::ostringstream& os, const Row& cells) {
  os << '|';
  for (const auto& c : cells) os << ' ' << c << " |";
  os << '\n';
}

void md_header(std::ostringstream& os, const std::vector<std::string>& cells) {
  md_row(os, cells);
  os << '|';
  for (std::size_t i = 0; i < cells.size(); ++i) os << "---|";
  os << '\n';
}

std::vector<std::string> table_header(const ComparisonTable& t) {
  std::vector<std::string> h{"n"};
  for (const auto& p : t.prior_labels) h.push_back(p);
  h.push_back(t.proposed_label);
  for (const auto& p : t.prior_labels) h.push_back("% impr. vs " + p);
  return h;
}

std::vector<std::string> table_cells(const ComparisonRow& r) {
  std::vector<std::string> cells{std::to_string(r.n)};
  for (auto v : r.prior) cells.push_back(std::to_string(v));
  cells.push_back(std::to_string(r.proposed));
  for (const auto& imp : r.improvement) cells.push_back(format_hundredths(imp));
  return cells;
}

const std::vector<std::string> kLedgerHeader{"family", "n", "metric", "formula", "expected", "measured", "status"};
const std::vector<std::string> kDiscrepancyHeader{"unit",     "metric",   "stated total", "stated components",
                                                  "stated sum", "measured", "measured sum", "additive"};

std::vector<std::string> ledger_cells(const FormulaCheck& c) {
  return {to_string(c.family), std::to_string(c.n), c.metric, c.formula,
          std::to_string(c.expected), std::to_string(c.measured), status(c)};
}

std::vector<std::string> discrepancy_cells(const Discrepancy& d) {
  return {d.unit,
          d.metric,
          std::to_string(d.stated_total),
          d.stated_components,
          std::to_string(d.stated_component_sum),
          std::to_string(d.measured),
          std::to_string(d.measured_component_sum),
          d.additive() ? "yes" : "no"};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
  os << '\n';
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
  json out;
  out["schema"] = kReportSchema;
  out["title"] = doc.title;
  if (doc.generated_at) out["generated_at"] = *doc.generated_at;
  json metrics = json::array();
  for (const auto& [name, m] : doc.metrics) {
    json entry{{"circuit", name}};
    entry.update(metrics_json(m));
    metrics.push_back(entry);
  }
  out["metrics"] = metrics;
  json tables = json::array();
  for (const ComparisonTable& t : doc.tables) {
    json jt{{"title", t.title}, {"metric", t.metric}, {"prior", t.prior_labels}, {"proposed", t.proposed_label}};
    json rows = json::array();
    for (const ComparisonRow& r : t.rows) {
      json imp = json::array();
      for (const auto& i : r.improvement) imp.push_back(i ? json(*i) : json(nullptr));
      rows.push_back({{"n", r.n}, {"prior", r.prior}, {"proposed", r.proposed}, {"improvement_hundredths", imp}});
    }
    jt["rows"] = rows;
    tables.push_back(jt);
  }
  out["tables"] = tables;
  json ledgers = json::array();
  for (const FormulaLedger& l : doc.ledgers) {
    json checks = json::array();
    for (const FormulaCheck& c : l.checks) {
      checks.push_back({{"family", to_string(c.family)},
                        {"n", c.n},
                        {"metric", c.metric},
                        {"formula", c.formula},
                        {"expected", c.expected},
                        {"measured", c.measured},
                        {"asserted", c.asserted},
                        {"equal", c.equal()}});
    }
    ledgers.push_back({{"pass", l.pass()}, {"failures", l.failures()}, {"checks", checks}});
  }
  out["formula_ledgers"] = ledgers;
  json disc = json::array();
  for (const Discrepancy& d : doc.discrepancies) {
    disc.push_back({{"unit", d.unit},
                    {"metric", d.metric},
                    {"stated_total", d.stated_total},
                    {"stated_components", d.stated_components},
                    {"stated_component_sum", d.stated_component_sum},
                    {"measured", d.measured},
                    {"measured_component_sum", d.measured_component_sum},
                    {"additive", d.additive()}});
  }
  out["discrepancies"] = disc;
  out["notes"] = doc.notes;
  return out.dump(2) + "\n";
}

std::string to_markdown(const ReportDocument& doc) {
  std::ostringstream os;
  os << "# " << doc.title << "\n\n";
  if (doc.generated_at) os << "Generated " << *doc.generated_at << "\n\n";
  if (!doc.metrics.empty()) {
    os << "## Metrics\n\n";
    md_header(os, {"circuit", "width", "gates", "quantum cost", "step delay", "ASAP depth", "ancilla", "garbage"});
    for (const auto& [name, m] : doc.metrics) {
      md_row(os, std::vector<std::string>{name, std::to_string(m.width), std::to_string(m.gates),
                                          std::to_string(m.quantum_cost),
                                          m.step_delay ? std::to_string(*m.step_delay) : "-",
                                          std::to_string(m.asap_depth), std::to_string(m.ancilla_inputs),
                                          std::to_string(m.garbage_outputs)});
    }
    os << '\n';
  }
  for (const ComparisonTable& t : doc.tables) {
    os << "## " << t.title << "\n\n";
    md_header(os, table_header(t));
    for (const ComparisonRow& r : t.rows) md_row(os, table_cells(r));
    os << '\n';
  }
  for (const FormulaLedger& l : doc.ledgers) {
    os << "## Formula ledger (" << (l.pass() ? "pass" : std::to_string(l.failures()) + " failing") << ")\n\n";
    md_header(os, kLedgerHeader);
    for (const FormulaCheck& c : l.checks) md_row(os, ledger_cells(c));
    os << '\n';
  }
  if (!doc.discrepancies.empty()) {
    os << "## Discrepancy ledger\n\n";
    md_header(os, kDiscrepancyHeader);
    for (const Discrepancy& d : doc.discrepancies) md_row(os, discrepancy_cells(d));
    os << '\n';
  }
  for (const std::string& n : doc.notes) os << "- " << n << '\n';
  return os.str();
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream os;
  bool first = true;
  const auto section = [&](const std::string& title) {
    if (!first) os << '\n';
    first = false;
    os << "# " << title << '\n';
  };
  if (!doc.metrics.empty()) {
    section("metrics");
    csv_row(os, {"circuit", "width", "gates", "quantum_cost", "step_delay", "asap_depth", "ancilla", "garbage"});
    for (const auto& [name, m] : doc.metrics) {
      csv_row(os, {name, std::to_string(m.width), std::to_string(m.gates), std::to_string(m.quantum_cost),
                   m.step_delay ? std::to_string(*m.step_delay) : "", std::to_string(m.asap_depth),
                   std::to_string(m.ancilla_inputs), std::to_string(m.garbage_outputs)});
    }
  }
  for (const ComparisonTable& t : doc.tables) {
    section(t.title);
    csv_row(os, table_header(t));
    for (const ComparisonRow& r : t.rows) csv_row(os, table_cells(r));
  }
  for (const FormulaLedger& l : doc.ledgers) {
    section("formula ledger");
    csv_row(os, kLedgerHeader);
    for (const FormulaCheck& c : l.checks) csv_row(os, ledger_cells(c));
  }
  if (!doc.discrepancies.empty()) {
    section("discrepancy ledger");
    csv_row(os, kDiscrepancyHeader);
    for (const Discrepancy& d : doc.discrepancies) csv_row(os, discrepancy_cells(d));
  }
  return os.str();
}

std::string circuit_to_json(const Circuit& circuit, const std::vector<std::string>& comments) {
  json out;
  out["schema"] = kReportSchema;
  out["name"] = circuit.name();
  out["comments"] = comments;
  json lines = json::array();
  for (std::size_t i = 0; i < circuit.width(); ++i) {
    const LineInfo& l = circuit.line(static_cast<Line>(i));
    json jl{{"variable", l.variable},
            {"input_role", role_name(l.input)},
            {"input", input_label(l)},
            {"output_role", role_name(l.output)},
            {"output", output_label(l, static_cast<Line>(i))}};
    if (is_ancilla(l)) jl["constant"] = std::get<Ancilla>(l.input).value ? 1 : 0;
    lines.push_back(jl);
  }
  out["lines"] = lines;
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    gates.push_back({{"kind", std::string(to_string(g.kind()))},
                     {"wires", std::vector<Line>(g.wires().begin(), g.wires().end())}});
  }
  out["gates"] = gates;
  json stages = json::array();
  for (const Stage& s : circuit.stages()) {
    stages.push_back({{"label", s.label}, {"first", s.first}, {"last", s.last}, {"depth", s.declared_depth}});
  }
  out["stages"] = stages;
  out["metrics"] = metrics_json(measure(circuit));
  return out.dump(2) + "\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace revadd
