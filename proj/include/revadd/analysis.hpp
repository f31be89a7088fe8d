#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revadd/circuit.hpp"
#include "revadd/formulas.hpp"

namespace revadd {

/// Quantum cost of one gate: NOT, CNOT, CV, CV+ 1; Toffoli 5; Peres 4; TR 4; Fredkin 5.
int unit_cost(GateKind kind) noexcept;

using Census = std::map<GateKind, std::size_t>;

Census census(const Circuit& circuit);
std::int64_t quantum_cost(const Circuit& circuit);

/// Sum of the declared stage depths. Throws std::invalid_argument when a circuit
/// with gates has no stage annotations or when the stages do not tile the gate list.
std::int64_t step_delay(const Circuit& circuit);
bool has_step_annotations(const Circuit& circuit) noexcept;

/// Dependency depth after expanding every gate into primitives; a Fredkin gate is
/// scheduled as one opaque 5Δ block on its three wires.
std::int64_t asap_depth(const Circuit& circuit);

std::size_t count_ancilla(const Circuit& circuit);
std::size_t count_garbage(const Circuit& circuit);

struct MetricsReport {
  std::size_t width = 0;
  std::size_t gates = 0;
  std::int64_t quantum_cost = 0;
  std::optional<std::int64_t> step_delay;  // absent without stage annotations
  std::int64_t asap_depth = 0;
  std::size_t ancilla_inputs = 0;
  std::size_t garbage_outputs = 0;
  Census gate_census;
};

MetricsReport measure(const Circuit& circuit);

/// Families that check_formulas can generate and measure.
enum class Family { RcaNoCarry, RcaWithCarry, BcdDesign1, BcdDesign2, BcdDesign3, BcdDesign4 };
std::string to_string(Family family);
Family parse_family(const std::string& text);
const DesignFormulas& formulas_of(Family family);
Circuit generate(Family family, std::size_t n);

struct FormulaCheck {
  Family family = Family::RcaNoCarry;
  std::size_t n = 0;
  std::string metric;   // "cost", "delay", "ancilla", "garbage"
  std::string formula;  // textual closed form
  std::int64_t expected = 0;
  std::int64_t measured = 0;
  bool asserted = true;  // false for values that are only recorded (adder delay at n = 1)
  bool equal() const noexcept { return expected == measured; }
};

struct FormulaLedger {
  std::vector<FormulaCheck> checks;
  /// True when every asserted check is equal.
  bool pass() const noexcept;
  std::size_t failures() const noexcept;
};

FormulaLedger check_formulas(Family family, std::span<const std::size_t> ns);

enum class TableKind { NoCarry, WithCarry, Bcd };
std::string to_string(TableKind kind);

struct ComparisonRow {
  std::size_t n = 0;
  std::vector<std::int64_t> prior;
  std::int64_t proposed = 0;
  /// Improvement over each prior design in hundredths of a percent, truncated;
  /// nullopt when the proposed value is not smaller ("-").
  std::vector<std::optional<std::int64_t>> improvement;
};

struct ComparisonTable {
  std::string title;
  std::string metric;  // "cost", "delay", "ancilla", "garbage"
  std::vector<std::string> prior_labels;
  std::string proposed_label;
  std::vector<ComparisonRow> rows;
};

/// (prior - proposed) / prior * 100 in hundredths, truncated; nullopt when <= 0.
std::optional<std::int64_t> improvement_hundredths(std::int64_t prior, std::int64_t proposed);

/// Prior values come from their formulas, proposed values are measured on generated
/// circuits. NoCarry and WithCarry give cost and delay tables; Bcd gives ancilla,
/// garbage and cost tables against the Thomsen and Mohammadi 2009 designs using design 3.
std::vector<ComparisonTable> comparison_report(TableKind kind, std::span<const std::size_t> ns);

/// One line of the BCD discrepancy ledger: a stated total, the sum of the stated
/// component values, and the values measured on the netlists.
struct Discrepancy {
  std::string unit;
  std::string metric;
  std::int64_t stated_total = 0;
  std::int64_t stated_component_sum = 0;
  std::string stated_components;
  std::int64_t measured = 0;
  std::int64_t measured_component_sum = 0;
  bool additive() const noexcept { return measured == measured_component_sum; }
  bool consistent() const noexcept { return stated_total == stated_component_sum && measured == stated_total; }
};

/// Cost and delay of the four one-digit BCD adders and the sub-units they are built from.
std::vector<Discrepancy> bcd_discrepancies();

}  // namespace revadd
