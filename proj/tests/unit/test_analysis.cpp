#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "revadd/analysis.hpp"
#include "revadd/formulas.hpp"
#include "revadd/generators.hpp"
#include "revadd/quantum.hpp"

namespace revadd {
namespace {

Circuit lines(std::size_t width) {
  Circuit c;
  for (std::size_t i = 0; i < width; ++i) {
    const std::string n = "x" + std::to_string(i);
    c.add_line(n, PrimaryInput{n}, RegeneratedInput{n});
  }
  return c;
}

std::vector<Circuit> every_generated_circuit() {
  std::vector<Circuit> out;
  for (std::size_t n = 1; n <= 8; ++n) {
    out.push_back(gen_rca_no_carry(n));
    out.push_back(gen_rca_with_carry(n));
  }
  out.push_back(gen_detection());
  out.push_back(gen_correction());
  out.push_back(gen_bin2bcd());
  for (int d = 1; d <= 4; ++d) {
    out.push_back(gen_rbcd(d));
    out.push_back(gen_ndigit_bcd(d, 3));
  }
  return out;
}

TEST(Metrics, UnitCosts) {
  EXPECT_EQ(unit_cost(GateKind::Not), 1);
  EXPECT_EQ(unit_cost(GateKind::Cnot), 1);
  EXPECT_EQ(unit_cost(GateKind::ControlledV), 1);
  EXPECT_EQ(unit_cost(GateKind::ControlledVplus), 1);
  EXPECT_EQ(unit_cost(GateKind::Toffoli), 5);
  EXPECT_EQ(unit_cost(GateKind::Peres), 4);
  EXPECT_EQ(unit_cost(GateKind::TR), 4);
  EXPECT_EQ(unit_cost(GateKind::Fredkin), 5);
}

TEST(Metrics, QuantumCost) {
  EXPECT_EQ(quantum_cost(Circuit{}), 0);
  EXPECT_EQ(quantum_cost(gen_rca_with_carry(16)), 234);
  EXPECT_EQ(quantum_cost(gen_rca_with_carry(512)), 7674);
  Circuit c = lines(3);
  c.add_gate(Gate::fredkin(0, 1, 2));
  c.add_gate(Gate::tr(0, 1, 2));
  EXPECT_EQ(quantum_cost(c), 9);
}

TEST(Metrics, QuantumCostIsAdditive) {
  const Circuit a = gen_rca_with_carry(4);
  const Circuit b = gen_bin2bcd();
  Circuit joined = lines(10);
  std::vector<Line> map_a(10);
  for (Line i = 0; i < 10; ++i) map_a[i] = i;
  joined.append(a, map_a);
  const std::vector<Line> map_b{1, 3, 5, 7, 9};
  joined.append(b, map_b);
  EXPECT_EQ(quantum_cost(joined), quantum_cost(a) + quantum_cost(b));
}

TEST(Metrics, StepDelay) {
  EXPECT_EQ(step_delay(gen_rca_with_carry(32)), 289);
  Circuit one = lines(3);
  one.add_gate(Gate::peres(0, 1, 2));
  EXPECT_THROW(step_delay(one), std::invalid_argument);
  EXPECT_FALSE(has_step_annotations(one));
  one.add_stage("peres", 0, 1, 4);
  EXPECT_EQ(step_delay(one), 4);
  EXPECT_EQ(step_delay(Circuit{}), 0);

  Circuit gap = lines(3);
  gap.add_gate(Gate::cnot(0, 1));
  gap.add_gate(Gate::cnot(1, 2));
  gap.add_stage("second", 1, 2, 1);
  EXPECT_THROW(step_delay(gap), std::invalid_argument);
}

TEST(Metrics, AsapDepth) {
  Circuit t = lines(3);
  t.add_gate(Gate::toffoli(0, 1, 2));
  EXPECT_EQ(asap_depth(t), 5);

  Circuit par = lines(4);
  par.add_gate(Gate::cnot(0, 1));
  par.add_gate(Gate::cnot(2, 3));
  EXPECT_EQ(asap_depth(par), 1);

  Circuit f = lines(4);
  f.add_gate(Gate::fredkin(0, 1, 2));
  f.add_gate(Gate::cnot(2, 3));
  EXPECT_EQ(asap_depth(f), 6);

  EXPECT_LE(asap_depth(gen_rca_no_carry(4)), 40);
}

TEST(Metrics, AsapOfOneGateIsItsDecompositionDepth) {
  for (GateKind k : {GateKind::Not, GateKind::Cnot, GateKind::Toffoli, GateKind::Peres, GateKind::TR}) {
    Circuit c = lines(3);
    const std::vector<Line> w{2, 0, 1};
    c.add_gate(Gate::make(k, std::span(w).first(arity(k))));
    EXPECT_EQ(asap_depth(c), verify_decomposition(k).depth) << to_string(k);
  }
}

TEST(Properties, AsapNeverExceedsStepDelay) {
  for (const Circuit& c : every_generated_circuit()) {
    EXPECT_LE(asap_depth(c), step_delay(c)) << c.name();
  }
}

TEST(Properties, QuantumCostMatchesPrimitiveCount) {
  for (const Circuit& c : every_generated_circuit()) {
    std::int64_t prims = 0;
    for (const Gate& g : c.gates()) prims += static_cast<std::int64_t>(primitives_of(g).size());
    EXPECT_EQ(quantum_cost(c), prims) << c.name();
  }
}

TEST(Metrics, MeasureBundlesEverything) {
  const MetricsReport m = measure(gen_rbcd(3));
  EXPECT_EQ(m.quantum_cost, 70);
  EXPECT_EQ(m.ancilla_inputs, 1u);
  EXPECT_EQ(m.garbage_outputs, 0u);
  ASSERT_TRUE(m.step_delay.has_value());
  EXPECT_EQ(m.width, 10u);
  std::size_t total = 0;
  for (const auto& [kind, count] : m.gate_census) total += count;
  EXPECT_EQ(total, m.gates);

  Circuit unstaged = lines(2);
  unstaged.add_gate(Gate::cnot(0, 1));
  EXPECT_FALSE(measure(unstaged).step_delay.has_value());
}

TEST(Formulas, CarryInAdderLedgerPasses) {
  std::vector<std::size_t> ns(64);
  for (std::size_t i = 0; i < ns.size(); ++i) ns[i] = i + 1;
  const FormulaLedger l = check_formulas(Family::RcaWithCarry, ns);
  EXPECT_TRUE(l.pass());
  EXPECT_EQ(l.checks.size(), 64u * 4);
  const auto n1_delay = std::find_if(l.checks.begin(), l.checks.end(),
                                     [](const FormulaCheck& c) { return c.n == 1 && c.metric == "delay"; });
  ASSERT_NE(n1_delay, l.checks.end());
  EXPECT_FALSE(n1_delay->asserted);
  EXPECT_EQ(n1_delay->measured, 9);
  EXPECT_EQ(n1_delay->expected, 10);
}

TEST(Formulas, MismatchesAreFlagged) {
  const std::vector<std::size_t> ns{1};
  const FormulaLedger l = check_formulas(Family::BcdDesign1, ns);
  EXPECT_FALSE(l.pass());
  for (const FormulaCheck& c : l.checks) {
    if (c.metric == "cost") {
      EXPECT_EQ(c.expected, 88);
      EXPECT_EQ(c.measured, 88);
    }
    if (c.metric == "delay") {
      EXPECT_EQ(c.expected, 73);
      EXPECT_TRUE(c.asserted);
      EXPECT_NE(c.measured, c.expected);
    }
  }
}

TEST(Formulas, FamilyNames) {
  EXPECT_EQ(parse_family("rca-carry"), Family::RcaWithCarry);
  EXPECT_EQ(to_string(Family::BcdDesign3), "bcd-design3");
  EXPECT_THROW(parse_family("ripple"), std::invalid_argument);
  EXPECT_EQ(quantum_cost(generate(Family::BcdDesign3, 1)), 70);
}

TEST(Formulas, Text) {
  EXPECT_EQ(design("proposed_nocarry").cost.text(), "13n-8");
  EXPECT_EQ(design("draper_ripple").delay.text(), "10n");
  EXPECT_EQ(design("proposed_carry").delay.text(), "9n+1");
  EXPECT_THROW(design("nope"), std::out_of_range);
}

// Prior-design cells of the published comparison tables.
TEST(Formulas, PriorDesignTableCells) {
  struct Row {
    std::int64_t n, draper_cost, tak05_cost, takr_cost, draper_delay, tak05_delay, takr_delay;
  };
  for (const Row& r : {Row{8, 124, 179, 111, 80, 165, 97}, Row{16, 260, 387, 231, 160, 357, 201},
                       Row{32, 532, 803, 471, 320, 741, 409}, Row{64, 1076, 1635, 951, 640, 1509, 825},
                       Row{128, 2164, 3299, 1911, 1280, 3045, 1657}, Row{256, 4340, 6627, 3831, 2560, 6117, 3321},
                       Row{512, 8692, 13283, 7671, 5120, 12261, 6649}}) {
    EXPECT_EQ(design("draper_ripple").cost(r.n), r.draper_cost);
    EXPECT_EQ(design("takahashi2005").cost(r.n), r.tak05_cost);
    EXPECT_EQ(design("takahashi_ripple").cost(r.n), r.takr_cost);
    EXPECT_EQ(design("draper_ripple").delay(r.n), r.draper_delay);
    EXPECT_EQ(design("takahashi2005").delay(r.n), r.tak05_delay);
    EXPECT_EQ(design("takahashi_ripple").delay(r.n), r.takr_delay);
  }
  EXPECT_EQ(design("draper_ripple_1").cost(8), 130);
  EXPECT_EQ(design("draper_ripple_2").cost(8), 114);
  EXPECT_EQ(design("draper_ripple_1").delay(512), 5122);
  EXPECT_EQ(design("draper_ripple_2").delay(512), 5112);
  EXPECT_EQ(design("thomsen").ancilla(8), 32);
  EXPECT_EQ(design("majid_bcd2009").garbage(8), 48);
  EXPECT_EQ(design("thomsen").cost(8), 1352);
  EXPECT_EQ(design("majid_bcd2009").cost(8), 824);
}

TEST(Comparison, ImprovementIsTruncatedHundredths) {
  EXPECT_EQ(improvement_hundredths(179, 96), 4636);
  EXPECT_EQ(improvement_hundredths(48, 7), 8541);
  EXPECT_EQ(improvement_hundredths(114, 114), std::nullopt);
  EXPECT_EQ(improvement_hundredths(72, 73), std::nullopt);
  EXPECT_EQ(improvement_hundredths(4, 1), 7500);
}

TEST(Comparison, TableShapes) {
  const std::vector<std::size_t> ns{8, 16};
  const auto nc = comparison_report(TableKind::NoCarry, ns);
  ASSERT_EQ(nc.size(), 2u);
  EXPECT_EQ(nc[0].metric, "cost");
  EXPECT_EQ(nc[1].metric, "delay");
  EXPECT_EQ(nc[0].prior_labels.size(), 3u);
  EXPECT_EQ(nc[0].rows.size(), 2u);

  const auto wc = comparison_report(TableKind::WithCarry, ns);
  EXPECT_EQ(wc[0].rows[1].proposed, 234);
  EXPECT_EQ(wc[0].rows[0].improvement[1], std::nullopt);

  const auto bcd = comparison_report(TableKind::Bcd, ns);
  ASSERT_EQ(bcd.size(), 3u);
  EXPECT_EQ(bcd[0].rows[0].prior, (std::vector<std::int64_t>{32, 16}));
  EXPECT_EQ(bcd[0].rows[0].proposed, 8);
}

TEST(Discrepancies, SubUnitsAddUp) {
  const auto rows = bcd_discrepancies();
  ASSERT_FALSE(rows.empty());
  for (const Discrepancy& d : rows) EXPECT_TRUE(d.additive()) << d.unit << ' ' << d.metric;
  const auto rbcd3 = std::find_if(rows.begin(), rows.end(),
                                  [](const Discrepancy& d) { return d.unit == "RBCD-3" && d.metric == "cost"; });
  ASSERT_NE(rbcd3, rows.end());
  EXPECT_TRUE(rbcd3->consistent());
  EXPECT_EQ(rbcd3->measured, 70);
}

}  // namespace
}  // namespace revadd
