#include "revadd/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "revadd/generators.hpp"
#include "revadd/quantum.hpp"

namespace revadd {

int unit_cost(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Toffoli:
    case GateKind::Fredkin:
      return 5;
    case GateKind::Peres:
    case GateKind::TR:
      return 4;
    default:
      return 1;
  }
}

Census census(const Circuit& circuit) {
  Census out;
  for (const Gate& g : circuit.gates()) ++out[g.kind()];
  return out;
}

std::int64_t quantum_cost(const Circuit& circuit) {
  std::int64_t total = 0;
  for (const Gate& g : circuit.gates()) total += unit_cost(g.kind());
  return total;
}

bool has_step_annotations(const Circuit& circuit) noexcept {
  return !circuit.stages().empty() || circuit.gates().empty();
}

std::int64_t step_delay(const Circuit& circuit) {
  if (!has_step_annotations(circuit)) {
    throw std::invalid_argument("circuit '" + circuit.name() +
                                "' has no stage annotations; only asap_depth is available");
  }
  std::vector<Stage> stages(circuit.stages().begin(), circuit.stages().end());
  std::stable_sort(stages.begin(), stages.end(), [](const Stage& a, const Stage& b) { return a.first < b.first; });
  std::size_t covered = 0;
  std::int64_t total = 0;
  for (const Stage& s : stages) {
    if (s.first != covered) {
      throw std::invalid_argument("stage '" + s.label + "' does not start where the previous stage ends");
    }
    covered = s.last;
    total += s.declared_depth;
  }
  if (covered != circuit.gates().size()) throw std::invalid_argument("stages do not cover every gate");
  return total;
}

std::int64_t asap_depth(const Circuit& circuit) {
  std::vector<std::int64_t> finish(circuit.width(), 0);
  std::int64_t depth = 0;
  const auto schedule = [&](std::span<const Line> wires, std::int64_t duration) {
    std::int64_t start = 0;
    for (Line w : wires) start = std::max(start, finish[w]);
    for (Line w : wires) finish[w] = start + duration;
    depth = std::max(depth, start + duration);
  };
  for (const Gate& g : circuit.gates()) {
    if (g.kind() == GateKind::Fredkin) {
      schedule(g.wires(), unit_cost(GateKind::Fredkin));
      continue;
    }
    for (const Gate& p : primitives_of(g)) schedule(p.wires(), 1);
  }
  return depth;
}

std::size_t count_ancilla(const Circuit& circuit) {
  return static_cast<std::size_t>(std::count_if(circuit.lines().begin(), circuit.lines().end(),
                                                [](const LineInfo& l) { return is_ancilla(l); }));
}

std::size_t count_garbage(const Circuit& circuit) {
  return static_cast<std::size_t>(std::count_if(circuit.lines().begin(), circuit.lines().end(),
                                                [](const LineInfo& l) { return is_garbage(l); }));
}

MetricsReport measure(const Circuit& circuit) {
  MetricsReport r;
  r.width = circuit.width();
  r.gates = circuit.gates().size();
  r.quantum_cost = quantum_cost(circuit);
  if (has_step_annotations(circuit)) r.step_delay = step_delay(circuit);
  r.asap_depth = asap_depth(circuit);
  r.ancilla_inputs = count_ancilla(circuit);
  r.garbage_outputs = count_garbage(circuit);
  r.gate_census = census(circuit);
  return r;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::RcaNoCarry:
      return "rca-nocarry";
    case Family::RcaWithCarry:
      return "rca-carry";
    case Family::BcdDesign1:
      return "bcd-design1";
    case Family::BcdDesign2:
      return "bcd-design2";
    case Family::BcdDesign3:
      return "bcd-design3";
    case Family::BcdDesign4:
      return "bcd-design4";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::RcaNoCarry, Family::RcaWithCarry, Family::BcdDesign1, Family::BcdDesign2,
                   Family::BcdDesign3, Family::BcdDesign4}) {
    if (to_string(f) == text) return f;
  }
  throw std::invalid_argument("unknown family '" + text + "'");
}

namespace {

int bcd_design(Family f) { return static_cast<int>(f) - static_cast<int>(Family::BcdDesign1) + 1; }
bool is_adder(Family f) { return f == Family::RcaNoCarry || f == Family::RcaWithCarry; }

}  // namespace

const DesignFormulas& formulas_of(Family family) {
  if (is_adder(family)) return proposed_adder(family == Family::RcaWithCarry);
  return proposed_bcd(bcd_design(family));
}

Circuit generate(Family family, std::size_t n) {
  switch (family) {
    case Family::RcaNoCarry:
      return gen_rca_no_carry(n);
    case Family::RcaWithCarry:
      return gen_rca_with_carry(n);
    default:
      return gen_ndigit_bcd(bcd_design(family), n);
  }
}

bool FormulaLedger::pass() const noexcept { return failures() == 0; }

std::size_t FormulaLedger::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const FormulaCheck& c) { return c.asserted && !c.equal(); }));
}

FormulaLedger check_formulas(Family family, std::span<const std::size_t> ns) {
  const DesignFormulas& f = formulas_of(family);
  FormulaLedger ledger;
  for (std::size_t n : ns) {
    const MetricsReport m = measure(generate(family, n));
    const auto nn = static_cast<std::int64_t>(n);
    const auto add = [&](const char* metric, const Formula& formula, std::int64_t measured, bool asserted) {
      ledger.checks.push_back(FormulaCheck{family, n, metric, formula.text(), formula(nn), measured, asserted});
    };
    add("cost", f.cost, m.quantum_cost, true);
    add("delay", f.delay, m.step_delay.value_or(-1), !(is_adder(family) && n == 1));
    add("ancilla", f.ancilla, static_cast<std::int64_t>(m.ancilla_inputs), true);
    add("garbage", f.garbage, static_cast<std::int64_t>(m.garbage_outputs), true);
  }
  return ledger;
}

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::NoCarry:
      return "adder-nocarry";
    case TableKind::WithCarry:
      return "adder-carry";
    case TableKind::Bcd:
      return "bcd";
  }
  return "?";
}

std::optional<std::int64_t> improvement_hundredths(std::int64_t prior, std::int64_t proposed) {
  if (prior <= 0 || proposed >= prior) return std::nullopt;
  return (prior - proposed) * 10000 / prior;
}

std::vector<ComparisonTable> comparison_report(TableKind kind, std::span<const std::size_t> ns) {
  struct Column {
    std::string metric;
    std::string title;
  };
  std::vector<const DesignFormulas*> priors;
  std::vector<Column> columns;
  Family family = Family::RcaNoCarry;
  switch (kind) {
    case TableKind::NoCarry:
      for (const auto& d : no_carry_adders().first(3)) priors.push_back(&d);
      columns = {{"cost", "Quantum cost comparison of ripple carry adders (no input carry)"},
                 {"delay", "Delay comparison of ripple carry adders (no input carry)"}};
      break;
    case TableKind::WithCarry:
      family = Family::RcaWithCarry;
      for (const auto& d : with_carry_adders().first(2)) priors.push_back(&d);
      columns = {{"cost", "Quantum cost comparison of ripple carry adders (with input carry)"},
                 {"delay", "Delay comparison of ripple carry adders (with input carry)"}};
      break;
    case TableKind::Bcd:
      family = Family::BcdDesign3;
      priors = {&design("thomsen"), &design("majid_bcd2009")};
      columns = {{"ancilla", "Ancilla inputs comparison of n digit BCD adders"},
                 {"garbage", "Garbage outputs comparison of n digit BCD adders"},
                 {"cost", "Quantum cost comparison of n digit BCD adders"}};
      break;
  }

  std::vector<MetricsReport> measured;
  for (std::size_t n : ns) measured.push_back(measure(generate(family, n)));

  std::vector<ComparisonTable> tables;
  for (const Column& col : columns) {
    ComparisonTable t;
    t.title = col.title;
    t.metric = col.metric;
    t.proposed_label = formulas_of(family).label;
    for (const auto* p : priors) t.prior_labels.push_back(p->label);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const auto n = static_cast<std::int64_t>(ns[i]);
      const MetricsReport& m = measured[i];
      ComparisonRow row;
      row.n = ns[i];
      if (col.metric == "cost") row.proposed = m.quantum_cost;
      if (col.metric == "delay") row.proposed = m.step_delay.value_or(0);
      if (col.metric == "ancilla") row.proposed = static_cast<std::int64_t>(m.ancilla_inputs);
      if (col.metric == "garbage") row.proposed = static_cast<std::int64_t>(m.garbage_outputs);
      for (const auto* p : priors) {
        const Formula& f = col.metric == "cost"      ? p->cost
                           : col.metric == "delay"   ? p->delay
                           : col.metric == "ancilla" ? p->ancilla
                                                     : p->garbage;
        row.prior.push_back(f(n));
        row.improvement.push_back(improvement_hundredths(f(n), row.proposed));
      }
      t.rows.push_back(std::move(row));
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

std::vector<Discrepancy> bcd_discrepancies() {
  struct Unit {
    std::string name;
    Circuit circuit;
    std::int64_t cost;
    std::int64_t delay;
  };
  const auto& nc = proposed_adder(false);
  const auto& wc = proposed_adder(true);
  const Unit adder_c{"carry-in adder (n=4)", gen_rca_with_carry(4), wc.cost(4), wc.delay(4)};
  const Unit adder_n{"no-carry adder (n=4)", gen_rca_no_carry(4), nc.cost(4), nc.delay(4)};
  const Unit detect{"detection unit", gen_detection(), 17, 15};
  const Unit correct{"correction unit", gen_correction(), 16, 16};
  const Unit convert{"binary-to-BCD converter", gen_bin2bcd(), 16, 16};
  const std::int64_t fanout = 1;

  std::vector<Discrepancy> out;
  const auto add_unit = [&](const Unit& u) {
    out.push_back({u.name, "cost", u.cost, u.cost, std::to_string(u.cost), quantum_cost(u.circuit),
                   quantum_cost(u.circuit)});
    out.push_back({u.name, "delay", u.delay, u.delay, std::to_string(u.delay), step_delay(u.circuit),
                   step_delay(u.circuit)});
  };
  for (const Unit* u : {&adder_c, &adder_n, &detect, &correct, &convert}) add_unit(*u);

  // Stated one-digit totals. RBCD-2's 80/80 differs from 88n-18 / 73n-1 at n = 1.
  const std::int64_t total_cost[4] = {88, 80, 70, 62};
  const std::int64_t total_delay[4] = {73, 80, 57, 54};
  for (int v = 1; v <= 4; ++v) {
    const Unit& adder = (v == 1 || v == 3) ? adder_c : adder_n;
    const Circuit whole = gen_rbcd(v);
    std::vector<const Unit*> parts{&adder};
    if (v <= 2) {
      parts.push_back(&detect);
      parts.push_back(&correct);
    } else {
      parts.push_back(&convert);
    }
    for (const std::string metric : {"cost", "delay"}) {
      const bool cost = metric == "cost";
      Discrepancy d;
      d.unit = "RBCD-" + std::to_string(v);
      d.metric = metric;
      d.stated_total = cost ? total_cost[v - 1] : total_delay[v - 1];
      d.measured = cost ? quantum_cost(whole) : step_delay(whole);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::int64_t stated = cost ? parts[i]->cost : parts[i]->delay;
        const std::int64_t measured = cost ? quantum_cost(parts[i]->circuit) : step_delay(parts[i]->circuit);
        d.stated_component_sum += stated;
        d.measured_component_sum += measured;
        d.stated_components += (i ? "+" : "") + std::to_string(stated);
        if (i == 0 && v <= 2) {
          d.stated_component_sum += fanout;
          d.measured_component_sum += fanout;
          d.stated_components += "+" + std::to_string(fanout);
        }
      }
      out.push_back(std::move(d));
    }
  }

  // Two-digit cascades against the n-digit formulas.
  for (int design = 1; design <= 4; ++design) {
    const int later = design <= 2 ? 1 : 3;
    const DesignFormulas& f = proposed_bcd(design);
    const Circuit whole = gen_ndigit_bcd(design, 2);
    const Circuit first = gen_rbcd(design);
    const Circuit next = gen_rbcd(later);
    for (const std::string metric : {"cost", "delay"}) {
      const bool cost = metric == "cost";
      Discrepancy d;
      d.unit = "design " + std::to_string(design) + " (n=2)";
      d.metric = metric;
      d.stated_total = cost ? f.cost(2) : f.delay(2);
      const std::int64_t s1 = cost ? total_cost[design - 1] : total_delay[design - 1];
      const std::int64_t s2 = cost ? total_cost[later - 1] : total_delay[later - 1];
      d.stated_component_sum = s1 + s2;
      d.stated_components = std::to_string(s1) + "+" + std::to_string(s2);
      d.measured = cost ? quantum_cost(whole) : step_delay(whole);
      d.measured_component_sum = cost ? quantum_cost(first) + quantum_cost(next) : step_delay(first) + step_delay(next);
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace revadd
