#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "revadd/circuit.hpp"
#include "revadd/simulate.hpp"

namespace revadd {
namespace {

// One-bit half adder: (a, b, 0) -> (a, a^b, ab).
Circuit half_adder() {
  Circuit c("half-adder");
  const Line a = c.add_line("a", PrimaryInput{"a"}, RegeneratedInput{"a"});
  const Line b = c.add_line("b", PrimaryInput{"b"}, Useful{"s"});
  const Line k = c.add_line("k", Ancilla{false}, Useful{"carry"});
  c.add_gate(Gate::peres(a, b, k));
  return c;
}

FunctionalSpec half_adder_spec() {
  FunctionalSpec spec;
  spec.name = "a + b";
  spec.inputs = {{"a", {"a"}}, {"b", {"b"}}};
  spec.outputs = {{"sum", {"s", "carry"}}};
  spec.eval = [](std::span<const std::uint64_t> in) -> std::optional<std::vector<std::uint64_t>> {
    return std::vector<std::uint64_t>{in[0] + in[1]};
  };
  return spec;
}

TEST(Circuit, AddGateChecks) {
  Circuit c = half_adder();
  EXPECT_THROW(c.add_gate(Gate::controlled_v(0, 1)), std::invalid_argument);
  EXPECT_THROW(c.add_gate(Gate::cnot(0, 3)), std::invalid_argument);
  EXPECT_EQ(c.gates().size(), 1u);
}

TEST(Circuit, StageRangeChecks) {
  Circuit c = half_adder();
  EXPECT_THROW(c.add_stage("x", 0, 2, 1), std::invalid_argument);
  EXPECT_THROW(c.add_stage("x", 0, 1, -1), std::invalid_argument);
  c.add_stage("x", 0, 1, 4);
  EXPECT_EQ(c.stages().size(), 1u);
}

TEST(Circuit, ValidateCatchesNamingProblems) {
  EXPECT_NO_THROW(half_adder().validate());

  Circuit dup;
  dup.add_line("x", PrimaryInput{"x"}, Useful{"o1"});
  dup.add_line("x", PrimaryInput{"y"}, Useful{"o2"});
  EXPECT_THROW(dup.validate(), std::invalid_argument);

  Circuit ghost;
  ghost.add_line("x", PrimaryInput{"x"}, RegeneratedInput{"w"});
  EXPECT_THROW(ghost.validate(), std::invalid_argument);

  Circuit shadow;
  shadow.add_line("x", PrimaryInput{"x"}, RegeneratedInput{"x"});
  shadow.add_line("y", PrimaryInput{"y"}, Useful{"x2"});
  shadow.add_line("z", Ancilla{false}, Useful{"y"});
  EXPECT_THROW(shadow.validate(), std::invalid_argument);
}

TEST(Circuit, OutputLabels) {
  Circuit c;
  c.add_line("x", Ancilla{true}, Garbage{});
  c.add_line("y", Ancilla{false}, Garbage{"g7"});
  EXPECT_EQ(input_label(c.line(0)), "1");
  EXPECT_EQ(output_label(c.line(0), 0), "g0");
  EXPECT_EQ(output_label(c.line(1), 1), "g7");
}

TEST(Circuit, AppendRemapsGatesAndPrefixesStages) {
  Circuit sub;
  sub.add_line("p", PrimaryInput{"p"}, Useful{"p2"});
  sub.add_line("q", PrimaryInput{"q"}, Useful{"q2"});
  sub.add_gate(Gate::cnot(0, 1));
  sub.add_stage("only", 0, 1, 1);

  Circuit host = half_adder();
  host.add_stage("first", 0, 1, 4);
  const std::vector<Line> map{2, 0};
  host.append(sub, map, "tail");
  ASSERT_EQ(host.gates().size(), 2u);
  EXPECT_EQ(host.gates()[1], Gate::cnot(2, 0));
  ASSERT_EQ(host.stages().size(), 2u);
  EXPECT_EQ(host.stages()[1], (Stage{"tail.only", 1, 2, 1}));
  const std::vector<Line> short_map{0};
  EXPECT_THROW(host.append(sub, short_map), std::invalid_argument);

  const Circuit head = host.prefix(1);
  EXPECT_EQ(head.gates().size(), 1u);
  EXPECT_EQ(head.stages().size(), 1u);
  EXPECT_EQ(head.width(), host.width());
}

TEST(Simulate, NamedAssignment) {
  const Circuit c = half_adder();
  const Assignment out = simulate(c, {{"a", true}, {"b", true}});
  EXPECT_TRUE(out.at("a"));
  EXPECT_FALSE(out.at("s"));
  EXPECT_TRUE(out.at("carry"));
  EXPECT_THROW(simulate(c, {{"a", true}}), std::invalid_argument);
  EXPECT_THROW(simulate(c, {{"a", true}, {"b", true}, {"q", false}}), std::invalid_argument);
}

TEST(Simulate, WordAndWideStatesAgree) {
  Circuit c;
  for (int i = 0; i < 70; ++i) c.add_line("x" + std::to_string(i), PrimaryInput{"x" + std::to_string(i)}, Garbage{});
  c.add_gate(Gate::toffoli(68, 69, 3));
  c.add_gate(Gate::cnot(3, 66));
  BitState s(70);
  s.set(68, true);
  s.set(69, true);
  const BitState out = simulate_state(c, s);
  EXPECT_TRUE(out.get(3));
  EXPECT_TRUE(out.get(66));
  EXPECT_THROW(simulate_word(c, 0), std::invalid_argument);
  EXPECT_THROW(simulate_state(c, BitState(3)), std::invalid_argument);
}

TEST(Simulate, TruthTable) {
  const TruthTable t = truth_table(half_adder());
  EXPECT_EQ(t.mapping.size(), 8u);
  EXPECT_TRUE(t.is_permutation());
  EXPECT_EQ(t(0b011), Word{0b101});  // a=1, b=1 -> s=0, carry=1

  TruthTable broken{2, {0, 1, 1, 3}};
  EXPECT_FALSE(broken.is_permutation());

  Circuit wide;
  for (int i = 0; i < 17; ++i) wide.add_line("x" + std::to_string(i), PrimaryInput{"x" + std::to_string(i)}, Garbage{});
  try {
    truth_table(wide);
    FAIL() << "expected the exhaustive bound to be enforced";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("16"), std::string::npos);
  }
}

TEST(CheckRoles, PassesOnCorrectCircuit) {
  const FunctionalSpec spec = half_adder_spec();
  const RoleCheckResult r = check_roles(half_adder(), {}, &spec);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.points, 4u);
}

TEST(CheckRoles, ReportsBrokenRegenerationAndSpec) {
  Circuit c = half_adder();
  c.add_gate(Gate::cnot(1, 0));  // a is no longer regenerated
  const FunctionalSpec spec = half_adder_spec();
  const RoleCheckResult r = check_roles(c, {}, &spec);
  EXPECT_FALSE(r.ok());
  bool regen = false;
  for (const RoleViolation& v : r.violations) regen = regen || v.kind == RoleViolation::Kind::Regeneration;
  EXPECT_TRUE(regen);

  Circuit wrong = half_adder();
  wrong.add_gate(Gate::not_gate(2));
  const RoleCheckResult w = check_roles(wrong, {}, &spec);
  EXPECT_EQ(w.violation_count, 4u);
  EXPECT_EQ(w.violations.front().kind, RoleViolation::Kind::Specification);
}

TEST(CheckRoles, WithoutSpecOnlyRegenerationIsChecked) {
  EXPECT_TRUE(check_roles(half_adder()).ok());
}

TEST(CheckRoles, SamplingAndRefusal) {
  Circuit c;
  for (int i = 0; i < 20; ++i) {
    const std::string n = "x" + std::to_string(i);
    c.add_line(n, PrimaryInput{n}, RegeneratedInput{n});
  }
  CheckOptions o;
  o.samples = 0;
  EXPECT_THROW(check_roles(c, o), std::invalid_argument);
  o.samples = 500;
  const RoleCheckResult r = check_roles(c, o);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.points, 500u);
  EXPECT_TRUE(r.ok());
  o.exhaustive_bound = 20;
  EXPECT_TRUE(check_roles(c, o).exhaustive);
  EXPECT_EQ(domain_size(c, nullptr), std::uint64_t{1} << 20);
}

TEST(CheckRoles, FieldLimitsAndErrors) {
  FunctionalSpec spec = half_adder_spec();
  spec.inputs[0].limit = 1;  // a stays 0
  const RoleCheckResult r = check_roles(half_adder(), {}, &spec);
  EXPECT_EQ(r.points, 2u);
  EXPECT_EQ(domain_size(half_adder(), &spec), 2u);

  FunctionalSpec missing = half_adder_spec();
  missing.inputs.pop_back();
  EXPECT_THROW(check_roles(half_adder(), {}, &missing), std::invalid_argument);

  FunctionalSpec unknown = half_adder_spec();
  unknown.outputs[0].bits.push_back("nope");
  EXPECT_THROW(check_roles(half_adder(), {}, &unknown), std::invalid_argument);
}

}  // namespace
}  // namespace revadd
