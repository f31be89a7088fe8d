#include <gtest/gtest.h>

#include <string>

#include "revadd/analysis.hpp"
#include "revadd/generators.hpp"
#include "revadd/real_io.hpp"
#include "revadd/simulate.hpp"

namespace revadd {
namespace {

constexpr const char* kThreeToffolis = R"(# three Toffoli gates
.version 1.0
.numvars 4
.variables a b c d
.inputs a b c d
.outputs a b c d
.constants ----
.garbage ----
.begin
t3 a b c
t3 b c d
t3 a c d
.end
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_real(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string with_body(const std::string& body) {
  return ".numvars 3\n.variables a b c\n.begin\n" + body + ".end\n";
}

TEST(RealIo, HandWrittenFile) {
  const Circuit c = parse_real(kThreeToffolis);
  EXPECT_EQ(c.width(), 4u);
  EXPECT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(quantum_cost(c), 15);
  EXPECT_EQ(c.gates()[1], Gate::toffoli(1, 2, 3));
  // Outputs named like inputs are read as regenerated lines.
  EXPECT_TRUE(std::holds_alternative<RegeneratedInput>(c.line(0).output));
}

TEST(RealIo, RoundTripOfGeneratedNetlists) {
  for (const Circuit& c : {gen_rca_no_carry(2), gen_rca_with_carry(5), gen_detection(), gen_correction(),
                           gen_bin2bcd(), gen_rbcd(1), gen_rbcd(4), gen_ndigit_bcd(2, 3)}) {
    const Circuit back = parse_real(emit_real(c));
    EXPECT_EQ(back, c) << c.name();
    EXPECT_EQ(emit_real(back), emit_real(c)) << c.name();
  }
}

TEST(RealIo, ConstantsAndGarbage) {
  const std::string text = emit_real(gen_rbcd(1));
  EXPECT_NE(text.find(".constants ---------00\n"), std::string::npos) << text;
  EXPECT_NE(text.find(".garbage ----------1\n"), std::string::npos) << text;
  const Circuit back = parse_real(text);
  EXPECT_EQ(count_ancilla(back), 2u);
  EXPECT_EQ(count_garbage(back), 1u);
}

TEST(RealIo, CommentsAndStages) {
  RealOptions o;
  o.comments = {"generator: test"};
  const std::string text = emit_real(gen_rca_no_carry(3), o);
  EXPECT_NE(text.find("# generator: test\n"), std::string::npos);
  EXPECT_NE(text.find("#@stage step3 "), std::string::npos);
  o.stages = false;
  const Circuit plain = parse_real(emit_real(gen_rca_no_carry(3), o));
  EXPECT_TRUE(plain.stages().empty());
}

TEST(RealIo, ErrorsNameTheLine) {
  EXPECT_EQ(error_line(with_body("t2 a a\n")), 4u);
  EXPECT_EQ(error_line(with_body("t1 a\nq2 a b\n")), 5u);
  EXPECT_EQ(error_line(with_body("t2 a x\n")), 4u);
  EXPECT_EQ(error_line(with_body("t3 a b\n")), 4u);
  EXPECT_EQ(error_line(".numvars 2\n.variables a b c\n.begin\n.end\n"), 3u);
  EXPECT_EQ(error_line(".numvars 2\n.variables a b\n.constants 0\n.begin\n.end\n"), 4u);
  EXPECT_EQ(error_line(".numvars 2\n.bogus\n"), 2u);
  EXPECT_EQ(error_line(".numvars 2\n.variables a a\n.begin\n.end\n"), 3u);

  try {
    parse_real(with_body("t2 a a\n"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 4: ", 0), 0u) << e.what();
  }
  EXPECT_THROW(parse_real(".numvars 1\n.variables a\n.begin\nt1 a\n"), ParseError);
  EXPECT_THROW(parse_real(""), ParseError);
}

TEST(RealIo, ExpandToToffoliKeepsTheFunction) {
  for (const Circuit& c : {gen_rca_with_carry(3), gen_rbcd(4), gen_detection()}) {
    const Circuit e = expand_to_toffoli(c);
    for (const Gate& g : e.gates()) {
      EXPECT_TRUE(g.kind() == GateKind::Not || g.kind() == GateKind::Cnot || g.kind() == GateKind::Toffoli);
    }
    EXPECT_EQ(truth_table(e), truth_table(c)) << c.name();
    EXPECT_TRUE(e.stages().empty());
    EXPECT_EQ(parse_real(emit_real(e)), e);
  }
  Circuit one;
  for (const char* n : {"a", "b", "c"}) one.add_line(n, PrimaryInput{n}, Garbage{});
  one.add_gate(Gate::peres(0, 1, 2));
  EXPECT_EQ(quantum_cost(expand_to_toffoli(one)), 6);
}

TEST(RealIo, EmitRejectsUnwritableNames) {
  Circuit c;
  c.add_line("has space", PrimaryInput{"x"}, RegeneratedInput{"x"});
  EXPECT_THROW(emit_real(c), std::invalid_argument);
}

}  // namespace
}  // namespace revadd
