#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "revadd/circuit.hpp"
#include "revadd/simulate.hpp"

namespace revadd {

/// Line indices of a ripple-carry adder. a[i] is memory location A_i, b[i] is B_i,
/// z is A_n and c0 (with input carry only) is A_{-1}.
struct AdderLayout {
  std::size_t n = 0;
  bool with_input_carry = false;
  std::vector<Line> a;
  std::vector<Line> b;
  Line z = 0;
  std::optional<Line> c0;
  std::size_t width() const noexcept { return 2 * n + 1 + (c0 ? 1 : 0); }
};

/// Without carry: b_i at 2i, a_i at 2i+1, z at 2n.
/// With carry: c0 at 0, b_i at 2i+1, a_i at 2i+2, z at 2n+1.
AdderLayout adder_layout(std::size_t n, bool with_input_carry);

/// Ripple-carry adder without input carry and without ancilla. B_i ends with s_i,
/// A_i with a_i, z with z^s_n. Stages "step1".."step6" carry the hand delay accounting.
Circuit gen_rca_no_carry(std::size_t n);

/// Ripple-carry adder with input carry c0, no ancilla. Stages "step1", "step2",
/// "step3a", "step3b", "step4a", "step4b", "step5", "step6".
Circuit gen_rca_with_carry(std::size_t n);

/// Output-carry detection on (K1, K2, K3, Cout, 0): the Cout line ends with
/// OC = Cout ^ K3(K2+K1); K1..K3 are regenerated and the ancilla returns to 0.
Circuit gen_detection();

/// Adds 0110 to K3..K0 when OC = 1, using a 2-bit no-carry adder with OC on both
/// A lines and K3 at z. Lines (K0, K1, K2, K3, OC, OC2); OC and OC2 must agree.
Circuit gen_correction();

/// Five-line converter from v = (K0..K3, Cout) in [0, 19] to BCD digit D3..D0 and carry C.
Circuit gen_bin2bcd();

/// One-digit BCD adder. 1: carry-in adder + detection + fanout + correction;
/// 2: as 1 with the no-carry adder; 3: carry-in adder + converter; 4: no-carry adder + converter.
Circuit gen_rbcd(int variant);

/// n-digit ripple cascade. Design 1: n x RBCD-1; 2: RBCD-2 then RBCD-1s;
/// 3: n x RBCD-3; 4: RBCD-4 then RBCD-3s. Each digit's carry line becomes the next
/// digit's c0 line and leaves the circuit as garbage.
Circuit gen_ndigit_bcd(int design, std::size_t n);

/// True for the designs that take a decimal carry-in (1 and 3).
bool bcd_has_carry_in(int design);

// Reference behaviour for check_roles.
FunctionalSpec adder_spec(std::size_t n, bool with_input_carry);
FunctionalSpec detection_spec();
FunctionalSpec correction_spec();
FunctionalSpec bin2bcd_spec();
FunctionalSpec rbcd_spec(int variant);
FunctionalSpec ndigit_bcd_spec(int design, std::size_t n);

/// Names used by the BCD generators for digit `digit` of an n-digit adder.
std::string bcd_signal(const std::string& base, std::size_t digit, std::size_t digits);

}  // namespace revadd
