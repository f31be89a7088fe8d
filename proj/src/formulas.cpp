#include "revadd/formulas.hpp"

#include <array>
#include <stdexcept>

namespace revadd {

std::int64_t Formula::operator()(std::int64_t n) const noexcept {
  if (n == 1 && at_one) return *at_one;
  return slope * n + offset;
}

std::string Formula::text() const {
  if (!known) return "-";
  std::string out;
  if (slope != 0) out = (slope == 1 ? "" : std::to_string(slope)) + "n";
  if (offset != 0 || slope == 0) {
    if (slope != 0 && offset > 0) out += "+";
    out += std::to_string(offset);
  }
  return out;
}

namespace {

constexpr Formula lin(std::int64_t slope, std::int64_t offset = 0) { return Formula{slope, offset, std::nullopt, true}; }
constexpr Formula unknown() { return Formula{0, 0, std::nullopt, false}; }

const std::array<DesignFormulas, 4>& no_carry_table() {
  static const std::array<DesignFormulas, 4> table{{
      {"draper_ripple", "Draper ripple", false, lin(17, -12), lin(10), lin(0, 1), lin(0, 1)},
      {"takahashi2005", "Takahashi 2005", false, Formula{26, -29, 8, true}, Formula{24, -27, 8, true}, lin(0),
       lin(0)},
      {"takahashi_ripple", "Takahashi ripple", false, lin(15, -9), lin(13, -7), lin(0), lin(0)},
      {"proposed_nocarry", "Proposed", true, lin(13, -8), lin(11, -4), lin(0), lin(0)},
  }};
  return table;
}

const std::array<DesignFormulas, 3>& with_carry_table() {
  static const std::array<DesignFormulas, 3> table{{
      {"draper_ripple_1", "Draper ripple design 1", false, lin(17, -6), lin(10, 2), lin(0), lin(0)},
      {"draper_ripple_2", "Draper ripple design 2", false, lin(17, -22), lin(10, -8), lin(0), lin(0)},
      {"proposed_carry", "Proposed", true, lin(15, -6), lin(9, 1), lin(0), lin(0)},
  }};
  return table;
}

const std::array<DesignFormulas, 9>& bcd_table() {
  static const std::array<DesignFormulas, 9> table{{
      {"babu_bcd06", "Babu 2006", false, lin(110), unknown(), lin(17), lin(18)},
      {"biswas", "Biswas", false, lin(55), unknown(), lin(7), lin(6)},
      {"thomsen", "Thomsen", false, lin(169), unknown(), lin(4), lin(4)},
      {"majid_bcd1", "Mohammadi", false, lin(84), unknown(), lin(14), lin(16)},
      {"majid_bcd2009", "Mohammadi 2009 design 3", false, lin(103), unknown(), lin(2), lin(6)},
      {"bcd_design1", "Design 1", true, lin(88), lin(73), lin(2), lin(2, -1)},
      {"bcd_design2", "Design 2", true, lin(88, -18), lin(73, -1), lin(2), lin(2, -1)},
      {"bcd_design3", "Design 3", true, lin(70), lin(57), lin(1), lin(1, -1)},
      {"bcd_design4", "Design 4", true, lin(70, -8), lin(57, -3), lin(1), lin(1, -1)},
  }};
  return table;
}

}  // namespace

std::span<const DesignFormulas> no_carry_adders() { return no_carry_table(); }
std::span<const DesignFormulas> with_carry_adders() { return with_carry_table(); }
std::span<const DesignFormulas> bcd_adders() { return bcd_table(); }

const DesignFormulas& proposed_adder(bool with_input_carry) {
  return with_input_carry ? with_carry_table().back() : no_carry_table().back();
}

const DesignFormulas& proposed_bcd(int design) {
  if (design < 1 || design > 4) throw std::out_of_range("BCD design must be 1..4");
  return bcd_table()[static_cast<std::size_t>(4 + design)];
}

const DesignFormulas& design(const std::string& key) {
  for (auto span : {no_carry_adders(), with_carry_adders(), bcd_adders()}) {
    for (const DesignFormulas& d : span) {
      if (d.key == key) return d;
    }
  }
  throw std::out_of_range("unknown design '" + key + "'");
}

}  // namespace revadd
