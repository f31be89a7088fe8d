#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace revadd {

/// Linear closed form slope*n + offset, optionally with a separate value at n = 1.
/// A formula with `known == false` stands for a value the source does not give.
struct Formula {
  std::int64_t slope = 0;
  std::int64_t offset = 0;
  std::optional<std::int64_t> at_one;
  bool known = true;

  std::int64_t operator()(std::int64_t n) const noexcept;
  /// "13n-8", "10n", "2n-1", "1", "-".
  std::string text() const;
};

/// Published cost, delay, ancilla and garbage of one design.
struct DesignFormulas {
  std::string key;    // stable identifier, e.g. "takahashi2005"
  std::string label;  // column heading
  bool proposed = false;
  Formula cost;
  Formula delay;
  Formula ancilla;
  Formula garbage;
};

/// Prior no-carry adders (three designs) followed by the proposed one.
std::span<const DesignFormulas> no_carry_adders();
/// Prior carry-in adders (two designs) followed by the proposed one.
std::span<const DesignFormulas> with_carry_adders();
/// Five prior n-digit BCD adders followed by the four proposed designs.
std::span<const DesignFormulas> bcd_adders();

const DesignFormulas& proposed_adder(bool with_input_carry);
/// Proposed n-digit BCD design 1..4.
const DesignFormulas& proposed_bcd(int design);
/// Looks a design up by key; throws std::out_of_range for unknown keys.
const DesignFormulas& design(const std::string& key);

}  // namespace revadd
