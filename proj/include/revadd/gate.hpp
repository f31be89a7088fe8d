#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace revadd {

/// Index of a circuit line (qubit / bit wire).
using Line = std::uint32_t;

/// Classical state of up to 64 lines; line i lives at bit i.
using Word = std::uint64_t;

enum class GateKind : std::uint8_t {
  Not,              // (target)
  Cnot,             // (control, target)
  Toffoli,          // (control1, control2, target)
  Peres,            // (a, b, c) -> (a, a^b, ab^c)
  TR,               // (a, b, c) -> (a, a^b, a!b^c)
  Fredkin,          // (control, target1, target2)
  ControlledV,      // (control, target); primitive only
  ControlledVplus,  // (control, target); primitive only
};

inline constexpr std::array<GateKind, 8> kAllGateKinds = {
    GateKind::Not,     GateKind::Cnot,    GateKind::Toffoli,     GateKind::Peres,
    GateKind::TR,      GateKind::Fredkin, GateKind::ControlledV, GateKind::ControlledVplus};

constexpr std::size_t arity(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Not:
      return 1;
    case GateKind::Cnot:
    case GateKind::ControlledV:
    case GateKind::ControlledVplus:
      return 2;
    default:
      return 3;
  }
}

/// True for gates with a classical (bit-permutation) semantics.
constexpr bool is_classical(GateKind kind) noexcept {
  return kind != GateKind::ControlledV && kind != GateKind::ControlledVplus;
}

std::string_view to_string(GateKind kind) noexcept;

/// A gate kind bound to concrete wires. Wires are pairwise distinct.
class Gate {
 public:
  static Gate not_gate(Line target);
  static Gate cnot(Line control, Line target);
  static Gate toffoli(Line control1, Line control2, Line target);
  static Gate peres(Line a, Line b, Line c);
  static Gate tr(Line a, Line b, Line c);
  static Gate fredkin(Line control, Line target1, Line target2);
  static Gate controlled_v(Line control, Line target);
  static Gate controlled_vplus(Line control, Line target);

  /// Generic constructor; `wires.size()` must equal `arity(kind)`.
  static Gate make(GateKind kind, std::span<const Line> wires);

  GateKind kind() const noexcept { return kind_; }
  std::span<const Line> wires() const noexcept { return {wires_.data(), arity(kind_)}; }
  Line wire(std::size_t i) const noexcept { return wires_[i]; }
  Line max_wire() const noexcept;
  bool touches(Line line) const noexcept;

  /// Same gate with every wire w replaced by line_map[w].
  Gate remapped(std::span<const Line> line_map) const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::array<Line, 3> wires);

  GateKind kind_ = GateKind::Not;
  std::array<Line, 3> wires_{};
};

namespace detail {

// Unchecked classical application on any bit container exposing get(i) / flip(i).
template <class Bits>
inline void apply_classical(const Gate& g, Bits& s) {
  switch (g.kind()) {
    case GateKind::Not:
      s.flip(g.wire(0));
      break;
    case GateKind::Cnot:
      if (s.get(g.wire(0))) s.flip(g.wire(1));
      break;
    case GateKind::Toffoli:
      if (s.get(g.wire(0)) && s.get(g.wire(1))) s.flip(g.wire(2));
      break;
    case GateKind::Peres: {
      const bool a = s.get(g.wire(0));
      const bool b = s.get(g.wire(1));
      if (a) s.flip(g.wire(1));
      if (a && b) s.flip(g.wire(2));
      break;
    }
    case GateKind::TR: {
      const bool a = s.get(g.wire(0));
      const bool b = s.get(g.wire(1));
      if (a) s.flip(g.wire(1));
      if (a && !b) s.flip(g.wire(2));
      break;
    }
    case GateKind::Fredkin:
      if (s.get(g.wire(0)) && s.get(g.wire(1)) != s.get(g.wire(2))) {
        s.flip(g.wire(1));
        s.flip(g.wire(2));
      }
      break;
    case GateKind::ControlledV:
    case GateKind::ControlledVplus:
      break;
  }
}

struct WordBits {
  Word value;
  bool get(Line i) const noexcept { return (value >> i) & 1U; }
  void flip(Line i) noexcept { value ^= Word{1} << i; }
};

inline Word apply_unchecked(const Gate& g, Word state) {
  WordBits bits{state};
  apply_classical(g, bits);
  return bits.value;
}

}  // namespace detail

/// Applies a classical gate to a `width`-line word. Throws std::invalid_argument
/// for ControlledV/ControlledVplus, for wires >= width, or for width > 64.
Word apply_gate(const Gate& gate, Word state, std::size_t width);

}  // namespace revadd
