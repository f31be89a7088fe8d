#include "revadd/gate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revadd {

std::string_view to_string(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Not:
      return "NOT";
    case GateKind::Cnot:
      return "CNOT";
    case GateKind::Toffoli:
      return "Toffoli";
    case GateKind::Peres:
      return "Peres";
    case GateKind::TR:
      return "TR";
    case GateKind::Fredkin:
      return "Fredkin";
    case GateKind::ControlledV:
      return "CV";
    case GateKind::ControlledVplus:
      return "CV+";
  }
  return "?";
}

Gate::Gate(GateKind kind, std::array<Line, 3> wires) : kind_(kind), wires_(wires) {
  const std::size_t n = arity(kind);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (wires_[i] == wires_[j]) {
        throw std::invalid_argument(std::string(to_string(kind)) + " gate uses line " +
                                    std::to_string(wires_[i]) + " twice");
      }
    }
  }
  for (std::size_t i = n; i < 3; ++i) wires_[i] = 0;
}

Gate Gate::not_gate(Line target) { return Gate(GateKind::Not, {target, 0, 0}); }
Gate Gate::cnot(Line control, Line target) { return Gate(GateKind::Cnot, {control, target, 0}); }
Gate Gate::toffoli(Line c1, Line c2, Line target) { return Gate(GateKind::Toffoli, {c1, c2, target}); }
Gate Gate::peres(Line a, Line b, Line c) { return Gate(GateKind::Peres, {a, b, c}); }
Gate Gate::tr(Line a, Line b, Line c) { return Gate(GateKind::TR, {a, b, c}); }
Gate Gate::fredkin(Line control, Line t1, Line t2) { return Gate(GateKind::Fredkin, {control, t1, t2}); }
Gate Gate::controlled_v(Line control, Line target) {
  return Gate(GateKind::ControlledV, {control, target, 0});
}
Gate Gate::controlled_vplus(Line control, Line target) {
  return Gate(GateKind::ControlledVplus, {control, target, 0});
}

Gate Gate::make(GateKind kind, std::span<const Line> wires) {
  if (wires.size() != arity(kind)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " gate expects " +
                                std::to_string(arity(kind)) + " wires, got " +
                                std::to_string(wires.size()));
  }
  std::array<Line, 3> w{};
  std::copy(wires.begin(), wires.end(), w.begin());
  return Gate(kind, w);
}

Line Gate::max_wire() const noexcept {
  const auto w = wires();
  return *std::max_element(w.begin(), w.end());
}

bool Gate::touches(Line line) const noexcept {
  const auto w = wires();
  return std::find(w.begin(), w.end(), line) != w.end();
}

Gate Gate::remapped(std::span<const Line> line_map) const {
  std::array<Line, 3> w{};
  const auto src = wires();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] >= line_map.size()) throw std::out_of_range("gate wire outside line map");
    w[i] = line_map[src[i]];
  }
  return Gate(kind_, w);
}

Word apply_gate(const Gate& gate, Word state, std::size_t width) {
  if (!is_classical(gate.kind())) {
    throw std::invalid_argument(std::string(to_string(gate.kind())) +
                                " has no classical semantics");
  }
  if (width > 64) throw std::invalid_argument("word states hold at most 64 lines");
  if (gate.max_wire() >= width) {
    throw std::invalid_argument("gate wire " + std::to_string(gate.max_wire()) +
                                " out of range for width " + std::to_string(width));
  }
  return detail::apply_unchecked(gate, state);
}

}  // namespace revadd
