#include "revadd/quantum.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace revadd {

namespace {

using cd = std::complex<double>;

Unitary embed(const Gate& g, std::size_t width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  Unitary u = Unitary::Zero(dim, dim);
  const Unitary v = g.kind() == GateKind::ControlledVplus ? vplus_matrix() : v_matrix();
  for (Eigen::Index x = 0; x < dim; ++x) {
    const auto bit = [x](Line i) { return static_cast<int>((x >> i) & 1); };
    switch (g.kind()) {
      case GateKind::Not:
        u(x ^ (Eigen::Index{1} << g.wire(0)), x) = 1.0;
        break;
      case GateKind::Cnot:
        u(bit(g.wire(0)) ? x ^ (Eigen::Index{1} << g.wire(1)) : x, x) = 1.0;
        break;
      case GateKind::ControlledV:
      case GateKind::ControlledVplus: {
        if (!bit(g.wire(0))) {
          u(x, x) = 1.0;
          break;
        }
        const Line t = g.wire(1);
        const Eigen::Index mask = Eigen::Index{1} << t;
        const int in = bit(t);
        u(x & ~mask, x) += v(0, in);
        u(x | mask, x) += v(1, in);
        break;
      }
      default:
        throw std::invalid_argument(std::string(to_string(g.kind())) + " is not a primitive");
    }
  }
  return u;
}

}  // namespace

Unitary v_matrix() {
  Unitary v(2, 2);
  const cd h(0.5, 0.5);
  v << h, h * cd(0, -1), h * cd(0, -1), h;
  return v;
}

Unitary vplus_matrix() { return v_matrix().adjoint(); }

bool has_decomposition(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Not:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Peres:
    case GateKind::TR:
      return true;
    default:
      return false;
  }
}

PrimitiveSequence decomposition_of(GateKind kind) {
  constexpr Line a = 0, b = 1, c = 2;
  switch (kind) {
    case GateKind::Not:
      return {1, {Gate::not_gate(a)}};
    case GateKind::Cnot:
      return {2, {Gate::cnot(a, b)}};
    case GateKind::Toffoli:
      return {3,
              {Gate::controlled_v(b, c), Gate::cnot(a, b), Gate::controlled_vplus(b, c), Gate::cnot(a, b),
               Gate::controlled_v(a, c)}};
    case GateKind::Peres:
      return {3,
              {Gate::controlled_vplus(b, c), Gate::controlled_vplus(a, c), Gate::cnot(a, b),
               Gate::controlled_v(b, c)}};
    case GateKind::TR:
      return {3,
              {Gate::controlled_v(b, c), Gate::cnot(a, b), Gate::controlled_vplus(a, c),
               Gate::controlled_vplus(b, c)}};
    default:
      throw std::invalid_argument(std::string("no primitive decomposition for ") +
                                  std::string(to_string(kind)));
  }
}

std::vector<Gate> primitives_of(const Gate& gate) {
  if (gate.kind() == GateKind::ControlledV || gate.kind() == GateKind::ControlledVplus) return {gate};
  const PrimitiveSequence seq = decomposition_of(gate.kind());
  std::vector<Gate> out;
  out.reserve(seq.gates.size());
  for (const Gate& p : seq.gates) out.push_back(p.remapped(gate.wires()));
  return out;
}

Unitary unitary_of(const PrimitiveSequence& seq) {
  if (seq.width > 3) throw std::invalid_argument("unitary_of supports at most 3 lines");
  const Eigen::Index dim = Eigen::Index{1} << seq.width;
  Unitary u = Unitary::Identity(dim, dim);
  for (const Gate& g : seq.gates) {
    if (g.max_wire() >= seq.width) throw std::invalid_argument("primitive wire outside sequence width");
    u = embed(g, seq.width) * u;
  }
  return u;
}

Unitary permutation_matrix(GateKind kind) {
  if (!is_classical(kind)) throw std::invalid_argument("permutation matrix needs a classical gate");
  const std::size_t width = arity(kind);
  std::array<Line, 3> wires{0, 1, 2};
  const Gate g = Gate::make(kind, std::span<const Line>(wires.data(), width));
  const Eigen::Index dim = Eigen::Index{1} << width;
  Unitary p = Unitary::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    p(static_cast<Eigen::Index>(apply_gate(g, static_cast<Word>(x), width)), x) = 1.0;
  }
  return p;
}

bool is_unitary(const Unitary& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  return approx_equal(u * u.adjoint(), Unitary::Identity(u.rows(), u.cols()), tolerance);
}

bool approx_equal(const Unitary& a, const Unitary& b, double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tolerance;
}

int primitive_depth(std::span<const Gate> primitives) {
  std::vector<int> finish;
  int depth = 0;
  for (const Gate& g : primitives) {
    int start = 0;
    for (Line w : g.wires()) {
      if (w >= finish.size()) finish.resize(w + 1, 0);
      start = std::max(start, finish[w]);
    }
    for (Line w : g.wires()) finish[w] = start + 1;
    depth = std::max(depth, start + 1);
  }
  return depth;
}

DecompositionCheck verify_decomposition(GateKind kind) {
  const PrimitiveSequence seq = decomposition_of(kind);
  const Unitary u = unitary_of(seq);
  return DecompositionCheck{static_cast<int>(seq.cost()), primitive_depth(seq.gates),
                            is_unitary(u) && approx_equal(u, permutation_matrix(kind))};
}

}  // namespace revadd
