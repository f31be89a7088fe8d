#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "revadd/gate.hpp"

namespace revadd {

using Unitary = Eigen::MatrixXcd;

inline constexpr double kUnitaryTolerance = 1e-12;

/// V = (1+i)/2 [[1, -i], [-i, 1]], the square root of NOT.
Unitary v_matrix();
/// Conjugate transpose of V.
Unitary vplus_matrix();

/// A gate realized as NOT / CNOT / controlled-V / controlled-V+ primitives on `width` lines.
struct PrimitiveSequence {
  std::size_t width = 0;
  std::vector<Gate> gates;

  std::size_t cost() const noexcept { return gates.size(); }
};

/// Catalog decomposition on wires (0, 1, 2) = (a, b, c) for Toffoli, Peres and TR;
/// Not and Cnot decompose to themselves on 1 and 2 lines. Throws for other kinds.
PrimitiveSequence decomposition_of(GateKind kind);

/// True for kinds with a catalog decomposition.
bool has_decomposition(GateKind kind) noexcept;

/// Primitives of a concrete gate (its decomposition mapped onto the gate's wires).
/// Primitive gates are returned unchanged. Throws for Fredkin.
std::vector<Gate> primitives_of(const Gate& gate);

/// Ordered product U_k ... U_1 of the embedded primitives; line i is bit i of the
/// basis index. Widths up to 3 (dimension 8).
Unitary unitary_of(const PrimitiveSequence& seq);

/// 0/1 matrix with a one at (f(x), x) for the gate's classical map on arity(kind) lines.
Unitary permutation_matrix(GateKind kind);

bool is_unitary(const Unitary& u, double tolerance = kUnitaryTolerance);
bool approx_equal(const Unitary& a, const Unitary& b, double tolerance = kUnitaryTolerance);

/// ASAP depth of a primitive list: each primitive finishes one Δ after the latest
/// finish among earlier primitives sharing a wire.
int primitive_depth(std::span<const Gate> primitives);

struct DecompositionCheck {
  int cost = 0;
  int depth = 0;
  bool ok = false;
};

/// Compares unitary_of(decomposition_of(kind)) with the permutation matrix.
DecompositionCheck verify_decomposition(GateKind kind);

}  // namespace revadd
