#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revadd/circuit.hpp"

namespace revadd {

/// Malformed `.real` input; `line()` is the 1-based source line (0 when not tied to one).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct RealOptions {
  /// Free-form comment lines written after the structured header.
  std::vector<std::string> comments;
  /// Write stage annotations as `#@stage label first last depth`.
  bool stages = true;
};

/// RevLib-style netlist. Gates: t1 (NOT), t2 (CNOT, target last), t3 (Toffoli),
/// f3 (Fredkin), plus p3 (Peres) and tr3 (TR). The circuit name and stages travel
/// in `#@circuit` and `#@stage` comments.
std::string emit_real(const Circuit& circuit, const RealOptions& options = {});

/// Parses a netlist. A non-garbage output whose label equals a primary-input name is
/// read as RegeneratedInput. Throws ParseError.
Circuit parse_real(std::string_view text);

/// Rewrites Peres and TR into NOT / CNOT / Toffoli with the same classical function:
/// Peres(a,b,c) -> Toffoli(a,b,c) CNOT(a,b); TR(a,b,c) -> NOT(b) Toffoli(a,b,c) NOT(b) CNOT(a,b).
/// Stage annotations no longer apply and are dropped.
Circuit expand_to_toffoli(const Circuit& circuit);

}  // namespace revadd
