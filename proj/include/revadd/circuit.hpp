#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revadd/gate.hpp"

namespace revadd {

// Input side of a line: a named primary input or a constant (ancilla).
struct PrimaryInput {
  std::string name;
  friend bool operator==(const PrimaryInput&, const PrimaryInput&) = default;
};
struct Ancilla {
  bool value = false;
  friend bool operator==(const Ancilla&, const Ancilla&) = default;
};
using InputRole = std::variant<PrimaryInput, Ancilla>;

// Output side of a line.
struct Useful {
  std::string name;
  friend bool operator==(const Useful&, const Useful&) = default;
};
/// The line must end equal to the primary input called `name`.
struct RegeneratedInput {
  std::string name;
  friend bool operator==(const RegeneratedInput&, const RegeneratedInput&) = default;
};
struct Garbage {
  std::string label;  // optional display name, e.g. "g1"
  friend bool operator==(const Garbage&, const Garbage&) = default;
};
using OutputRole = std::variant<Useful, RegeneratedInput, Garbage>;

struct LineInfo {
  std::string variable;  // wire name in netlists
  InputRole input;
  OutputRole output;
  friend bool operator==(const LineInfo&, const LineInfo&) = default;
};

inline bool is_ancilla(const LineInfo& l) { return std::holds_alternative<Ancilla>(l.input); }
inline bool is_garbage(const LineInfo& l) { return std::holds_alternative<Garbage>(l.output); }

/// Name a line carries at the circuit input (constant lines report "0"/"1").
std::string input_label(const LineInfo& line);
/// Name a line carries at the circuit output; garbage without label is "g<index>".
std::string output_label(const LineInfo& line, Line index);

/// Contiguous gate range [first, last) with a declared delay contribution in units of Δ.
struct Stage {
  std::string label;
  std::size_t first = 0;
  std::size_t last = 0;
  int declared_depth = 0;
  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Ordered list of classical reversible gates over annotated lines.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t width() const noexcept { return lines_.size(); }
  std::span<const LineInfo> lines() const noexcept { return lines_; }
  const LineInfo& line(Line index) const { return lines_.at(index); }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::span<const Stage> stages() const noexcept { return stages_; }

  Line add_line(std::string variable, InputRole input, OutputRole output);
  void set_output(Line index, OutputRole output);
  void set_input(Line index, InputRole input);
  void rename_variable(Line index, std::string variable);

  /// Rejects ControlledV/ControlledVplus and wires outside the current width.
  void add_gate(const Gate& gate);

  /// Annotates gates [first, last) as one stage of the step-delay accounting.
  void add_stage(std::string label, std::size_t first, std::size_t last, int declared_depth);
  void clear_stages() { stages_.clear(); }

  /// Appends `sub`'s gates with sub line i mapped to `line_map[i]`, together with its
  /// stages (labels prefixed by `stage_prefix`). Line roles are the caller's business.
  void append(const Circuit& sub, std::span<const Line> line_map, std::string_view stage_prefix = {});

  /// First `gate_count` gates with the same lines; stages are clipped.
  Circuit prefix(std::size_t gate_count) const;

  std::optional<Line> find_variable(std::string_view variable) const;
  std::optional<Line> find_input(std::string_view name) const;
  std::optional<Line> find_output(std::string_view label) const;

  /// Checks naming/role consistency: unique variables, unique input names, unique output
  /// labels, every RegeneratedInput names an existing primary input, and no Useful
  /// output reuses a primary-input name. Throws std::invalid_argument on the first problem.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::string name_;
  std::vector<LineInfo> lines_;
  std::vector<Gate> gates_;
  std::vector<Stage> stages_;
};

/// Dense bit vector for circuits wider than a machine word.
class BitState {
 public:
  BitState() = default;
  explicit BitState(std::size_t width) : width_(width), blocks_((width + 63) / 64, 0) {}

  std::size_t width() const noexcept { return width_; }
  bool get(Line i) const noexcept { return (blocks_[i >> 6] >> (i & 63)) & 1U; }
  void flip(Line i) noexcept { blocks_[i >> 6] ^= Word{1} << (i & 63); }
  void set(Line i, bool v) noexcept {
    if (get(i) != v) flip(i);
  }
  friend bool operator==(const BitState&, const BitState&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<Word> blocks_;
};

/// In-place application of a classical gate (unchecked; wires must be < state.width()).
inline void apply_gate(const Gate& gate, BitState& state) { detail::apply_classical(gate, state); }

}  // namespace revadd
