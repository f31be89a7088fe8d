#include "revadd/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace revadd {

std::string input_label(const LineInfo& line) {
  if (const auto* pi = std::get_if<PrimaryInput>(&line.input)) return pi->name;
  return std::get<Ancilla>(line.input).value ? "1" : "0";
}

std::string output_label(const LineInfo& line, Line index) {
  return std::visit(
      [index](const auto& role) -> std::string {
        using T = std::decay_t<decltype(role)>;
        if constexpr (std::is_same_v<T, Garbage>) {
          return role.label.empty() ? "g" + std::to_string(index) : role.label;
        } else {
          return role.name;
        }
      },
      line.output);
}

Line Circuit::add_line(std::string variable, InputRole input, OutputRole output) {
  lines_.push_back(LineInfo{std::move(variable), std::move(input), std::move(output)});
  return static_cast<Line>(lines_.size() - 1);
}

void Circuit::set_output(Line index, OutputRole output) { lines_.at(index).output = std::move(output); }
void Circuit::set_input(Line index, InputRole input) { lines_.at(index).input = std::move(input); }
void Circuit::rename_variable(Line index, std::string variable) {
  lines_.at(index).variable = std::move(variable);
}

void Circuit::add_gate(const Gate& gate) {
  if (!is_classical(gate.kind())) {
    throw std::invalid_argument(std::string(to_string(gate.kind())) +
                                " is a primitive and cannot appear in a classical circuit");
  }
  if (gate.max_wire() >= width()) {
    throw std::invalid_argument("gate wire " + std::to_string(gate.max_wire()) +
                                " out of range for circuit width " + std::to_string(width()));
  }
  gates_.push_back(gate);
}

void Circuit::add_stage(std::string label, std::size_t first, std::size_t last, int declared_depth) {
  if (first > last || last > gates_.size()) {
    throw std::invalid_argument("stage '" + label + "' range outside gate list");
  }
  if (declared_depth < 0) throw std::invalid_argument("stage '" + label + "' has negative depth");
  stages_.push_back(Stage{std::move(label), first, last, declared_depth});
}

void Circuit::append(const Circuit& sub, std::span<const Line> line_map, std::string_view stage_prefix) {
  if (line_map.size() != sub.width()) {
    throw std::invalid_argument("line map size " + std::to_string(line_map.size()) +
                                " does not match sub-circuit width " + std::to_string(sub.width()));
  }
  const std::size_t offset = gates_.size();
  for (const Gate& g : sub.gates_) add_gate(g.remapped(line_map));
  for (const Stage& s : sub.stages_) {
    std::string label = stage_prefix.empty() ? s.label : std::string(stage_prefix) + "." + s.label;
    stages_.push_back(Stage{std::move(label), s.first + offset, s.last + offset, s.declared_depth});
  }
}

Circuit Circuit::prefix(std::size_t gate_count) const {
  Circuit out(name_);
  out.lines_ = lines_;
  gate_count = std::min(gate_count, gates_.size());
  out.gates_.assign(gates_.begin(), gates_.begin() + static_cast<std::ptrdiff_t>(gate_count));
  for (const Stage& s : stages_) {
    if (s.first < gate_count) {
      Stage clipped = s;
      clipped.last = std::min(s.last, gate_count);
      out.stages_.push_back(std::move(clipped));
    }
  }
  return out;
}

std::optional<Line> Circuit::find_variable(std::string_view variable) const {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (lines_[i].variable == variable) return static_cast<Line>(i);
  }
  return std::nullopt;
}

std::optional<Line> Circuit::find_input(std::string_view name) const {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const auto* pi = std::get_if<PrimaryInput>(&lines_[i].input);
    if (pi && pi->name == name) return static_cast<Line>(i);
  }
  return std::nullopt;
}

std::optional<Line> Circuit::find_output(std::string_view label) const {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (output_label(lines_[i], static_cast<Line>(i)) == label) return static_cast<Line>(i);
  }
  return std::nullopt;
}

void Circuit::validate() const {
  std::set<std::string, std::less<>> variables;
  std::set<std::string, std::less<>> inputs;
  std::set<std::string, std::less<>> outputs;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const LineInfo& l = lines_[i];
    if (l.variable.empty()) throw std::invalid_argument("line " + std::to_string(i) + " has no name");
    if (!variables.insert(l.variable).second) {
      throw std::invalid_argument("duplicate line name '" + l.variable + "'");
    }
    if (const auto* pi = std::get_if<PrimaryInput>(&l.input)) {
      if (pi->name.empty()) throw std::invalid_argument("line '" + l.variable + "' has an empty input name");
      if (!inputs.insert(pi->name).second) {
        throw std::invalid_argument("duplicate primary input '" + pi->name + "'");
      }
    }
    const std::string out = output_label(l, static_cast<Line>(i));
    if (out.empty()) throw std::invalid_argument("line '" + l.variable + "' has an empty output name");
    if (!outputs.insert(out).second) throw std::invalid_argument("duplicate output '" + out + "'");
  }
  for (const LineInfo& l : lines_) {
    if (const auto* r = std::get_if<RegeneratedInput>(&l.output)) {
      if (!inputs.contains(r->name)) {
        throw std::invalid_argument("line '" + l.variable + "' regenerates unknown input '" + r->name + "'");
      }
    }
    if (const auto* u = std::get_if<Useful>(&l.output)) {
      if (inputs.contains(u->name)) {
        throw std::invalid_argument("useful output '" + u->name + "' shadows a primary input name");
      }
    }
  }
  for (const Stage& s : stages_) {
    if (s.last > gates_.size()) throw std::invalid_argument("stage '" + s.label + "' exceeds gate list");
  }
}

}  // namespace revadd
