#include "revadd/real_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace revadd {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::Not:
      return "t1";
    case GateKind::Cnot:
      return "t2";
    case GateKind::Toffoli:
      return "t3";
    case GateKind::Fredkin:
      return "f3";
    case GateKind::Peres:
      return "p3";
    case GateKind::TR:
      return "tr3";
    default:
      throw std::invalid_argument(std::string(to_string(kind)) + " has no netlist mnemonic");
  }
}

bool valid_token(const std::string& s) {
  if (s.empty() || s[0] == '#' || s[0] == '.') return false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? " " : "") + items[i];
  return out;
}

}  // namespace

std::string emit_real(const Circuit& circuit, const RealOptions& options) {
  circuit.validate();
  std::vector<std::string> vars, ins, outs;
  std::string constants, garbage;
  for (std::size_t i = 0; i < circuit.width(); ++i) {
    const LineInfo& l = circuit.line(static_cast<Line>(i));
    const std::string in = input_label(l);
    const std::string out = output_label(l, static_cast<Line>(i));
    for (const std::string* tok : {&l.variable, &in, &out}) {
      if (!valid_token(*tok)) throw std::invalid_argument("name '" + *tok + "' cannot be written to a netlist");
    }
    vars.push_back(l.variable);
    ins.push_back(in);
    outs.push_back(out);
    constants += is_ancilla(l) ? (std::get<Ancilla>(l.input).value ? '1' : '0') : '-';
    garbage += is_garbage(l) ? '1' : '-';
  }

  std::ostringstream os;
  if (!circuit.name().empty()) os << "#@circuit " << circuit.name() << '\n';
  for (const std::string& c : options.comments) os << "# " << c << '\n';
  if (options.stages) {
    for (const Stage& s : circuit.stages()) {
      if (!valid_token(s.label)) throw std::invalid_argument("stage label '" + s.label + "' contains spaces");
      os << "#@stage " << s.label << ' ' << s.first << ' ' << s.last << ' ' << s.declared_depth << '\n';
    }
  }
  os << ".version 1.0\n";
  os << ".numvars " << circuit.width() << '\n';
  os << ".variables " << join(vars) << '\n';
  os << ".inputs " << join(ins) << '\n';
  os << ".outputs " << join(outs) << '\n';
  os << ".constants " << constants << '\n';
  os << ".garbage " << garbage << '\n';
  os << ".begin\n";
  for (const Gate& g : circuit.gates()) {
    os << mnemonic(g.kind());
    for (Line w : g.wires()) os << ' ' << vars[w];
    os << '\n';
  }
  os << ".end\n";
  return os.str();
}

Circuit parse_real(std::string_view text) {
  struct PendingStage {
    std::size_t line;
    Stage stage;
  };
  Circuit c;
  std::vector<PendingStage> stages;
  std::vector<std::string> vars, ins, outs;
  std::string constants, garbage;
  std::size_t numvars = 0;
  bool have_numvars = false, header_done = false, ended = false;
  std::map<std::string, Line, std::less<>> index;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t ln = 0;
  const auto build_lines = [&](std::size_t at) {
    if (!have_numvars) throw ParseError(at, "missing .numvars");
    if (vars.size() != numvars) throw ParseError(at, ".variables lists " + std::to_string(vars.size()) +
                                                         " names but .numvars is " + std::to_string(numvars));
    if (ins.empty()) ins = vars;
    if (outs.empty()) outs = vars;
    if (constants.empty()) constants.assign(numvars, '-');
    if (garbage.empty()) garbage.assign(numvars, '-');
    if (ins.size() != numvars) throw ParseError(at, ".inputs length does not match .numvars");
    if (outs.size() != numvars) throw ParseError(at, ".outputs length does not match .numvars");
    if (constants.size() != numvars) throw ParseError(at, ".constants length does not match .numvars");
    if (garbage.size() != numvars) throw ParseError(at, ".garbage length does not match .numvars");
    std::map<std::string, bool, std::less<>> primary;
    for (std::size_t i = 0; i < numvars; ++i) {
      if (constants[i] != '0' && constants[i] != '1' && constants[i] != '-') {
        throw ParseError(at, std::string("bad .constants character '") + constants[i] + "'");
      }
      if (garbage[i] != '1' && garbage[i] != '-') {
        throw ParseError(at, std::string("bad .garbage character '") + garbage[i] + "'");
      }
      if (constants[i] == '-') primary[ins[i]] = true;
    }
    for (std::size_t i = 0; i < numvars; ++i) {
      if (!index.emplace(vars[i], static_cast<Line>(i)).second) {
        throw ParseError(at, "duplicate variable '" + vars[i] + "'");
      }
      InputRole input = constants[i] == '-' ? InputRole{PrimaryInput{ins[i]}} : InputRole{Ancilla{constants[i] == '1'}};
      OutputRole output = garbage[i] == '1'           ? OutputRole{Garbage{outs[i]}}
                          : primary.contains(outs[i]) ? OutputRole{RegeneratedInput{outs[i]}}
                                                      : OutputRole{Useful{outs[i]}};
      c.add_line(vars[i], std::move(input), std::move(output));
    }
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(at, e.what());
    }
    header_done = true;
  };

  while (std::getline(in, raw)) {
    ++ln;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tok = split(raw);
    if (tok.empty()) continue;
    if (tok[0] == "#@circuit") {
      if (tok.size() != 2) throw ParseError(ln, "#@circuit takes one name");
      c.set_name(tok[1]);
      continue;
    }
    if (tok[0] == "#@stage") {
      if (tok.size() != 5) throw ParseError(ln, "#@stage needs: label first last depth");
      try {
        stages.push_back({ln, Stage{tok[1], std::stoul(tok[2]), std::stoul(tok[3]), std::stoi(tok[4])}});
      } catch (const std::logic_error&) {
        throw ParseError(ln, "#@stage fields must be integers");
      }
      continue;
    }
    if (tok[0][0] == '#') continue;
    if (ended) throw ParseError(ln, "content after .end");
    const std::string& key = tok[0];
    const std::vector<std::string> rest(tok.begin() + 1, tok.end());
    if (key[0] == '.') {
      if (header_done && key != ".end") throw ParseError(ln, key + " after .begin");
      if (key == ".version" || key == ".define" || key == ".enddefine") {
        continue;
      } else if (key == ".numvars") {
        if (rest.size() != 1) throw ParseError(ln, ".numvars takes one number");
        try {
          numvars = std::stoul(rest[0]);
        } catch (const std::logic_error&) {
          throw ParseError(ln, "bad .numvars value '" + rest[0] + "'");
        }
        have_numvars = true;
      } else if (key == ".variables") {
        vars = rest;
      } else if (key == ".inputs") {
        ins = rest;
      } else if (key == ".outputs") {
        outs = rest;
      } else if (key == ".constants") {
        constants = join(rest);
        std::erase(constants, ' ');
      } else if (key == ".garbage") {
        garbage = join(rest);
        std::erase(garbage, ' ');
      } else if (key == ".begin") {
        build_lines(ln);
      } else if (key == ".end") {
        if (!header_done) throw ParseError(ln, ".end before .begin");
        ended = true;
      } else {
        throw ParseError(ln, "unknown directive " + key);
      }
      continue;
    }
    if (!header_done) throw ParseError(ln, "gate before .begin");
    GateKind kind;
    if (key == "t1") {
      kind = GateKind::Not;
    } else if (key == "t2") {
      kind = GateKind::Cnot;
    } else if (key == "t3") {
      kind = GateKind::Toffoli;
    } else if (key == "f3") {
      kind = GateKind::Fredkin;
    } else if (key == "p3") {
      kind = GateKind::Peres;
    } else if (key == "tr3") {
      kind = GateKind::TR;
    } else {
      throw ParseError(ln, "unknown gate mnemonic '" + key + "'");
    }
    if (rest.size() != arity(kind)) {
      throw ParseError(ln, key + " expects " + std::to_string(arity(kind)) + " wires, got " +
                               std::to_string(rest.size()));
    }
    std::vector<Line> wires;
    for (const std::string& w : rest) {
      auto it = index.find(w);
      if (it == index.end()) throw ParseError(ln, "unknown wire '" + w + "'");
      wires.push_back(it->second);
    }
    try {
      c.add_gate(Gate::make(kind, wires));
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln, e.what());
    }
  }
  if (!header_done) throw ParseError(0, "missing .begin");
  if (!ended) throw ParseError(0, "missing .end");
  for (const PendingStage& s : stages) {
    try {
      c.add_stage(s.stage.label, s.stage.first, s.stage.last, s.stage.declared_depth);
    } catch (const std::invalid_argument& e) {
      throw ParseError(s.line, e.what());
    }
  }
  return c;
}

Circuit expand_to_toffoli(const Circuit& circuit) {
  Circuit out(circuit.name());
  for (const LineInfo& l : circuit.lines()) out.add_line(l.variable, l.input, l.output);
  for (const Gate& g : circuit.gates()) {
    const Line a = g.wire(0), b = g.wire(1), c = g.wire(2);
    switch (g.kind()) {
      case GateKind::Peres:
        out.add_gate(Gate::toffoli(a, b, c));
        out.add_gate(Gate::cnot(a, b));
        break;
      case GateKind::TR:
        out.add_gate(Gate::not_gate(b));
        out.add_gate(Gate::toffoli(a, b, c));
        out.add_gate(Gate::not_gate(b));
        out.add_gate(Gate::cnot(a, b));
        break;
      default:
        out.add_gate(g);
    }
  }
  return out;
}

}  // namespace revadd
