#include "revadd/simulate.hpp"

#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace revadd {

Word simulate_word(const Circuit& circuit, Word input) {
  if (circuit.width() > 64) {
    throw std::invalid_argument("word simulation needs width <= 64, circuit has " +
                                std::to_string(circuit.width()));
  }
  for (const Gate& g : circuit.gates()) input = detail::apply_unchecked(g, input);
  return input;
}

BitState simulate_state(const Circuit& circuit, BitState state) {
  if (state.width() != circuit.width()) throw std::invalid_argument("state width does not match circuit");
  for (const Gate& g : circuit.gates()) apply_gate(g, state);
  return state;
}

Assignment simulate(const Circuit& circuit, const Assignment& primary_inputs) {
  BitState state(circuit.width());
  std::size_t used = 0;
  for (std::size_t i = 0; i < circuit.width(); ++i) {
    const LineInfo& l = circuit.line(static_cast<Line>(i));
    if (const auto* pi = std::get_if<PrimaryInput>(&l.input)) {
      auto it = primary_inputs.find(pi->name);
      if (it == primary_inputs.end()) throw std::invalid_argument("missing primary input '" + pi->name + "'");
      state.set(static_cast<Line>(i), it->second);
      ++used;
    } else {
      state.set(static_cast<Line>(i), std::get<Ancilla>(l.input).value);
    }
  }
  if (used != primary_inputs.size()) {
    for (const auto& [name, value] : primary_inputs) {
      if (!circuit.find_input(name)) throw std::invalid_argument("unknown primary input '" + name + "'");
    }
  }
  state = simulate_state(circuit, std::move(state));
  Assignment out;
  for (std::size_t i = 0; i < circuit.width(); ++i) {
    const auto line = static_cast<Line>(i);
    out[output_label(circuit.line(line), line)] = state.get(line);
  }
  return out;
}

bool TruthTable::is_permutation() const {
  if (mapping.size() != (std::size_t{1} << width)) return false;
  std::vector<bool> seen(mapping.size(), false);
  for (Word w : mapping) {
    if (w >= mapping.size() || seen[w]) return false;
    seen[w] = true;
  }
  return true;
}

TruthTable truth_table(const Circuit& circuit, std::size_t bound) {
  if (circuit.width() > bound || circuit.width() >= 63) {
    throw std::invalid_argument("truth table of width " + std::to_string(circuit.width()) +
                                " exceeds the exhaustive bound of " + std::to_string(bound) + " lines");
  }
  TruthTable table;
  table.width = circuit.width();
  const Word count = Word{1} << circuit.width();
  table.mapping.resize(count);
  for (Word x = 0; x < count; ++x) table.mapping[x] = simulate_word(circuit, x);
  return table;
}

namespace {

struct ResolvedField {
  const Field* field;
  std::vector<Line> lines;
  std::uint64_t limit;  // exclusive
};

std::uint64_t field_limit(const Field& f) {
  if (f.bits.empty() || f.bits.size() > 64) {
    throw std::invalid_argument("field '" + f.name + "' must have 1..64 bits");
  }
  const std::uint64_t full =
      f.bits.size() == 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << f.bits.size());
  if (f.limit == 0) return full;
  if (f.limit > full) throw std::invalid_argument("field '" + f.name + "' limit exceeds its bit range");
  return f.limit;
}

std::vector<Field> default_fields(const Circuit& c) {
  std::vector<Field> fields;
  for (const LineInfo& l : c.lines()) {
    if (const auto* pi = std::get_if<PrimaryInput>(&l.input)) fields.push_back(Field{pi->name, {pi->name}, 0});
  }
  return fields;
}

std::vector<ResolvedField> resolve_inputs(const Circuit& c, const std::vector<Field>& fields) {
  std::vector<ResolvedField> out;
  std::set<Line> covered;
  for (const Field& f : fields) {
    ResolvedField r{&f, {}, field_limit(f)};
    for (const std::string& bit : f.bits) {
      auto line = c.find_input(bit);
      if (!line) throw std::invalid_argument("field '" + f.name + "' names unknown input '" + bit + "'");
      if (!covered.insert(*line).second) throw std::invalid_argument("input '" + bit + "' appears in two fields");
      r.lines.push_back(*line);
    }
    out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < c.width(); ++i) {
    const auto line = static_cast<Line>(i);
    if (!is_ancilla(c.line(line)) && !covered.contains(line)) {
      throw std::invalid_argument("primary input '" + input_label(c.line(line)) + "' is not covered by the domain");
    }
  }
  return out;
}

std::vector<ResolvedField> resolve_outputs(const Circuit& c, const std::vector<Field>& fields) {
  std::vector<ResolvedField> out;
  for (const Field& f : fields) {
    ResolvedField r{&f, {}, 0};
    for (const std::string& bit : f.bits) {
      auto line = c.find_output(bit);
      if (!line) throw std::invalid_argument("field '" + f.name + "' names unknown output '" + bit + "'");
      r.lines.push_back(*line);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::uint64_t saturating_product(const std::vector<ResolvedField>& fields) {
  std::uint64_t size = 1;
  for (const auto& f : fields) {
    if (f.limit != 0 && size > std::numeric_limits<std::uint64_t>::max() / f.limit) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= f.limit;
  }
  return size;
}

std::string render_point(const std::vector<ResolvedField>& fields, std::span<const std::uint64_t> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ' ';
    os << fields[i].field->name << '=' << values[i];
  }
  return os.str();
}

// Sweeps the domain with a concrete state representation (Word or BitState).
template <class State>
void sweep(const Circuit& c, const std::vector<ResolvedField>& in, const std::vector<ResolvedField>& out,
           const FunctionalSpec* spec, bool exhaustive, std::uint64_t points, std::uint64_t seed,
           RoleCheckResult& result, std::size_t max_recorded) {
  struct Regen {
    Line line;
    Line source;
  };
  std::vector<Regen> regens;
  for (std::size_t i = 0; i < c.width(); ++i) {
    if (const auto* r = std::get_if<RegeneratedInput>(&c.line(static_cast<Line>(i)).output)) {
      regens.push_back({static_cast<Line>(i), *c.find_input(r->name)});
    }
  }
  State base = [&] {
    if constexpr (std::is_same_v<State, BitState>) {
      return BitState(c.width());
    } else {
      return detail::WordBits{0};
    }
  }();
  for (std::size_t i = 0; i < c.width(); ++i) {
    const LineInfo& l = c.line(static_cast<Line>(i));
    if (is_ancilla(l) && std::get<Ancilla>(l.input).value) base.flip(static_cast<Line>(i));
  }

  std::vector<std::uint64_t> values(in.size(), 0);
  std::mt19937_64 rng(seed);
  auto record = [&](RoleViolation v) {
    ++result.violation_count;
    if (result.violations.size() < max_recorded) result.violations.push_back(std::move(v));
  };

  for (std::uint64_t p = 0; p < points; ++p) {
    if (exhaustive) {
      if (p > 0) {
        for (std::size_t k = 0; k < values.size(); ++k) {
          if (++values[k] < in[k].limit) break;
          values[k] = 0;
        }
      }
    } else {
      for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] = std::uniform_int_distribution<std::uint64_t>(0, in[k].limit - 1)(rng);
      }
    }
    State s = base;
    for (std::size_t k = 0; k < in.size(); ++k) {
      for (std::size_t b = 0; b < in[k].lines.size(); ++b) {
        if ((values[k] >> b) & 1U) s.flip(in[k].lines[b]);
      }
    }
    const State start = s;
    for (const Gate& g : c.gates()) detail::apply_classical(g, s);
    ++result.points;

    for (const Regen& r : regens) {
      if (s.get(r.line) != start.get(r.source)) {
        record({RoleViolation::Kind::Regeneration, r.line, output_label(c.line(r.line), r.line),
                render_point(in, values), start.get(r.source), s.get(r.line)});
      }
    }
    if (spec) {
      auto expected = spec->eval(values);
      if (!expected) {
        ++result.skipped;
        continue;
      }
      if (expected->size() != out.size()) throw std::logic_error("spec '" + spec->name + "' returned wrong arity");
      for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t b = 0; b < out[k].lines.size(); ++b) {
          const bool want = ((*expected)[k] >> b) & 1U;
          const Line line = out[k].lines[b];
          if (s.get(line) != want) {
            record({RoleViolation::Kind::Specification, line, output_label(c.line(line), line),
                    render_point(in, values), want, s.get(line)});
          }
        }
      }
    }
  }
}

}  // namespace

std::uint64_t domain_size(const Circuit& circuit, const FunctionalSpec* spec) {
  const std::vector<Field> fields = spec ? spec->inputs : default_fields(circuit);
  return saturating_product(resolve_inputs(circuit, fields));
}

RoleCheckResult check_roles(const Circuit& circuit, const CheckOptions& options, const FunctionalSpec* spec) {
  const std::vector<Field> defaults = spec ? std::vector<Field>{} : default_fields(circuit);
  const auto in = resolve_inputs(circuit, spec ? spec->inputs : defaults);
  const auto out = spec ? resolve_outputs(circuit, spec->outputs) : std::vector<ResolvedField>{};
  if (spec && !spec->eval) throw std::invalid_argument("spec '" + spec->name + "' has no evaluator");

  const std::uint64_t size = saturating_product(in);
  const bool exhaustive =
      options.exhaustive_bound >= 64 || size <= (std::uint64_t{1} << options.exhaustive_bound);
  if (!exhaustive && options.samples == 0) {
    throw std::invalid_argument("input domain of " + std::to_string(size) +
                                " points exceeds the exhaustive bound of 2^" +
                                std::to_string(options.exhaustive_bound) + "; supply a sample budget");
  }
  RoleCheckResult result;
  result.exhaustive = exhaustive;
  const std::uint64_t points = exhaustive ? size : options.samples;
  if (circuit.width() <= 64) {
    sweep<detail::WordBits>(circuit, in, out, spec, exhaustive, points, options.seed, result, options.max_recorded);
  } else {
    sweep<BitState>(circuit, in, out, spec, exhaustive, points, options.seed, result, options.max_recorded);
  }
  return result;
}

}  // namespace revadd
