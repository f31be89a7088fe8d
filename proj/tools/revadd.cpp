// revadd: generate, verify and report on reversible adder netlists.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revadd/analysis.hpp"
#include "revadd/generators.hpp"
#include "revadd/quantum.hpp"
#include "revadd/real_io.hpp"
#include "revadd/report.hpp"
#include "revadd/simulate.hpp"

namespace {

using namespace revadd;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kGenFamilies = {"rca-nocarry", "rca-carry", "detection", "correction",
                                               "bin2bcd",     "rbcd",      "bcd-ndigit"};

struct Target {
  std::string family;
  std::optional<std::size_t> param;  // positional n or variant
  std::optional<std::size_t> n;
  std::optional<int> design;
};

std::size_t need_n(const Target& t) {
  if (t.n) return *t.n;
  if (t.param) return *t.param;
  throw UsageError(t.family + " needs a size: pass it positionally or with -n");
}

int need_design(const Target& t) {
  const auto d = t.design ? std::optional<std::size_t>(*t.design) : t.param;
  if (!d) throw UsageError(t.family + " needs a variant: pass it positionally or with --design");
  if (*d < 1 || *d > 4) throw UsageError(t.family + " variant must be 1..4");
  return static_cast<int>(*d);
}

struct Built {
  Circuit circuit;
  std::optional<FunctionalSpec> spec;
  std::string params;
};

Built build(const Target& t) {
  const std::string& f = t.family;
  if (f == "rca-nocarry" || f == "rca-carry") {
    const std::size_t n = need_n(t);
    const bool carry = f == "rca-carry";
    Built b{carry ? gen_rca_with_carry(n) : gen_rca_no_carry(n), std::nullopt, "n=" + std::to_string(n)};
    if (n <= 62) b.spec = adder_spec(n, carry);
    return b;
  }
  if (f == "detection") return {gen_detection(), detection_spec(), ""};
  if (f == "correction") return {gen_correction(), correction_spec(), ""};
  if (f == "bin2bcd") return {gen_bin2bcd(), bin2bcd_spec(), ""};
  if (f == "rbcd") {
    const int v = need_design(t);
    return {gen_rbcd(v), rbcd_spec(v), "variant=" + std::to_string(v)};
  }
  if (f == "bcd-ndigit") {
    if (!t.design) throw UsageError("bcd-ndigit needs --design 1..4");
    const int d = *t.design;
    if (d < 1 || d > 4) throw UsageError("bcd-ndigit --design must be 1..4");
    const std::size_t n = need_n(t);
    return {gen_ndigit_bcd(d, n), ndigit_bcd_spec(d, n), "design=" + std::to_string(d) + " n=" + std::to_string(n)};
  }
  throw UsageError("unknown family '" + f + "'");
}

std::string metrics_line(const MetricsReport& m) {
  std::ostringstream os;
  os << "quantum_cost=" << m.quantum_cost << " step_delay=";
  if (m.step_delay) {
    os << *m.step_delay;
  } else {
    os << '-';
  }
  os << " asap_depth=" << m.asap_depth << " ancilla=" << m.ancilla_inputs << " garbage=" << m.garbage_outputs
     << " gates=" << m.gates << " lines=" << m.width;
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad number '" + std::string(s) + "'");
  return v;
}

// "8,16,32" or "1..64" or a mix of both.
std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_size(item));
      continue;
    }
    const std::size_t lo = parse_size(std::string_view(item).substr(0, dots));
    const std::size_t hi = parse_size(std::string_view(item).substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + item + "'");
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw UsageError("--n-list is empty");
  for (std::size_t n : out) {
    if (n == 0) throw UsageError("--n-list values must be >= 1");
  }
  return out;
}

// gen --------------------------------------------------------------------

struct GenOptions {
  Target target;
  std::string out;
  std::string format = "real";
  bool expand = false;
  bool reproducible = false;
};

int run_gen(const GenOptions& o) {
  Built b = build(o.target);
  Circuit circuit = o.expand ? expand_to_toffoli(b.circuit) : b.circuit;
  std::vector<std::string> comments;
  comments.push_back("generator: " + o.target.family + (b.params.empty() ? "" : " " + b.params));
  comments.push_back(std::string(o.expand ? "metrics (expanded to Toffoli): " : "metrics: ") +
                     metrics_line(measure(circuit)));
  if (!o.reproducible) comments.push_back("generated: " + utc_timestamp());
  if (o.format == "real") {
    RealOptions ro;
    ro.comments = comments;
    write_output(o.out, emit_real(circuit, ro));
  } else {
    write_output(o.out, circuit_to_json(circuit, comments));
  }
  return kExitOk;
}

// verify -----------------------------------------------------------------

struct VerifyOptions {
  Target target;
  std::string oracle = "none";
  std::size_t exhaustive_bound = kDefaultExhaustiveBound;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
};

bool verify_gate_catalog(std::ostream& os) {
  bool ok = true;
  for (GateKind k : {GateKind::Not, GateKind::Cnot, GateKind::Toffoli, GateKind::Peres, GateKind::TR}) {
    const DecompositionCheck c = verify_decomposition(k);
    os << (c.ok ? "PASS" : "FAIL") << "  " << to_string(k) << " unitary matches permutation  cost=" << c.cost
       << " depth=" << c.depth << '\n';
    ok = ok && c.ok;
  }
  // Peres and TR are mutual inverses on the same wires.
  for (const auto& [first, second] : {std::pair{Gate::peres(0, 1, 2), Gate::tr(0, 1, 2)},
                                      std::pair{Gate::tr(0, 1, 2), Gate::peres(0, 1, 2)}}) {
    bool identity = true;
    for (Word x = 0; x < 8; ++x) identity = identity && apply_gate(second, apply_gate(first, x, 3), 3) == x;
    os << (identity ? "PASS" : "FAIL") << "  " << to_string(first.kind()) << " then " << to_string(second.kind())
       << " is the identity\n";
    ok = ok && identity;
  }
  return ok;
}

std::optional<FunctionalSpec> oracle_for_file(const VerifyOptions& o) {
  const Target& t = o.target;
  if (o.oracle == "none") return std::nullopt;
  if (o.oracle == "adder" || o.oracle == "adder-carry") {
    if (!t.n) throw UsageError("--oracle " + o.oracle + " needs -n");
    return adder_spec(*t.n, o.oracle == "adder-carry");
  }
  if (o.oracle == "detection") return detection_spec();
  if (o.oracle == "correction") return correction_spec();
  if (o.oracle == "converter") return bin2bcd_spec();
  if (o.oracle == "rbcd") {
    if (!t.design) throw UsageError("--oracle rbcd needs --design");
    return rbcd_spec(*t.design);
  }
  if (o.oracle == "bcd") {
    if (!t.design || !t.n) throw UsageError("--oracle bcd needs --design and -n");
    return ndigit_bcd_spec(*t.design, *t.n);
  }
  throw UsageError("unknown oracle '" + o.oracle + "'");
}

int run_verify(const VerifyOptions& o) {
  std::ostream& os = std::cout;
  if (o.target.family == "gates") return verify_gate_catalog(os) ? kExitOk : kExitVerifyFailed;

  Circuit circuit;
  std::optional<FunctionalSpec> spec;
  std::string what;
  const bool is_file = o.target.family.ends_with(".real");
  if (is_file) {
    try {
      circuit = parse_real(read_file(o.target.family));
    } catch (const ParseError& e) {
      throw UsageError(o.target.family + ": " + e.what());
    }
    spec = oracle_for_file(o);
    what = o.target.family;
  } else {
    Built b = build(o.target);
    circuit = std::move(b.circuit);
    spec = std::move(b.spec);
    what = o.target.family + (b.params.empty() ? "" : " " + b.params);
  }

  bool ok = true;
  std::set<GateKind> kinds;
  for (const Gate& g : circuit.gates()) kinds.insert(g.kind());
  for (GateKind k : kinds) {
    if (!has_decomposition(k)) continue;
    const DecompositionCheck c = verify_decomposition(k);
    if (!c.ok) os << "FAIL  decomposition of " << to_string(k) << '\n';
    ok = ok && c.ok;
  }

  const FunctionalSpec* sp = spec ? &*spec : nullptr;
  CheckOptions co;
  co.exhaustive_bound = o.exhaustive_bound;
  co.samples = o.samples;
  co.seed = o.seed;
  const std::uint64_t domain = domain_size(circuit, sp);
  const bool fits = o.exhaustive_bound < 64 && domain <= (std::uint64_t{1} << o.exhaustive_bound);
  if (!fits && o.samples == 0) {
    const std::string count = domain == std::numeric_limits<std::uint64_t>::max() ? "at least 2^64"
                                                                                   : std::to_string(domain);
    throw UsageError(what + ": input domain has " + count + " points, above 2^" +
                     std::to_string(o.exhaustive_bound) + "; raise --exhaustive-bound or pass --samples");
  }
  const RoleCheckResult r = check_roles(circuit, co, sp);
  os << what << ": " << (r.exhaustive ? "exhaustive" : "sampled") << " over " << r.points << " points";
  if (r.skipped) os << " (" << r.skipped << " outside the oracle's domain)";
  os << ", oracle " << (sp ? sp->name : std::string("none (role checks only)")) << '\n';
  for (const RoleViolation& v : r.violations) {
    os << "  violation: " << (v.kind == RoleViolation::Kind::Regeneration ? "regeneration" : "specification")
       << " output " << v.output << " expected " << v.expected << " got " << v.actual << " at " << v.inputs
       << '\n';
  }
  if (r.violation_count > r.violations.size()) {
    os << "  ... " << (r.violation_count - r.violations.size()) << " more\n";
  }
  ok = ok && r.ok();
  os << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

// report -----------------------------------------------------------------

struct ReportOptions {
  std::string kind;
  std::string n_list;
  std::string format = "markdown";
  std::string out;
  std::vector<std::string> families;
  bool reproducible = false;
};

int run_report(const ReportOptions& o) {
  const std::string default_list = o.kind == "formulas" ? "1..64" : "8,16,32,64,128,256,512";
  const std::vector<std::size_t> ns = parse_n_list(o.n_list.empty() ? default_list : o.n_list);

  ReportDocument doc;
  if (!o.reproducible) doc.generated_at = utc_timestamp();
  if (o.kind == "adder-nocarry") {
    doc.title = "Ripple-carry adders without input carry";
    doc.tables = comparison_report(TableKind::NoCarry, ns);
  } else if (o.kind == "adder-carry") {
    doc.title = "Ripple-carry adders with input carry";
    doc.tables = comparison_report(TableKind::WithCarry, ns);
  } else if (o.kind == "bcd") {
    doc.title = "n-digit BCD adders";
    for (int v = 1; v <= 4; ++v) doc.metrics.emplace_back("rbcd-" + std::to_string(v), measure(gen_rbcd(v)));
    doc.tables = comparison_report(TableKind::Bcd, ns);
    doc.discrepancies = bcd_discrepancies();
  } else if (o.kind == "formulas") {
    doc.title = "Closed-form checks";
    const std::vector<std::string> families =
        o.families.empty() ? std::vector<std::string>{"rca-nocarry", "rca-carry"} : o.families;
    for (const std::string& f : families) {
      Family fam;
      try {
        fam = parse_family(f);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      doc.ledgers.push_back(check_formulas(fam, ns));
    }
  } else {
    throw UsageError("unknown report '" + o.kind + "'");
  }
  if (o.kind != "formulas") doc.notes.push_back("Improvements are (prior - proposed) / prior, truncated to hundredths.");

  if (o.format == "json") {
    write_output(o.out, to_json(doc));
  } else if (o.format == "csv") {
    write_output(o.out, to_csv(doc));
  } else {
    write_output(o.out, to_markdown(doc));
  }
  return kExitOk;
}

void add_target_options(CLI::App* cmd, Target& t) {
  cmd->add_option("-n,--size", t.n, "Operand width in bits or number of BCD digits")->check(CLI::PositiveNumber);
  cmd->add_option("--design", t.design, "BCD design or RBCD variant (1..4)")->check(CLI::Range(1, 4));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible ripple-carry and BCD adder toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated netlist");
  gen_cmd->add_option("family", gen.target.family, "Circuit family")
      ->required()
      ->check(CLI::IsMember(kGenFamilies));
  gen_cmd->add_option("param", gen.target.param, "Size n (adders) or variant (rbcd)");
  add_target_options(gen_cmd, gen.target);
  gen_cmd->add_option("--out", gen.out, "Output file (default: standard output)");
  gen_cmd->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"real", "json"}));
  gen_cmd->add_flag("--expand-to-toffoli", gen.expand, "Rewrite Peres and TR into NOT/CNOT/Toffoli");
  gen_cmd->add_flag("--reproducible", gen.reproducible, "Omit the time stamp");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Simulate a circuit against its oracle and line roles");
  ver_cmd->add_option("target", ver.target.family, "Family name, 'gates', or a .real file")->required();
  ver_cmd->add_option("param", ver.target.param, "Size n (adders) or variant (rbcd)");
  add_target_options(ver_cmd, ver.target);
  ver_cmd->add_option("--oracle", ver.oracle, "Oracle for a .real file")
      ->check(CLI::IsMember({"none", "adder", "adder-carry", "detection", "correction", "converter", "rbcd", "bcd"}));
  ver_cmd->add_option("--exhaustive-bound", ver.exhaustive_bound, "Largest exhaustive domain as log2")
      ->check(CLI::Range(0, 40));
  ver_cmd->add_option("--samples", ver.samples, "Random samples when the domain exceeds the bound");
  ver_cmd->add_option("--seed", ver.seed, "Sampling seed");

  ReportOptions rep;
  auto* rep_cmd = app.add_subcommand("report", "Comparison tables and formula ledgers");
  rep_cmd->add_option("tables", rep.kind, "Report kind")
      ->required()
      ->check(CLI::IsMember({"adder-nocarry", "adder-carry", "bcd", "formulas"}));
  rep_cmd->add_option("--n-list", rep.n_list, "Sizes, e.g. 8,512 or 1..64");
  rep_cmd->add_option("--format", rep.format, "Output format")->check(CLI::IsMember({"markdown", "json", "csv"}));
  rep_cmd->add_option("--family", rep.families, "Families for the formulas report (repeatable)");
  rep_cmd->add_option("--out", rep.out, "Output file (default: standard output)");
  rep_cmd->add_flag("--reproducible", rep.reproducible, "Omit the time stamp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (ver_cmd->parsed()) return run_verify(ver);
    return run_report(rep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
