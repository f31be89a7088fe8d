#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revadd/analysis.hpp"
#include "revadd/generators.hpp"
#include "revadd/real_io.hpp"
#include "revadd/report.hpp"
#include "revadd/simulate.hpp"

namespace py = pybind11;
using namespace revadd;

namespace {

py::dict metrics_dict(const Circuit& c) {
  const MetricsReport m = measure(c);
  py::dict census;
  for (const auto& [kind, count] : m.gate_census) census[py::str(std::string(to_string(kind)))] = count;
  py::dict d;
  d["width"] = m.width;
  d["gates"] = m.gates;
  d["quantum_cost"] = m.quantum_cost;
  d["step_delay"] = m.step_delay ? py::object(py::int_(*m.step_delay)) : py::object(py::none());
  d["asap_depth"] = m.asap_depth;
  d["ancilla"] = m.ancilla_inputs;
  d["garbage"] = m.garbage_outputs;
  d["census"] = census;
  return d;
}

py::dict check_dict(const RoleCheckResult& r) {
  py::dict d;
  d["ok"] = r.ok();
  d["points"] = r.points;
  d["violations"] = r.violation_count;
  d["skipped"] = r.skipped;
  d["exhaustive"] = r.exhaustive;
  return d;
}

std::vector<std::size_t> sizes(const std::vector<std::size_t>& ns) {
  if (ns.empty()) throw std::invalid_argument("empty size list");
  return ns;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reversible ripple-carry and BCD adder netlists";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("name", &Circuit::name)
      .def_property_readonly("width", &Circuit::width)
      .def_property_readonly("gate_count", [](const Circuit& c) { return c.gates().size(); })
      .def_property_readonly("variables",
                             [](const Circuit& c) {
                               std::vector<std::string> out;
                               for (const LineInfo& l : c.lines()) out.push_back(l.variable);
                               return out;
                             })
      .def("metrics", &metrics_dict)
      .def("simulate", [](const Circuit& c, const Assignment& in) { return simulate(c, in); }, py::arg("inputs"))
      .def("to_real", [](const Circuit& c) { return emit_real(c); })
      .def("to_json", [](const Circuit& c) { return circuit_to_json(c); })
      .def("expand_to_toffoli", &expand_to_toffoli)
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit " + c.name() + " width=" + std::to_string(c.width()) +
               " gates=" + std::to_string(c.gates().size()) + ">";
      });

  m.def("rca_no_carry", &gen_rca_no_carry, py::arg("n"));
  m.def("rca_with_carry", &gen_rca_with_carry, py::arg("n"));
  m.def("detection", &gen_detection);
  m.def("correction", &gen_correction);
  m.def("bin2bcd", &gen_bin2bcd);
  m.def("rbcd", &gen_rbcd, py::arg("variant"));
  m.def("bcd", &gen_ndigit_bcd, py::arg("design"), py::arg("n"));
  m.def("generate", [](const std::string& family, std::size_t n) { return generate(parse_family(family), n); },
        py::arg("family"), py::arg("n"));
  m.def("parse_real", [](const std::string& text) { return parse_real(text); }, py::arg("text"));

  m.def(
      "verify",
      [](const Circuit& c, const std::string& oracle, std::size_t n, int design, std::uint64_t samples,
         std::uint64_t seed) {
        std::optional<FunctionalSpec> spec;
        if (oracle == "adder" || oracle == "adder-carry") spec = adder_spec(n, oracle == "adder-carry");
        else if (oracle == "detection") spec = detection_spec();
        else if (oracle == "correction") spec = correction_spec();
        else if (oracle == "converter") spec = bin2bcd_spec();
        else if (oracle == "rbcd") spec = rbcd_spec(design);
        else if (oracle == "bcd") spec = ndigit_bcd_spec(design, n);
        else if (oracle != "none") throw std::invalid_argument("unknown oracle '" + oracle + "'");
        CheckOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        RoleCheckResult r;
        {
          py::gil_scoped_release release;
          r = check_roles(c, opt, spec ? &*spec : nullptr);
        }
        return check_dict(r);
      },
      py::arg("circuit"), py::arg("oracle") = "none", py::arg("n") = 0, py::arg("design") = 0,
      py::arg("samples") = kDefaultSamples, py::arg("seed") = kDefaultSeed);

  m.def("quantum_cost", &quantum_cost);
  m.def("step_delay", &step_delay);
  m.def("asap_depth", &asap_depth);

  m.def(
      "improvement_hundredths",
      [](std::int64_t prior, std::int64_t proposed) { return improvement_hundredths(prior, proposed); },
      py::arg("prior"), py::arg("proposed"));

  m.def(
      "report_json",
      [](const std::string& kind, const std::vector<std::size_t>& ns) {
        ReportDocument doc;
        doc.title = kind;
        const auto n = sizes(ns);
        if (kind == "adder-nocarry") doc.tables = comparison_report(TableKind::NoCarry, n);
        else if (kind == "adder-carry") doc.tables = comparison_report(TableKind::WithCarry, n);
        else if (kind == "bcd") doc.tables = comparison_report(TableKind::Bcd, n);
        else throw std::invalid_argument("unknown report '" + kind + "'");
        return to_json(doc);
      },
      py::arg("kind"), py::arg("ns"));

  m.def(
      "check_formulas",
      [](const std::string& family, const std::vector<std::size_t>& ns) {
        const FormulaLedger l = check_formulas(parse_family(family), sizes(ns));
        py::list out;
        for (const FormulaCheck& c : l.checks) {
          py::dict d;
          d["n"] = c.n;
          d["metric"] = c.metric;
          d["formula"] = c.formula;
          d["expected"] = c.expected;
          d["measured"] = c.measured;
          d["asserted"] = c.asserted;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("ns"));
}
