// Python bindings for the main operations. Exact values cross the boundary as
// canonical strings so nothing is lost to floating point.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regpair/currents.hpp"
#include "regpair/ledger.hpp"
#include "regpair/pairing.hpp"
#include "regpair/quadrature.hpp"
#include "regpair/scenario.hpp"
#include "regpair/version.hpp"

namespace py = pybind11;
using namespace regpair;

namespace {

Divisor divisor_from_pairs(const std::vector<std::pair<std::string, long>>& pairs) {
  Divisor d;
  for (auto& [p, n] : pairs) d.add(parse_point(p), n);
  return d;
}

std::vector<std::pair<std::string, long>> divisor_to_pairs(const Divisor& d) {
  std::vector<std::pair<std::string, long>> out;
  for (auto& [p, n] : d.mult) out.emplace_back(p.to_string(), n);
  return out;
}

py::dict log_sum_dict(const LogSum& s) {
  py::dict out;
  out["modulus_product"] = rat_to_string(s.modulus_product());
  out["float"] = s.value();
  out["is_zero"] = s.is_zero();
  return out;
}

}  // namespace

PYBIND11_MODULE(_regpair, m) {
  m.doc() = "Exact and numerical verification of archimedean cycle pairings";
  m.attr("__version__") = REGPAIR_VERSION;

  m.def("weil_product", [](const std::string& f, const std::string& g) {
    return weil_product(parse_function(f), parse_function(g)).to_string();
  }, py::arg("f"), py::arg("g"),
     "Product of all tame symbols of (f, g) on P^1, as an exact scalar string.");

  m.def("tame_symbol", [](const std::string& f, const std::string& g, const std::string& p) {
    return tame_symbol(parse_function(f), parse_function(g), parse_point(p)).value.to_string();
  }, py::arg("f"), py::arg("g"), py::arg("p"));

  m.def("tame_boundary", [](const std::string& f, const std::string& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const TameSymbolValue& t : tame_boundary_curve(parse_function(f), parse_function(g)))
      out.emplace_back(t.at.to_string(), t.value.to_string());
    return out;
  }, py::arg("f"), py::arg("g"));

  m.def("rf_eval", [](const std::string& f, const std::string& p) -> std::string {
    auto v = parse_function(f).eval(parse_point(p));
    if (v.is_zero()) return "0";
    if (v.is_pole()) return "inf";
    return v.value.to_string();
  }, py::arg("f"), py::arg("p"));

  m.def("rf_ord", [](const std::string& f, const std::string& p) {
    return parse_function(f).order_at(parse_point(p));
  }, py::arg("f"), py::arg("p"));

  m.def("cross_ratio",
        [](const std::string& a, const std::string& b, const std::string& c,
           const std::string& d) {
          return cross_ratio(parse_point(a), parse_point(b), parse_point(c), parse_point(d))
              .to_string();
        },
        py::arg("z1"), py::arg("z2"), py::arg("z3"), py::arg("z4"));

  m.def("principal_divisor", [](const std::string& f) {
    return divisor_to_pairs(principal_divisor(parse_function(f)));
  }, py::arg("f"));

  m.def("function_from_divisor",
        [](const std::vector<std::pair<std::string, long>>& d) {
          return function_from_divisor(divisor_from_pairs(d)).to_string();
        },
        py::arg("divisor"));

  m.def("pair0",
        [](const std::string& f, const std::vector<std::pair<std::string, long>>& eps) {
          return log_sum_dict(pair0(parse_function(f), divisor_from_pairs(eps)));
        },
        py::arg("f"), py::arg("eps"),
        "Exact sum of mult * log|f(p)| over a divisor disjoint from div(f).");

  m.def("reciprocity0", [](const std::string& f, const std::string& g) {
    PairingCheck c = reciprocity_check0(parse_function(f), parse_function(g));
    py::dict out;
    out["g_side"] = log_sum_dict(c.lhs);
    out["f_side"] = log_sum_dict(c.rhs);
    out["equal"] = c.equal;
    return out;
  }, py::arg("f"), py::arg("g"));

  m.def("nondegeneracy_witness",
        [](const std::vector<std::pair<std::string, long>>& eta, int budget) {
          Witness w = nondegeneracy_witness(divisor_from_pairs(eta), budget);
          py::dict out;
          out["g"] = w.g.to_string();
          out["value"] = log_sum_dict(w.value);
          out["candidates_tried"] = w.candidates_tried;
          return out;
        },
        py::arg("eta"), py::arg("budget") = 200);

  m.def("pi_p", [](std::complex<double> c, int p) { return pi_p(c, p); }, py::arg("c"),
        py::arg("p"));

  m.def("r_current_eval",
        [](const std::vector<std::string>& fs, std::complex<double> t0) {
          std::vector<RationalFunction1> parsed;
          for (auto& s : fs) parsed.push_back(parse_function(s));
          FormSample f = r_current_eval(parsed, t0);
          py::dict out;
          out["degree"] = f.degree;
          out["coeffs"] = f.coeffs;
          return out;
        },
        py::arg("fs"), py::arg("t0"));

  m.def("d_relation_check",
        [](const std::vector<std::string>& fs, std::complex<double> t0, double h) {
          std::vector<RationalFunction1> parsed;
          for (auto& s : fs) parsed.push_back(parse_function(s));
          DRelationResult r = d_relation_check(parsed, t0, h);
          py::dict out;
          out["residual"] = r.residual;
          out["bound_constant"] = r.bound_constant;
          out["exact_zero"] = r.exact_zero;
          return out;
        },
        py::arg("fs"), py::arg("t0"), py::arg("h"));

  m.def("ledger_template_div", [](const std::string& name, long mm, long nn) {
    return precycle_div(ledger_template(name, mm, nn)).to_string();
  }, py::arg("name"), py::arg("m"), py::arg("n"));

  m.def("pic00_h",
        [](const std::string& a1, const std::string& a2, const std::string& b1,
           const std::string& b2, const std::vector<std::pair<std::string, long>>& gamma_m,
           const std::vector<std::pair<std::string, long>>& gamma_n) {
          CurveConfiguration c;
          c.components = {"M", "N"};
          c.nodes.push_back({"M", parse_point(a1), "N", parse_point(b1)});
          c.nodes.push_back({"M", parse_point(a2), "N", parse_point(b2)});
          Pic00Element gamma;
          gamma["M"] = divisor_from_pairs(gamma_m);
          gamma["N"] = divisor_from_pairs(gamma_n);
          return pic00_h(c, gamma).to_string();
        },
        py::arg("r1_on_m"), py::arg("r2_on_m"), py::arg("r1_on_n"), py::arg("r2_on_n"),
        py::arg("gamma_m"), py::arg("gamma_n"));

  m.def("integrate_unit_disk",
        [](const std::string& kind, double tol) {
          Integrand2D form;
          if (kind == "area") {
            form.sample = [](const Cx&) { return 1.0; };
          } else if (kind == "log") {
            form.sample = [](const Cx& t) { return std::log(std::abs(t)); };
            form.singular_finite = {Cx(0.0, 0.0)};
          } else {
            throw PreconditionError("kind must be 'area' or 'log'");
          }
          QuadratureOptions opts;
          opts.tol = tol;
          QuadratureResult r = integrate_2form(form, Domain::UnitDisk, opts);
          py::dict out;
          out["value"] = r.value;
          out["error_estimate"] = r.error_estimate;
          out["cells_used"] = r.cells_used;
          out["excision_levels"] = r.excision_levels;
          return out;
        },
        py::arg("kind"), py::arg("tol") = 1e-8,
        "Calibration integrals over the unit disk: 'area' or 'log'.");

  m.def("run_scenario",
        [](const std::string& text, const std::string& base_dir) {
          Scenario s = parse_scenario(text, base_dir);
          return run_scenario(s, RunOptions{}).dump(2);
        },
        py::arg("json_text"), py::arg("base_dir") = ".",
        "Run a scenario from JSON text; returns the report as JSON text.");

  m.def("run_scenario_file", [](const std::string& path) {
    Scenario s = load_scenario(path);
    return run_scenario(s, RunOptions{}).dump(2);
  }, py::arg("path"));

  py::register_exception<ExactnessError>(m, "ExactnessError");
  py::register_exception<DisjointnessError>(m, "DisjointnessError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<ParseError>(m, "ScenarioParseError");
}
