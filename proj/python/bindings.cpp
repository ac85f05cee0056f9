#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "sbolab/errors.hpp"
#include "sbolab/fmethod.hpp"
#include "sbolab/sbops.hpp"
#include "sbolab/specfun.hpp"

namespace py = pybind11;
using namespace sbolab;

namespace {

Rational to_rational(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::object to_fraction(const Rational& q) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(to_fraction(q));
  return out;
}

ParamPair params(Complex lambda, Complex nu, int n) { return ParamPair{lambda, nu, n}; }

py::object json_to_python(const nlohmann::json& j) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

py::object run_suite_py(const std::string& suite, const py::dict& options) {
  cli::RunConfig cfg;
  cfg.suite = suite;
  for (const auto& [key, value] : options) {
    const std::string k = py::str(key);
    if (k == "n") {
      cfg.n = cli::IntRange::parse(py::str(value).cast<std::string>());
    } else if (k == "l") {
      cfg.l = cli::IntRange::parse(py::str(value).cast<std::string>());
    } else if (k == "lambdas") {
      for (const auto& v : value) cfg.lambdas.push_back(py::str(v));
    } else if (k == "nus") {
      for (const auto& v : value) cfg.nus.push_back(py::str(v));
    } else if (k == "samples") {
      cfg.samples = value.cast<std::size_t>();
    } else if (k == "grid") {
      cfg.grid = value.cast<std::size_t>();
    } else if (k == "tolerance") {
      cfg.tolerance = value.cast<double>();
    } else if (k == "budget") {
      cfg.budget = value.cast<std::uint64_t>();
    } else if (k == "seed") {
      cfg.seed = value.cast<std::uint64_t>();
    } else if (k == "op") {
      cfg.op = value.cast<std::string>();
    } else if (k == "gen") {
      cfg.generator = value.cast<std::string>();
    } else if (k == "formal") {
      cfg.formal = value.cast<bool>();
    } else {
      throw ConfigError("unknown option '" + k + "'");
    }
  }
  cli::Report report;
  {
    py::gil_scoped_release release;
    EvaluationBudget budget(cfg.budget);
    report = cli::run_suite(cfg, budget);
  }
  return json_to_python(report.to_json());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Special functions, symmetry breaking operators and the F-method.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error);
  py::register_exception<RepresentationError>(m, "RepresentationError", error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("gamma", &sbolab::gamma, py::arg("z"));
  m.def("recip_gamma", &recip_gamma, py::arg("z"));
  m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("gegenbauer", &gegenbauer, py::arg("degree"), py::arg("mu"), py::arg("t"));
  m.def(
      "inflated_gegenbauer",
      [](int l, Complex mu, Complex v, Complex t) { return inflated_gegenbauer(l, mu)(v, t); }, py::arg("l"),
      py::arg("mu"), py::arg("v"), py::arg("t"));
  m.def(
      "inflated_gegenbauer_coefficients",
      [](int l, const py::object& mu) { return fractions(inflated_gegenbauer_coefficients<Rational>(l, to_rational(mu))); },
      py::arg("l"), py::arg("mu"), "Exact c_j of v^j t^(2l-2j) for rational mu.");

  m.def(
      "juhl_coefficients",
      [](int n, const py::object& lambda, const py::object& nu) {
        const ExactJuhlOperator op = juhl_build(n, to_rational(lambda), to_rational(nu));
        return fractions(op.coeffs);
      },
      py::arg("n"), py::arg("lambda_"), py::arg("nu"), "Exact b_j; nu - lambda must be 2l.");
  m.def(
      "asymbol",
      [](int n, Complex lambda, Complex nu, std::vector<double> zeta_boundary, double zeta_n) {
        return asymbol_eval(params(lambda, nu, n), zeta_boundary, zeta_n);
      },
      py::arg("n"), py::arg("lambda_"), py::arg("nu"), py::arg("zeta_boundary"), py::arg("zeta_n"));
  m.def(
      "csymbol",
      [](int n, Complex lambda, Complex nu, std::vector<double> zeta_boundary, double zeta_n) {
        return csymbol_eval(params(lambda, nu, n), zeta_boundary, zeta_n);
      },
      py::arg("n"), py::arg("lambda_"), py::arg("nu"), py::arg("zeta_boundary"), py::arg("zeta_n"));
  m.def(
      "ks_symbol", [](Complex lambda, int n, std::vector<double> zeta) { return ks_symbol_eval(lambda, n, zeta); },
      py::arg("lambda_"), py::arg("n"), py::arg("zeta"));
  m.def("residue_constant", &residue_constant, py::arg("l"), py::arg("n"), py::arg("nu"));
  m.def(
      "in_l_even", [](Complex lambda, Complex nu) { return params(lambda, nu, 2).in_l_even(); }, py::arg("lambda_"),
      py::arg("nu"));

  m.def(
      "solve_sol_space",
      [](int n, int l, const py::object& lambda) {
        py::list out;
        for (const auto& v : solve_sol_coefficients(SolSystem::build(n, l, to_rational(lambda)))) out.append(fractions(v));
        return out;
      },
      py::arg("n"), py::arg("l"), py::arg("lambda_"),
      "Basis of the solution space as coefficient lists in s^j u^(l-j).");
  m.def(
      "juhl_symbol_coefficients",
      [](int n, int l, const py::object& lambda) { return fractions(juhl_symbol_coefficients(n, l, to_rational(lambda))); },
      py::arg("n"), py::arg("l"), py::arg("lambda_"));

  m.def("suite_names", &cli::suite_names);
  m.def("run_suite", &run_suite_py, py::arg("suite"), py::arg("options") = py::dict(),
        "Runs a verification suite and returns the report as a dict.");
  m.attr("__version__") = cli::kArtifactVersion;
}
