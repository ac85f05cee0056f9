#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "cli/config.hpp"
#include "cli/identities.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "sbolab/errors.hpp"
#include "sbolab/quadrature.hpp"
#include "sbolab/sbops.hpp"

namespace sbolab::cli {
namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Evaluation counts also accept scientific notation such as 1e8.
const CLI::Validator kCount(
    [](std::string& s) -> std::string {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(s, &used);
      } catch (const std::exception&) {
        return "not a number: " + s;
      }
      if (used != s.size() || !(value >= 1.0) || value > 1e18 || value != std::floor(value)) {
        return "expected a positive integer count: " + s;
      }
      s = std::to_string(static_cast<std::uint64_t>(value));
      return {};
    },
    "COUNT");

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
  RunConfig cfg;
  std::string n, l;
};

int do_verify(VerifyArgs& a, std::ostream& out) {
  if (!a.n.empty()) a.cfg.n = IntRange::parse(a.n);
  if (!a.l.empty()) a.cfg.l = IntRange::parse(a.l);
  a.cfg.validate();
  const std::string path = resolve_output(a.cfg.out_path, a.cfg.suite + ".json");
  EvaluationBudget budget(a.cfg.budget);
  Report report = run_suite(a.cfg, budget);
  write_text(path, report.to_json().dump(2) + "\n");
  if (a.cfg.csv_path) write_text(*a.cfg.csv_path, report.to_csv());
  out << "suite " << report.suite << ": " << report.passed() << "/" << report.cases.size() << " passed, max error "
      << sci(report.max_error()) << ", report " << path << "\n";
  return report.all_pass() ? kExitPass : kExitFail;
}

// --- eval -----------------------------------------------------------------------

struct EvalArgs {
  std::string what;
  int n = 0;
  int l = -1;
  std::string lambda, nu, zeta;
  std::string zeta_n;
};

Scalar need(const std::string& text, const char* flag) {
  if (text.empty()) throw ConfigError(std::string("missing ") + flag);
  return Scalar::parse(text);
}

int need_n(const EvalArgs& a) {
  if (a.n < 2) throw ConfigError("--n must be at least 2");
  return a.n;
}

// zeta as (zeta', zeta_n): --zeta lists n-1 or n components; --zeta-n, when
// given, supplies or must equal the last one.
std::pair<std::vector<double>, double> split_zeta(const EvalArgs& a, int n) {
  if (a.zeta.empty()) throw ConfigError("missing --zeta");
  std::vector<double> z = parse_vector(a.zeta);
  std::optional<double> zn;
  if (!a.zeta_n.empty()) zn = parse_vector(a.zeta_n).at(0);
  if (static_cast<int>(z.size()) == n) {
    const double last = z.back();
    z.pop_back();
    if (zn && *zn != last) throw ConfigError("--zeta-n disagrees with the last component of --zeta");
    return {z, last};
  }
  if (static_cast<int>(z.size()) == n - 1) return {z, zn.value_or(0.0)};
  throw ConfigError("--zeta must have n-1 or n components");
}

int do_eval(const EvalArgs& a, std::ostream& out) {
  if (a.what == "juhl-coeffs") {
    const int n = need_n(a);
    const Scalar lam = need(a.lambda, "--lambda"), nu = need(a.nu, "--nu");
    if (lam.exact && nu.exact) {
      const ExactJuhlOperator op = juhl_build(n, *lam.exact, *nu.exact);
      out << "l = " << op.l << "\n";
      for (std::size_t j = 0; j < op.coeffs.size(); ++j) out << "b_" << j << " = " << to_string(op.coeffs[j]) << "\n";
    } else {
      const JuhlOperator op = juhl_build(ParamPair{lam.value, nu.value, n});
      out << "l = " << op.l << "\n";
      for (std::size_t j = 0; j < op.coeffs.size(); ++j) out << "b_" << j << " = " << format_complex(op.coeffs[j]) << "\n";
    }
    return kExitPass;
  }
  if (a.what == "a-symbol" || a.what == "c-symbol") {
    const int n = need_n(a);
    const ParamPair p{need(a.lambda, "--lambda").value, need(a.nu, "--nu").value, n};
    const auto [zb, zn] = split_zeta(a, n);
    out << format_complex(a.what == "a-symbol" ? asymbol_eval(p, zb, zn) : csymbol_eval(p, zb, zn)) << "\n";
    return kExitPass;
  }
  if (a.what == "ks-symbol") {
    const int n = need_n(a);
    auto [zb, zn] = split_zeta(a, n);
    zb.push_back(zn);
    out << format_complex(ks_symbol_eval(need(a.lambda, "--lambda").value, n, zb)) << "\n";
    return kExitPass;
  }
  if (a.what == "residue-constant") {
    if (a.l < 0) throw ConfigError("missing --l");
    out << format_complex(residue_constant(a.l, need_n(a), need(a.nu, "--nu").value)) << "\n";
    return kExitPass;
  }
  throw ConfigError("unknown quantity '" + a.what + "'");
}

// --- table ----------------------------------------------------------------------

struct TableArgs {
  std::string identity;
  std::size_t rows = 0;
  int l_max = 6;
  int n = 2;
  std::string lambda = "2.5", nu = "1.2";
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000'000;
  double tolerance = 0.0;
  std::string out_path;
};

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int do_table(const TableArgs& a, std::ostream& out) {
  std::mt19937_64 rng(a.seed);
  std::ostringstream csv;
  double tol = 0.0;
  double worst = 0.0;
  std::size_t count = 0;
  auto emit = [&](const IdentitySample& s, const std::vector<std::string>& keys) {
    for (const auto& k : keys) {
      const auto& v = s.inputs.at(k);
      csv << (v.is_object() ? format_complex({v["re"].get<double>(), v["im"].get<double>()}) : csv_number(v.get<double>()))
          << ',';
    }
    csv << format_complex(s.lhs) << ',' << format_complex(s.rhs) << ',' << csv_number(s.error) << '\n';
    worst = std::max(worst, s.error);
    ++count;
  };
  if (a.identity == "kummer") {
    tol = 1e-10;
    csv << "a,b,c,z,lhs,rhs,rel_error\n";
    for (const auto& s : kummer_sweep(a.rows ? a.rows : 100, rng)) emit(s, {"a", "b", "c", "z"});
  } else if (a.identity == "gegenbauer-2f1") {
    if (a.l_max < 0) throw ConfigError("--l-max must be non-negative");
    tol = 1e-12;
    csv << "l,mu,x,lhs,rhs,rel_error\n";
    for (const auto& s : gegenbauer_even_sweep(a.l_max, a.rows ? a.rows : 50, rng)) emit(s, {"l", "mu", "x"});
  } else if (a.identity == "fca-grid") {
    if (a.n != 2) throw ConfigError("fca-grid: the numeric kernel transform is implemented for n = 2");
    const ParamPair p{Scalar::parse(a.lambda).value, Scalar::parse(a.nu).value, 2};
    if (p.lambda.imag() != 0.0 || p.nu.imag() != 0.0) throw ConfigError("fca-grid: real parameters required");
    if (!p.in_convergent_range() || !(p.nu.real() > 0.5)) {
      throw ConfigError("fca-grid: need lambda > nu > 1/2 and lambda + nu > 1");
    }
    tol = 1e-4;
    EvaluationBudget budget(a.budget);
    QuadratureOptions q;
    q.budget = &budget;
    const double lam = p.lambda.real(), nu = p.nu.real();
    const Complex norm = recip_gamma((lam + nu - 1.0) / 2.0) * recip_gamma((lam - nu) / 2.0);
    csv << "lambda,nu,xi1,xi2,lhs,rhs,rel_error\n";
    std::uniform_real_distribution<double> mag(0.8, 1.5), ratio(-0.7, 0.7);
    for (std::size_t k = 0; k < (a.rows ? a.rows : 20); ++k) {
      const double x1 = mag(rng), x2 = ratio(rng) * x1;
      const Complex numeric = norm * fourier_even_kernel_2d(lam + nu - 2.0, -nu, x1, x2, q);
      const double b[1] = {x1};
      const IdentitySample s{{{"lambda", lam}, {"nu", nu}, {"xi1", x1}, {"xi2", x2}},
                             numeric,
                             asymbol_fr(p, b, x2),
                             discrepancy(numeric, asymbol_fr(p, b, x2)).error};
      emit(s, {"lambda", "nu", "xi1", "xi2"});
    }
  } else {
    throw ConfigError("unknown table '" + a.identity + "'");
  }
  if (a.tolerance != 0.0) tol = a.tolerance;
  const std::string path = resolve_output(a.out_path, a.identity + ".csv");
  write_text(path, csv.str());
  out << "table " << a.identity << ": " << count << " rows, max rel_error " << sci(worst) << ", written to " << path
      << "\n";
  return worst <= tol ? kExitPass : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry breaking operators for S^n > S^{n-1}: verification harness"};
  app.require_subcommand(1);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  verify->add_option("suite", va.cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", va.n, "Dimension n or range lo..hi");
  verify->add_option("--l", va.l, "Degree l or range lo..hi");
  verify->add_option("--lambda", va.cfg.lambdas, "Explicit lambda values (a, a+bi, p/q)");
  verify->add_option("--nu", va.cfg.nus, "Explicit nu values, paired with --lambda");
  verify->add_option("--samples", va.cfg.samples, "Seeded-random parameter or point count");
  verify->add_option("--grid", va.cfg.grid, "Symbol grid points per case");
  verify->add_option("--tol", va.cfg.tolerance, "Override the suite tolerances");
  verify->add_option("--budget", va.cfg.budget, "Total quadrature evaluation budget")->transform(kCount);
  verify->add_option("--seed", va.cfg.seed, "Random seed");
  verify->add_option("--op", va.cfg.op, "covariance: juhl, aop or riesz");
  verify->add_option("--gen", va.cfg.generator, "covariance: translation, dilation, rotation, reflection, inversion or all");
  verify->add_flag("--formal", va.cfg.formal, "fmethod: also solve with lambda as an indeterminate (l <= 3)");
  verify->add_option("--out", va.cfg.out_path, "Report path (default $SBOLAB_OUTPUT_DIR/<suite>.json)");
  verify->add_option("--csv", va.cfg.csv_path, "Also write the per-case errors as CSV");

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a coefficient table, symbol or constant");
  eval->add_option("what", ea.what, "Quantity")
      ->required()
      ->check(CLI::IsMember({"juhl-coeffs", "a-symbol", "c-symbol", "ks-symbol", "residue-constant"}));
  eval->add_option("--n", ea.n, "Dimension n");
  eval->add_option("--l", ea.l, "Degree l");
  eval->add_option("--lambda", ea.lambda, "lambda");
  eval->add_option("--nu", ea.nu, "nu");
  eval->add_option("--zeta", ea.zeta, "Comma-separated zeta' or (zeta', zeta_n)");
  eval->add_option("--zeta-n", ea.zeta_n, "zeta_n");

  TableArgs ta;
  CLI::App* table = app.add_subcommand("table", "Write an identity table as CSV");
  table->add_option("identity", ta.identity, "Identity")
      ->required()
      ->check(CLI::IsMember({"kummer", "gegenbauer-2f1", "fca-grid"}));
  table->add_option("--rows", ta.rows, "Rows (per degree for gegenbauer-2f1)");
  table->add_option("--l-max", ta.l_max, "gegenbauer-2f1: maximal l");
  table->add_option("--n", ta.n, "fca-grid: dimension");
  table->add_option("--lambda", ta.lambda, "fca-grid: lambda");
  table->add_option("--nu", ta.nu, "fca-grid: nu");
  table->add_option("--seed", ta.seed, "Random seed");
  table->add_option("--budget", ta.budget, "fca-grid: quadrature evaluation budget")->transform(kCount);
  table->add_option("--tol", ta.tolerance, "Override the pass threshold");
  table->add_option("--out", ta.out_path, "CSV path (default $SBOLAB_OUTPUT_DIR/<identity>.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfig;
  }
  try {
    if (verify->parsed()) return do_verify(va, out);
    if (eval->parsed()) return do_eval(ea, out);
    return do_table(ta, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace sbolab::cli
