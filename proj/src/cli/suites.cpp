#include "cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "cli/identities.hpp"
#include "sbolab/confgeom.hpp"
#include "sbolab/errors.hpp"
#include "sbolab/fmethod.hpp"
#include "sbolab/gausspoly.hpp"
#include "sbolab/sbops.hpp"
#include "sbolab/specfun.hpp"
#include "sbolab/weyl.hpp"

namespace sbolab::cli {
namespace {

using nlohmann::json;
using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Context {
  const RunConfig& cfg;
  EvaluationBudget& budget;
  Report& report;
  Rng rng;

  std::size_t count(std::size_t fallback) const { return cfg.samples ? *cfg.samples : fallback; }
  std::size_t grid(std::size_t fallback) const { return cfg.grid ? *cfg.grid : fallback; }
  double tol(double fallback) const { return cfg.tolerance ? *cfg.tolerance : fallback; }
  IntRange n(int lo, int hi) const { return cfg.n ? *cfg.n : IntRange{lo, hi}; }
  IntRange l(int lo, int hi) const { return cfg.l ? *cfg.l : IntRange{lo, hi}; }
  QuadratureOptions quadrature() const {
    QuadratureOptions q;
    q.budget = &budget;
    return q;
  }
};

json points_json(std::span<const double> x) { return json(std::vector<double>(x.begin(), x.end())); }

void add_sample(Context& ctx, const std::string& name, const std::string& anchor, Provenance prov,
                const IdentitySample& s, double tol) {
  CaseRecord c;
  c.name = name;
  c.anchor = anchor;
  c.provenance = prov;
  c.inputs = s.inputs;
  c.computed = complex_json(s.lhs);
  c.reference = complex_json(s.rhs);
  c.error = s.error;
  c.tolerance = tol;
  ctx.report.add(std::move(c));
}

void add_grid_case(Context& ctx, const std::string& name, const std::string& anchor, json inputs,
                   const CheckResult& r, double tol) {
  CaseRecord c;
  c.name = name;
  c.anchor = anchor;
  c.provenance = Provenance::Identity;
  c.inputs = std::move(inputs);
  c.computed = {{"max_relative", r.max_relative}, {"max_absolute", r.max_absolute}, {"points", r.samples}};
  c.reference = 0.0;
  c.error = r.max_relative;
  c.tolerance = tol;
  c.abs_error = r.max_absolute;
  ctx.report.add(std::move(c));
}

void add_exact_case(Context& ctx, const std::string& name, const std::string& anchor, Provenance prov, json inputs,
                    json computed, json reference, bool ok) {
  CaseRecord c;
  c.name = name;
  c.anchor = anchor;
  c.provenance = prov;
  c.inputs = std::move(inputs);
  c.computed = std::move(computed);
  c.reference = std::move(reference);
  c.error = ok ? 0.0 : 1.0;
  c.tolerance = 0.0;
  ctx.report.add(std::move(c));
}

std::vector<Scalar> parse_all(const std::vector<std::string>& texts) {
  std::vector<Scalar> out;
  for (const auto& t : texts) out.push_back(Scalar::parse(t));
  return out;
}

// --- specfun ------------------------------------------------------------------

Complex strip_point(Rng& rng) {
  for (;;) {
    Complex z(uniform(rng, -4.5, 8.0), uniform(rng, -3.0, 3.0));
    if (std::abs(z - std::round(z.real())) > 0.05 || z.real() > 0.5) return z;
  }
}

void suite_specfun(Context& ctx) {
  const double t12 = ctx.tol(1e-12), t11 = ctx.tol(1e-11), t10 = ctx.tol(1e-10);
  for (std::size_t k = 0; k < ctx.count(200); ++k) {
    add_sample(ctx, "gamma functional equation", "Gamma(z+1) = z Gamma(z)", Provenance::Identity,
               gamma_shift_sample(strip_point(ctx.rng)), t12);
  }
  for (std::size_t k = 0; k < ctx.count(200); ++k) {
    add_sample(ctx, "reciprocal gamma", "recip_gamma(z) Gamma(z) = 1", Provenance::Identity,
               recip_gamma_sample(strip_point(ctx.rng)), t12);
  }
  for (int k = 0; k <= 5; ++k) {
    const Complex v = recip_gamma(Complex(-k));
    add_exact_case(ctx, "reciprocal gamma zero", "recip_gamma vanishes at the poles of Gamma", Provenance::Identity,
                   {{"z", -k}}, complex_json(v), complex_json(0.0), v == Complex(0.0));
  }
  for (std::size_t k = 0; k < ctx.count(50); ++k) {
    const double a = uniform(ctx.rng, -2.0, 2.0), b = uniform(ctx.rng, -2.0, 2.0);
    const double c = uniform(ctx.rng, 0.5, 3.0), z = uniform(ctx.rng, -0.9, 0.9);
    add_sample(ctx, "2F1 contiguous relation", "contiguous relation in a and c", Provenance::Oracle,
               contiguous_sample(a, b, c, z), t10);
  }
  const IntRange l = ctx.l(0, 6);
  for (const auto& s : gegenbauer_even_sweep(l.hi, ctx.count(50), ctx.rng)) {
    if (s.inputs["l"].get<int>() < l.lo) continue;
    add_sample(ctx, "even-degree Gegenbauer identity", "even-degree Gegenbauer polynomial as a terminating 2F1",
               Provenance::Identity, s, t12);
  }
  for (const auto& s : gegenbauer_even_real_sweep(l.hi, ctx.count(50), ctx.rng)) {
    if (s.inputs["l"].get<int>() < l.lo) continue;
    add_sample(ctx, "even-degree Gegenbauer identity, real argument",
               "even-degree Gegenbauer polynomial as a terminating 2F1", Provenance::Identity, s, t12);
  }
  for (const auto& s : inflated_two_line_sweep(l.hi, ctx.count(50), ctx.rng)) {
    if (s.inputs["l"].get<int>() < l.lo) continue;
    add_sample(ctx, "inflated Gegenbauer two-line equality", "inflated Gegenbauer: sum form = Gamma-quotient form",
               Provenance::Identity, s, t11);
  }
  for (const auto& s : kummer_sweep(ctx.count(100), ctx.rng)) {
    add_sample(ctx, "Kummer relation", "Kummer relation for 2F1", Provenance::Identity, s, t10);
  }
  // Coefficients against the Pochhammer ratio (mu)_{2l-j} / ((mu)_l j! (2l-2j)!) 2^{2l-2j} (-1)^j.
  for (const char* mu_text : {"1/2", "-3/2", "0", "5/7", "-2"}) {
    const Rational mu = parse_rational(mu_text);
    for (int ll = l.lo; ll <= l.hi; ++ll) {
      const auto got = inflated_gegenbauer_coefficients<Rational>(ll, mu);
      std::vector<std::string> got_s, want_s;
      bool ok = got.size() == static_cast<std::size_t>(ll + 1);
      for (int j = 0; j <= ll; ++j) {
        Rational num(1), den(1);
        for (int i = 0; i < 2 * ll - j; ++i) num *= mu + i;
        for (int i = 0; i < ll; ++i) den *= mu + i;
        Rational ratio;
        if (sgn(den) != 0) {
          ratio = num / den;
        } else {
          // (mu)_{2l-j}/(mu)_l as the polynomial prod_{i=l}^{2l-j-1} (mu+i).
          ratio = 1;
          for (int i = ll; i < 2 * ll - j; ++i) ratio *= mu + i;
        }
        Rational fact(1);
        for (int i = 2; i <= j; ++i) fact *= i;
        for (int i = 2; i <= 2 * ll - 2 * j; ++i) fact *= i;
        Rational want = ratio / fact * Rational(mpz_class(1) << (2 * ll - 2 * j));
        if (j % 2 == 1) want = -want;
        want_s.push_back(to_string(want));
        if (j < static_cast<int>(got.size())) {
          got_s.push_back(to_string(got[static_cast<std::size_t>(j)]));
          ok = ok && got[static_cast<std::size_t>(j)] == want;
        }
      }
      add_exact_case(ctx, "inflated Gegenbauer coefficient table", "expanded sum of the inflated Gegenbauer polynomial",
                     Provenance::Oracle, {{"l", ll}, {"mu", mu_text}}, got_s, want_s, ok);
    }
  }
}

// --- weyl -----------------------------------------------------------------------

ExactWeyl random_weyl(Rng& rng, int nvars) {
  ExactWeyl w(nvars);
  const int terms = uniform_int(rng, 1, 4);
  for (int t = 0; t < terms; ++t) {
    Exponents z(static_cast<std::size_t>(nvars)), d(static_cast<std::size_t>(nvars));
    for (int j = 0; j < nvars; ++j) {
      z[static_cast<std::size_t>(j)] = uniform_int(rng, 0, 2);
      d[static_cast<std::size_t>(j)] = uniform_int(rng, 0, 2);
    }
    int p = 0;
    while (p == 0) p = uniform_int(rng, -5, 5);
    w.add_term(WeylKey{z, d}, Rational(p) / uniform_int(rng, 1, 3));
  }
  return w;
}

GaussPolyFn random_gaussian(Rng& rng, int dim) {
  GaussPolyFn f(dim);
  const int terms = uniform_int(rng, 1, 2);
  for (int t = 0; t < terms; ++t) {
    std::vector<double> c(static_cast<std::size_t>(dim));
    for (auto& x : c) x = uniform(rng, -0.5, 0.5);
    ComplexPoly p = ComplexPoly::constant(dim, Complex(uniform(rng, 0.5, 1.5), uniform(rng, -0.5, 0.5)));
    Exponents e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(uniform_int(rng, 0, dim - 1))] = 1;
    p += ComplexPoly::monomial(e, Complex(uniform(rng, -1.0, 1.0), 0.0));
    f.add_term(GaussTerm{p, uniform(rng, 0.5, 1.5), c});
  }
  return f;
}

void suite_weyl(Context& ctx) {
  for (std::size_t k = 0; k < ctx.count(100); ++k) {
    const int nv = uniform_int(ctx.rng, 1, 3);
    const ExactWeyl s = random_weyl(ctx.rng, nv), t = random_weyl(ctx.rng, nv);
    const ExactWeyl lhs = weyl_hat(s.compose(t));
    const ExactWeyl rhs = weyl_hat(s).compose(weyl_hat(t));
    add_exact_case(ctx, "algebraic Fourier transform homomorphism", "hat(S T) = hat(S) hat(T)", Provenance::Identity,
                   {{"nvars", nv}, {"S", s.to_string()}, {"T", t.to_string()}}, lhs.to_string("zeta", "d"),
                   rhs.to_string("zeta", "d"), lhs == rhs);
  }
  const double tol = ctx.tol(1e-9);
  for (std::size_t k = 0; k < ctx.count(20); ++k) {
    const int nv = uniform_int(ctx.rng, 1, 3);
    const ExactWeyl s = random_weyl(ctx.rng, nv);
    const GaussPolyFn f = random_gaussian(ctx.rng, nv);
    const GaussPolyFn lhs = fc_transform(weyl_apply(s, f));
    const GaussPolyFn rhs = weyl_apply(weyl_hat(s), fc_transform(f));
    double worst = 0.0;
    Complex wl = 0.0, wr = 0.0;
    for (int p = 0; p < 5; ++p) {
      std::vector<double> zeta(static_cast<std::size_t>(nv));
      for (auto& x : zeta) x = uniform(ctx.rng, -1.0, 1.0);
      const Complex a = lhs(zeta), b = rhs(zeta);
      const double r = std::abs(a - b) / std::max(1.0, std::abs(a));
      if (r >= worst) {
        worst = r;
        wl = a;
        wr = b;
      }
    }
    CaseRecord c;
    c.name = "Fourier transform intertwines S and hat(S)";
    c.anchor = "F_c(S f) = hat(S) F_c f";
    c.provenance = Provenance::Identity;
    c.inputs = {{"nvars", nv}, {"S", s.to_string()}, {"points", 5}};
    c.computed = complex_json(wl);
    c.reference = complex_json(wr);
    c.error = worst;
    c.tolerance = tol;
    ctx.report.add(std::move(c));
  }
}

// --- geometry -------------------------------------------------------------------

SpherePoint random_sphere_point(Rng& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::VectorXd u(n + 1);
  for (int i = 0; i <= n; ++i) u[i] = g(rng);
  return SpherePoint::from(u / u.norm());
}

FlatMotion random_motion(Rng& rng, int n, int kind) {
  switch (kind) {
    case 0: {
      std::vector<double> b(static_cast<std::size_t>(n));
      for (auto& x : b) x = uniform(rng, -1.0, 1.0);
      return Translation{b};
    }
    case 1:
      return Dilation{uniform(rng, 0.5, 2.0)};
    case 2: {
      Eigen::MatrixXd a(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = uniform(rng, -1.0, 1.0);
      }
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
      return FlatRotation{Eigen::MatrixXd(qr.householderQ())};
    }
    case 3:
      return Reflection{};
    default:
      return Inversion{};
  }
}

const char* motion_name(const FlatMotion& h) {
  static const char* names[] = {"identity", "translation", "dilation", "rotation", "reflection", "inversion"};
  return names[h.index()];
}

void suite_geometry(Context& ctx) {
  const IntRange nr = ctx.n(2, 4);
  const int nn = nr.hi - nr.lo + 1;
  const double tol = ctx.tol(1e-10);
  const std::size_t total = ctx.count(1000);
  for (std::size_t k = 0; k < total; ++k) {
    const int n = nr.lo + static_cast<int>(k % static_cast<std::size_t>(nn));
    const LorentzElement h1 = LorentzElement::random(n, ctx.rng), h2 = LorentzElement::random(n, ctx.rng);
    const SpherePoint x = random_sphere_point(ctx.rng, n);
    const double w = moebius_act(h1 * h2, x).omega;
    const double a = moebius_act(h1, moebius_act(h2, x).point).omega * moebius_act(h2, x).omega;
    CaseRecord c;
    c.name = "conformal factor cocycle";
    c.anchor = "Omega(h1 h2, x) = Omega(h1, L_h2 x) Omega(h2, x)";
    c.inputs = {{"n", n}, {"sample", k}};
    c.computed = a;
    c.reference = w;
    c.error = discrepancy(a, w).error;
    c.tolerance = tol;
    ctx.report.add(std::move(c));
  }
  for (std::size_t k = 0; k < total; ++k) {
    const int n = nr.lo + static_cast<int>(k % static_cast<std::size_t>(nn));
    const LorentzElement g1 = LorentzElement::random(n, ctx.rng), g2 = LorentzElement::random(n, ctx.rng);
    const SpherePoint x = random_sphere_point(ctx.rng, n);
    const Complex lam(uniform(ctx.rng, -2.0, 3.0), uniform(ctx.rng, -1.0, 1.0));
    Eigen::VectorXd a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = uniform(ctx.rng, -1.0, 1.0);
    const SphereFunction f = [a](const SpherePoint& p) { return std::exp(Complex(a.dot(p.u), p.u[0])); };
    const Complex lhs = pi_compact(g1 * g2, lam, f)(x);
    const Complex rhs = pi_compact(g1, lam, pi_compact(g2, lam, f))(x);
    CaseRecord c;
    c.name = "principal series is a representation";
    c.anchor = "varpi(g1 g2) = varpi(g1) varpi(g2)";
    c.inputs = {{"n", n}, {"lambda", complex_json(lam)}, {"sample", k}};
    c.computed = complex_json(lhs);
    c.reference = complex_json(rhs);
    c.error = discrepancy(lhs, rhs).error;
    c.tolerance = tol;
    ctx.report.add(std::move(c));
  }
  for (std::size_t k = 0; k < total / 10 + 1; ++k) {
    const int n = nr.lo + static_cast<int>(k % static_cast<std::size_t>(nn));
    const FlatMotion h = random_motion(ctx.rng, n, static_cast<int>(k % 5));
    const Complex lam(uniform(ctx.rng, -1.0, 2.0), uniform(ctx.rng, -0.5, 0.5));
    const GaussPolyFn g = random_gaussian(ctx.rng, n);
    const FlatFunction F = [g](std::span<const double> x) { return g(x); };
    std::vector<double> x(static_cast<std::size_t>(n));
    for (;;) {
      for (auto& xi : x) xi = uniform(ctx.rng, -1.5, 1.5);
      double r2 = 0.0;
      for (double xi : x) r2 += xi * xi;
      if (r2 > 0.04) break;
    }
    const Complex lhs = pi_flat(h, lam, F)(x);
    const SphereFunction f = twisted_pushforward(lam, F);
    const Complex rhs = twisted_pullback(lam, pi_compact(to_lorentz(h, n).inverse(), lam, f))(x);
    CaseRecord c;
    c.name = "flat generators match the Lorentz action";
    c.anchor = "twisted pullback intertwines varpi and the flat action";
    c.provenance = Provenance::Oracle;
    c.inputs = {{"n", n}, {"generator", motion_name(h)}, {"lambda", complex_json(lam)}, {"x", points_json(x)}};
    c.computed = complex_json(lhs);
    c.reference = complex_json(rhs);
    c.error = discrepancy(lhs, rhs).error;
    c.tolerance = tol;
    ctx.report.add(std::move(c));
  }
  for (std::size_t k = 0; k < total / 10 + 1; ++k) {
    const int n = nr.lo + static_cast<int>(k % static_cast<std::size_t>(nn));
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = uniform(ctx.rng, -3.0, 3.0);
    const FlatPoint back = stereographic(inverse_stereographic(FlatPoint{x}, n));
    const double err = back.at_infinity() ? 1.0 : (*back.x - x).norm() / std::max(1.0, x.norm());
    CaseRecord c;
    c.name = "stereographic round trip";
    c.anchor = "stereographic projection and its inverse";
    c.inputs = {{"n", n}, {"x", std::vector<double>(x.data(), x.data() + n)}};
    c.computed = err;
    c.reference = 0.0;
    c.error = err;
    c.tolerance = tol;
    ctx.report.add(std::move(c));
  }
}

// --- residue and zero set -------------------------------------------------------

void suite_residue(Context& ctx) {
  const IntRange nr = ctx.n(2, 5), lr = ctx.l(0, 4);
  const double tol = ctx.tol(1e-10);
  std::vector<Scalar> given = parse_all(ctx.cfg.lambdas);
  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (int l = lr.lo; l <= lr.hi; ++l) {
      std::vector<Complex> lams;
      for (const auto& s : given) lams.push_back(s.value);
      if (given.empty()) {
        for (std::size_t k = 0; k < ctx.count(10); ++k) lams.push_back(uniform(ctx.rng, -3.0, 4.0));
      }
      for (const Complex lam : lams) {
        const auto grid = cone_grid(n, ctx.grid(50), ctx.rng);
        const CheckResult r = residue_check(l, n, lam, grid);
        add_grid_case(ctx, "residue formula", "A-symbol at nu = lambda + 2l is a multiple of the C-symbol",
                      {{"n", n}, {"l", l}, {"lambda", complex_json(lam)}, {"nu", complex_json(lam + 2.0 * l)}}, r, tol);
      }
    }
  }
  const double ztol = ctx.tol(1e-12);
  const std::pair<int, int> zero_set[] = {{0, 0}, {-2, 0}, {-1, -1}, {-3, -1}, {-4, -2}};
  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (const auto& [lam, nu] : zero_set) {
      const ParamPair p{Complex(lam), Complex(nu), n};
      const auto grid = cone_grid(n, ctx.grid(50), ctx.rng);
      const double m = l_even_max_symbol(p, grid);
      CaseRecord c;
      c.name = "zero set L_even";
      c.anchor = "the normalized A family vanishes on L_even";
      c.inputs = {{"n", n}, {"lambda", lam}, {"nu", nu}, {"in_l_even", p.in_l_even()}};
      c.computed = m;
      c.reference = 0.0;
      c.error = p.in_l_even() ? m : 1.0;
      c.tolerance = ztol;
      ctx.report.add(std::move(c));
    }
  }
  for (int n = nr.lo; n <= nr.hi; ++n) {
    const ParamPair p{Complex(uniform(ctx.rng, 0.0, 3.0), 0.3), Complex(uniform(ctx.rng, -1.0, 2.0), -0.2), n};
    const double scale = uniform(ctx.rng, 0.3, 3.0);
    CheckResult r;
    for (const auto& pt : cone_grid(n, ctx.grid(50), ctx.rng)) {
      std::vector<double> b = pt.boundary;
      for (auto& x : b) x *= scale;
      const Complex lhs = asymbol_eval(p, b, scale * pt.normal);
      const Complex rhs = positive_power(scale, p.nu - p.lambda) * asymbol_eval(p, pt.boundary, pt.normal);
      r.add(discrepancy(lhs, rhs));
    }
    add_grid_case(ctx, "A-symbol homogeneity", "the A-symbol is homogeneous of degree nu - lambda",
                  {{"n", n}, {"lambda", complex_json(p.lambda)}, {"nu", complex_json(p.nu)}, {"c", scale}}, r,
                  ctx.tol(1e-12));
  }
}

// --- functional equations -------------------------------------------------------

void suite_functional_eq(Context& ctx) {
  const IntRange nr = ctx.n(2, 4);
  const double tol = ctx.tol(1e-10);
  const auto lams = parse_all(ctx.cfg.lambdas), nus = parse_all(ctx.cfg.nus);
  if (lams.size() != nus.size()) throw ConfigError("functional-eq: --lambda and --nu must be given in pairs");
  for (int n = nr.lo; n <= nr.hi; ++n) {
    std::vector<std::pair<Complex, Complex>> params;
    for (std::size_t k = 0; k < lams.size(); ++k) params.emplace_back(lams[k].value, nus[k].value);
    if (params.empty()) {
      for (std::size_t k = 0; k < ctx.count(10); ++k) {
        params.emplace_back(Complex(uniform(ctx.rng, -2.0, 4.0), uniform(ctx.rng, -0.5, 0.5)),
                            Complex(uniform(ctx.rng, -2.0, 4.0), uniform(ctx.rng, -0.5, 0.5)));
      }
    }
    for (const auto& [lam, nu] : params) {
      const ParamPair p{lam, nu, n};
      const auto grid = cone_grid(n, ctx.grid(50), ctx.rng);
      const json inputs = {{"n", n}, {"lambda", complex_json(lam)}, {"nu", complex_json(nu)}};
      add_grid_case(ctx, "functional equation T A", "Knapp-Stein on the subsphere composed with A",
                    inputs, functional_eq_check(FunctionalEquation::TA, p, grid), tol);
      add_grid_case(ctx, "functional equation A T", "A composed with Knapp-Stein on the sphere", inputs,
                    functional_eq_check(FunctionalEquation::AT, p, grid), tol);
    }
  }
}

// --- covariance -----------------------------------------------------------------

FlatMotion boundary_motion(Rng& rng, int n, const std::string& gen, bool full_space) {
  if (gen == "translation") {
    std::vector<double> b(static_cast<std::size_t>(n));
    for (auto& x : b) x = uniform(rng, -0.8, 0.8);
    if (!full_space) b.back() = 0.0;
    return Translation{b};
  }
  if (gen == "dilation") return Dilation{uniform(rng, 0.6, 1.7)};
  if (gen == "rotation") {
    const int m = full_space ? n : n - 1;
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
    if (m == 1) {
      r(0, 0) = -1.0;
    } else {
      Eigen::MatrixXd a(m, m);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) a(i, j) = uniform(rng, -1.0, 1.0);
      }
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
      r.topLeftCorner(m, m) = Eigen::MatrixXd(qr.householderQ());
    }
    return FlatRotation{r};
  }
  if (gen == "reflection") return Reflection{};
  if (gen == "inversion") return Inversion{};
  throw ConfigError("unknown generator '" + gen + "'");
}

void suite_covariance(Context& ctx) {
  const std::string& op = ctx.cfg.op;
  if (op != "juhl" && op != "aop" && op != "riesz") throw ConfigError("--op must be juhl, aop or riesz");
  std::vector<std::string> gens;
  if (ctx.cfg.generator == "all") {
    gens = {"translation", "dilation", "rotation", "reflection"};
    if (op == "juhl") gens.push_back("inversion");
  } else {
    static const std::vector<std::string> known = {"translation", "dilation", "rotation", "reflection", "inversion"};
    if (std::find(known.begin(), known.end(), ctx.cfg.generator) == known.end()) {
      throw ConfigError("unknown generator '" + ctx.cfg.generator + "'");
    }
    gens = {ctx.cfg.generator};
  }
  if (op != "juhl" && ctx.cfg.generator == "inversion") {
    throw ConfigError("covariance: the inversion leaves the Gaussian class, so it is checked for --op juhl only");
  }
  const IntRange nr = ctx.n(2, 2);
  if (op != "juhl" && nr.hi > 3) throw ConfigError("covariance: aop and riesz are implemented for n = 2, 3");
  const IntRange lr = ctx.l(0, 2);
  const auto lams = parse_all(ctx.cfg.lambdas), nus = parse_all(ctx.cfg.nus);

  CovarianceOptions opts;
  opts.samples = ctx.count(op == "juhl" ? 20 : 5);
  opts.seed = ctx.cfg.seed;
  opts.quadrature = ctx.quadrature();

  for (int n = nr.lo; n <= nr.hi; ++n) {
    std::vector<ParamPair> params;
    if (op == "juhl") {
      std::vector<Complex> base;
      for (const auto& s : lams) base.push_back(s.value);
      if (base.empty()) base = {Complex(uniform(ctx.rng, 0.2, 1.5)), Complex(uniform(ctx.rng, -1.0, 1.0), 0.4)};
      for (int l = lr.lo; l <= lr.hi; ++l) {
        for (const Complex lam : base) params.push_back({lam, lam + 2.0 * l, n});
      }
    } else if (op == "aop") {
      if (lams.size() != nus.size()) throw ConfigError("covariance: --lambda and --nu must be given in pairs");
      for (std::size_t k = 0; k < lams.size(); ++k) params.push_back({lams[k].value, nus[k].value, n});
      if (params.empty()) {
        const double lam = uniform(ctx.rng, 2.2, 3.2);
        params.push_back({lam, uniform(ctx.rng, 0.6 + 0.5 * (n - 2), lam - 0.6), n});
        params.push_back({Complex(3.0, 0.5), Complex(0.8 + 0.5 * (n - 2), -0.3), n});
      }
      for (const auto& p : params) {
        if (!p.in_convergent_range()) throw ConfigError("covariance: aop parameters outside the convergent range");
      }
    } else {
      for (const auto& s : lams) params.push_back({s.value, 0.0, n});
      if (params.empty()) params = {{Complex(-0.6), 0.0, n}, {Complex(-0.35, 0.3), 0.0, n}};
    }
    const GaussPolyFn F = random_gaussian(ctx.rng, n);
    for (const auto& gen : gens) {
      for (const auto& p : params) {
        const FlatMotion h = boundary_motion(ctx.rng, n, gen, op == "riesz");
        const OperatorKind kind = op == "juhl" ? OperatorKind::Juhl : op == "aop" ? OperatorKind::AOp : OperatorKind::Riesz;
        const double residual = covariance_check(kind, h, p, F, opts);
        const double tol = ctx.tol(op == "juhl" ? (gen == "inversion" ? 1e-6 : 1e-10) : op == "aop" ? 1e-5 : 1e-6);
        CaseRecord c;
        c.name = op + " covariance under " + gen;
        c.anchor = op == "riesz" ? "Knapp-Stein operator intertwines varpi_{n+lambda} and varpi_{-lambda}"
                                 : "symmetry breaking: T varpi_lambda(h) = varpi_nu(h) T for h in G'";
        c.provenance = Provenance::Oracle;
        json inputs = {{"n", n}, {"operator", op}, {"generator", gen}, {"lambda", complex_json(p.lambda)},
                       {"samples", opts.samples}};
        if (op != "riesz") inputs["nu"] = complex_json(p.nu);
        if (gen == "inversion") inputs["fd_step"] = opts.fd_step;
        c.inputs = std::move(inputs);
        c.computed = residual;
        c.reference = 0.0;
        c.error = residual;
        c.tolerance = tol;
        ctx.report.add(std::move(c));
      }
    }
  }
}

// --- fourier-kernel -------------------------------------------------------------

void suite_fourier_kernel(Context& ctx) {
  if (ctx.cfg.n && (ctx.cfg.n->lo != 2 || ctx.cfg.n->hi != 2)) {
    throw ConfigError("fourier-kernel: the numeric kernel transforms are implemented for n = 2");
  }
  const double tol = ctx.tol(1e-4);
  QuadratureOptions q = ctx.quadrature();
  const std::size_t extra = ctx.grid(1) - 1;
  auto points = [&](std::pair<double, double> first) {
    std::vector<std::pair<double, double>> pts{first};
    for (std::size_t k = 0; k < extra; ++k) {
      const double a = uniform(ctx.rng, 0.8, 1.5) * (uniform_int(ctx.rng, 0, 1) ? 1.0 : -1.0);
      pts.emplace_back(a, uniform(ctx.rng, -0.7, 0.7) * std::abs(a));
    }
    return pts;
  };
  struct AChoice {
    double lambda, nu;
    std::pair<double, double> xi;
  };
  for (const AChoice& a : {AChoice{2.5, 1.2, {1.0, 0.4}}, AChoice{3.0, 0.8, {1.3, -0.7}}, AChoice{2.2, 1.0, {0.9, 0.5}}}) {
    const ParamPair p{a.lambda, a.nu, 2};
    const Complex norm = recip_gamma((p.lambda + p.nu - 1.0) / 2.0) * recip_gamma((p.lambda - p.nu) / 2.0);
    for (const auto& [x1, x2] : points(a.xi)) {
      const Complex numeric = norm * fourier_even_kernel_2d(a.lambda + a.nu - 2.0, -a.nu, x1, x2, q);
      const double b[1] = {x1};
      const Complex closed = asymbol_fr(p, b, x2);
      CaseRecord c;
      c.name = "Fourier transform of the A kernel";
      c.anchor = "closed-form A-symbol continued to zeta = -i xi";
      c.provenance = Provenance::Oracle;
      c.inputs = {{"n", 2}, {"lambda", a.lambda}, {"nu", a.nu}, {"xi", {x1, x2}}};
      c.computed = complex_json(numeric);
      c.reference = complex_json(closed);
      c.error = discrepancy(numeric, closed).error;
      c.tolerance = tol;
      ctx.report.add(std::move(c));
    }
  }
  for (const double lam : {-0.6, -0.75, -0.85}) {
    for (const auto& [x1, x2] : points({1.1, 0.6})) {
      const Complex numeric = recip_gamma(lam + 1.0) * fourier_even_kernel_2d(0.0, lam, x1, x2, q);
      const double xi[2] = {x1, x2};
      const Complex closed = ks_symbol_fr(-lam, 2, xi);
      CaseRecord c;
      c.name = "Fourier transform of the Riesz kernel";
      c.anchor = "Knapp-Stein symbol continued to zeta = -i xi";
      c.provenance = Provenance::Oracle;
      c.inputs = {{"n", 2}, {"lambda", lam}, {"xi", {x1, x2}}};
      c.computed = complex_json(numeric);
      c.reference = complex_json(closed);
      c.error = discrepancy(numeric, closed).error;
      c.tolerance = tol;
      ctx.report.add(std::move(c));
    }
  }
  for (const double lam : {-0.3, -0.6, -0.9}) {
    const GaussPolyFn F = random_gaussian(ctx.rng, 2);
    const double x[2] = {uniform(ctx.rng, -1.0, 1.0), uniform(ctx.rng, -1.0, 1.0)};
    const Complex direct = riesz_apply(lam, 2, F, x, q);
    const Complex fourier = riesz_via_symbol(lam, F, x, q);
    CaseRecord c;
    c.name = "Riesz operator by its Fourier multiplier";
    c.anchor = "the Riesz operator is the Fourier multiplier by the Knapp-Stein symbol";
    c.provenance = Provenance::Oracle;
    c.inputs = {{"n", 2}, {"lambda", lam}, {"x", {x[0], x[1]}}};
    c.computed = complex_json(direct);
    c.reference = complex_json(fourier);
    c.error = discrepancy(direct, fourier).error;
    c.tolerance = ctx.tol(1e-8);
    ctx.report.add(std::move(c));
  }
  for (int n = 2; n <= 3; ++n) {
    for (int l = 0; l <= 2; ++l) {
      const Complex lam(uniform(ctx.rng, -0.5, 1.5), 0.2);
      const JuhlOperator op = juhl_build(ParamPair{lam, lam + 2.0 * l, n});
      const GaussPolyFn F = random_gaussian(ctx.rng, n);
      std::vector<std::vector<double>> pts(3, std::vector<double>(static_cast<std::size_t>(n - 1)));
      for (auto& pt : pts) {
        for (auto& v : pt) v = uniform(ctx.rng, -1.0, 1.0);
      }
      const double r = juhl_fourier_check(op, F, pts, q);
      CaseRecord c;
      c.name = "Juhl operator as the C-symbol multiplier";
      c.anchor = "Fourier symbol of the Juhl operator is the inflated Gegenbauer polynomial";
      c.provenance = Provenance::Oracle;
      c.inputs = {{"n", n}, {"l", l}, {"lambda", complex_json(lam)}, {"points", pts.size()}};
      c.computed = r;
      c.reference = 0.0;
      c.error = r;
      c.tolerance = ctx.tol(1e-8);
      ctx.report.add(std::move(c));
    }
  }
}

// --- fmethod --------------------------------------------------------------------

Rational random_rational(Rng& rng) {
  static const int dens[] = {1, 7, 11, 13};
  const int q = dens[uniform_int(rng, 0, 3)];
  return Rational(uniform_int(rng, -40, 40)) / q;
}

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

void suite_fmethod(Context& ctx) {
  const IntRange nr = ctx.n(2, 5), lr = ctx.l(0, 4);
  std::vector<Rational> given;
  for (const auto& s : parse_all(ctx.cfg.lambdas)) {
    if (!s.exact) throw ConfigError("fmethod: --lambda must be rational");
    given.push_back(*s.exact);
  }
  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (int l = lr.lo; l <= lr.hi; ++l) {
      std::vector<Rational> lams = given;
      if (lams.empty()) {
        for (std::size_t k = 0; k < ctx.count(10); ++k) lams.push_back(random_rational(ctx.rng));
      }
      for (const Rational& lam : lams) {
        const SolSystem sys = SolSystem::build(n, l, lam);
        const auto sol = solve_sol_coefficients(sys);
        const RationalVector juhl = juhl_symbol_coefficients(n, l, lam);
        bool ok = sol.size() == 1;
        json computed = {{"dimension", sol.size()}};
        if (sol.size() == 1) {
          // Normalize so the leading coefficient of the Juhl table is matched.
          const auto c = proportionality(sol[0], juhl);
          ok = ok && c.has_value();
          RationalVector g = sol[0];
          if (c) {
            for (auto& x : g) x /= *c;
          }
          computed["generator"] = rationals_json(g);
          computed["proportionality"] = c ? json(to_string(*c)) : json(nullptr);
          ExactPoly F(n);
          for (std::size_t k = 0; k < g.size(); ++k) F += sys.basis[k] * g[k];
          const bool annihilated = verify_annihilation(F, sys);
          computed["annihilated"] = annihilated;
          ok = ok && annihilated;
        }
        const SolSystem flat = SolSystem::build_from_flat(n, l, lam);
        bool same_ops = flat.fundamentals.size() == sys.fundamentals.size();
        for (std::size_t j = 0; same_ops && j < sys.fundamentals.size(); ++j) {
          same_ops = flat.fundamentals[j] == sys.fundamentals[j];
        }
        computed["flat_preimage_agrees"] = same_ops;
        ok = ok && same_ops;
        add_exact_case(ctx, "F-method solution space", "polynomial solutions of the F-system are spanned by the Juhl symbol",
                       Provenance::Oracle, {{"n", n}, {"l", l}, {"lambda", to_string(lam)}, {"nu", to_string(Rational(lam + 2 * l))}},
                       computed, {{"dimension", 1}, {"generator", rationals_json(juhl)}}, ok);
      }
      if (ctx.cfg.formal && l <= 3) {
        const FormalSolution f = solve_sol_space_formal(n, l);
        json computed = {{"generic_dimension", f.generic_dimension},
                         {"degeneracy", to_string(f.degeneracy)},
                         {"candidate_lambdas", rationals_json(f.candidate_lambdas)},
                         {"degenerate_lambdas", rationals_json(f.degenerate_lambdas)},
                         {"roots_complete", f.roots_complete}};
        json gen = json::array();
        for (const auto& p : f.generator) gen.push_back(to_string(p));
        computed["generator"] = gen;
        add_exact_case(ctx, "F-method with formal lambda", "generic dimension of the polynomial solution space",
                       Provenance::Oracle, {{"n", n}, {"l", l}}, computed, {{"generic_dimension", 1}},
                       f.generic_dimension == 1);
        if (!f.degenerate_lambdas.empty()) {
          ctx.report.notes.push_back("n=" + std::to_string(n) + " l=" + std::to_string(l) +
                                     ": dimension jumps at lambda in " + computed["degenerate_lambdas"].dump());
        }
      }
    }
  }
}

using SuiteFn = void (*)(Context&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"specfun", suite_specfun},         {"weyl", suite_weyl},
      {"geometry", suite_geometry},       {"residue", suite_residue},
      {"functional-eq", suite_functional_eq}, {"covariance", suite_covariance},
      {"fourier-kernel", suite_fourier_kernel}, {"fmethod", suite_fmethod},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun",       "weyl",       "geometry",       "residue",
                                                 "functional-eq", "covariance", "fourier-kernel", "fmethod"};
  return names;
}

Report run_suite(const RunConfig& config, EvaluationBudget& budget) {
  const auto it = registry().find(config.suite);
  if (it == registry().end()) throw ConfigError("unknown suite '" + config.suite + "'");
  config.validate();
  Report report;
  report.suite = config.suite;
  report.config = config.to_json();
  Context ctx{config, budget, report, Rng(config.seed)};
  const auto start = std::chrono::steady_clock::now();
  it->second(ctx);
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sbolab::cli
