#include "sbolab/sbops.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sbolab/errors.hpp"
#include "sbolab/finite_difference.hpp"

namespace sbolab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

Complex cpow(double base, Complex e) { return positive_power(base, e); }

Complex phase(Complex t) { return std::exp(Complex(0.0, 0.5 * kPi) * t); }

void check_boundary_dim(const ParamPair& p, std::span<const double> boundary, const char* what) {
  if (p.n < 2) throw std::invalid_argument(std::string(what) + ": need n >= 2");
  if (static_cast<int>(boundary.size()) != p.n - 1) {
    throw std::invalid_argument(std::string(what) + ": boundary point has the wrong dimension");
  }
}

// sum_j b_j |zeta'|^{2j} zeta_n^{2l-2j} for complex zeta_n, by Horner in zeta_n^2.
Complex juhl_polynomial(const JuhlOperator& op, double boundary_norm2, Complex zeta_n) {
  const Complex t2 = zeta_n * zeta_n;
  Complex out = 0.0;
  for (int j = 0; j <= op.l; ++j) out = out * t2 + op.coeffs[static_cast<std::size_t>(j)] * std::pow(boundary_norm2, j);
  return out;
}

WeylOperator<Complex> boundary_laplacian(int n) {
  WeylOperator<Complex> lap(n);
  for (int i = 0; i + 1 < n; ++i) lap = lap + WeylOperator<Complex>::d(n, i).compose(WeylOperator<Complex>::d(n, i));
  return lap;
}

}  // namespace

// --- parameters ------------------------------------------------------------

bool ParamPair::in_convergent_range() const {
  return (lambda - nu).real() > 0.0 && (lambda + nu).real() > n - 1;
}

std::optional<int> ParamPair::residue_l() const {
  Complex d = nu - lambda;
  double r = std::round(d.real());
  double tol = 1e-9 * std::max(1.0, std::abs(d));
  if (std::abs(d.imag()) > tol || std::abs(d.real() - r) > tol || r < 0.0) return std::nullopt;
  long k = static_cast<long>(r);
  if (k % 2 != 0) return std::nullopt;
  return static_cast<int>(k / 2);
}

bool ParamPair::is_residue_point() const { return residue_l().has_value(); }

bool ParamPair::in_l_even() const {
  auto is_int = [](Complex z) { return z.imag() == 0.0 && z.real() == std::round(z.real()); };
  if (!is_int(lambda) || !is_int(nu)) return false;
  long l = static_cast<long>(lambda.real()), v = static_cast<long>(nu.real());
  return l <= v && v <= 0 && (v - l) % 2 == 0;
}

// --- Juhl operators --------------------------------------------------------

JuhlOperator juhl_build(const ParamPair& params) {
  std::optional<int> l = params.residue_l();
  if (!l) throw ParityError("juhl_build: nu - lambda must be a non-negative even integer");
  if (params.n < 2) throw std::invalid_argument("juhl_build: need n >= 2");
  return {params, *l, juhl_coefficients<Complex>(params.n, *l, params.lambda, params.nu)};
}

ExactJuhlOperator juhl_build(int n, const Rational& lambda, const Rational& nu) {
  Rational d = nu - lambda;
  if (d.get_den() != 1 || sgn(d) < 0 || mpz_class(d.get_num() % 2) != 0) {
    throw ParityError("juhl_build: nu - lambda must be a non-negative even integer");
  }
  if (n < 2) throw std::invalid_argument("juhl_build: need n >= 2");
  int l = static_cast<int>(d.get_num().get_si() / 2);
  return {lambda, nu, n, l, juhl_coefficients<Rational>(n, l, lambda, nu)};
}

WeylOperator<Complex> juhl_weyl(const JuhlOperator& op) {
  const int n = op.params.n;
  const WeylOperator<Complex> lap = boundary_laplacian(n);
  const WeylOperator<Complex> dn = WeylOperator<Complex>::d(n, n - 1);
  WeylOperator<Complex> out(n);
  WeylOperator<Complex> lap_pow = WeylOperator<Complex>::identity(n);
  for (int j = 0; j <= op.l; ++j) {
    WeylOperator<Complex> term = lap_pow;
    for (int k = 0; k < 2 * (op.l - j); ++k) term = term.compose(dn);
    out = out + op.coeffs[static_cast<std::size_t>(j)] * term;
    lap_pow = lap_pow.compose(lap);
  }
  return out;
}

GaussPolyFn juhl_apply(const JuhlOperator& op, const GaussPolyFn& F) {
  if (F.dim() != op.params.n) throw std::invalid_argument("juhl_apply: dimension mismatch");
  return weyl_apply(juhl_weyl(op), F).restrict_last();
}

Complex juhl_apply(const JuhlOperator& op, const FlatFunction& F, std::span<const double> x_boundary, double h) {
  check_boundary_dim(op.params, x_boundary, "juhl_apply");
  std::vector<double> x(x_boundary.begin(), x_boundary.end());
  x.push_back(0.0);
  Complex out = 0.0;
  const WeylOperator<Complex> w = juhl_weyl(op);
  for (const auto& [key, c] : w.terms()) {
    out += c * mixed_partial(F, x, key.d, h);
  }
  return out;
}

// --- A operators -----------------------------------------------------------

Complex akernel_eval(const ParamPair& p, std::span<const double> x_boundary, double x_n) {
  check_boundary_dim(p, x_boundary, "akernel_eval");
  if (x_n == 0.0) throw DomainError("akernel_eval: kernel is singular on x_n = 0");
  Complex norm = recip_gamma((p.lambda + p.nu - Complex(p.n - 1)) / 2.0) * recip_gamma((p.lambda - p.nu) / 2.0);
  if (norm == Complex(0.0)) return 0.0;
  return norm * cpow(std::abs(x_n), p.lambda + p.nu - Complex(p.n)) * cpow(norm2(x_boundary) + x_n * x_n, -p.nu);
}

Complex aop_apply(const ParamPair& p, const GaussPolyFn& F, std::span<const double> x_boundary,
                  const QuadratureOptions& opts) {
  check_boundary_dim(p, x_boundary, "aop_apply");
  if (!p.in_convergent_range()) throw RangeError("aop_apply: parameters outside the convergent range");
  if (p.n != 2 && p.n != 3) throw std::invalid_argument("aop_apply: implemented for n = 2 and n = 3");
  if (F.dim() != p.n) throw std::invalid_argument("aop_apply: dimension mismatch");
  if (F.is_zero()) return 0.0;
  const Complex norm = recip_gamma((p.lambda + p.nu - Complex(p.n - 1)) / 2.0) * recip_gamma((p.lambda - p.nu) / 2.0);
  if (norm == Complex(0.0)) return 0.0;

  const int m = p.n - 1;
  const double scale = F.scale();
  QuadratureOptions outer = opts;
  outer.abs_tol = 1e-6 * scale;
  QuadratureOptions inner = opts;
  inner.abs_tol = 1e-9 * scale;
  std::vector<double> y(static_cast<std::size_t>(p.n));

  // y' = x' - t rho omega, y_n = +-t; the kernel becomes t^{lambda-nu-1} (1+rho^2)^{-nu} rho^{m-1}.
  auto sphere_sum = [&](double t, double rho) -> Complex {
    Complex s = 0.0;
    if (m == 1) {
      for (double sigma : {1.0, -1.0}) {
        y[0] = x_boundary[0] - sigma * t * rho;
        for (double sn : {1.0, -1.0}) {
          y[1] = sn * t;
          s += F(y);
        }
      }
      return s;
    }
    return integrate_periodic(
        [&](double phi) {
          std::vector<double> z = {x_boundary[0] - t * rho * std::cos(phi), x_boundary[1] - t * rho * std::sin(phi), 0.0};
          Complex v = 0.0;
          for (double sn : {1.0, -1.0}) {
            z[2] = sn * t;
            v += F(z);
          }
          return v;
        },
        inner);
  };
  auto radial = [&](double t) -> Complex {
    if (t == 0.0) return 0.0;
    Complex w = integrate(
        [&](double rho) -> Complex {
          return cpow(1.0 + rho * rho, -p.nu) * std::pow(rho, m - 1) * sphere_sum(t, rho);
        },
        0.0, kInf, inner);
    return cpow(t, p.lambda - p.nu - 1.0) * w;
  };
  return norm * integrate(radial, 0.0, kInf, outer);
}

// --- symbols -----------------------------------------------------------------

Complex asymbol_eval(const ParamPair& p, std::span<const double> zeta_boundary, double zeta_n) {
  check_boundary_dim(p, zeta_boundary, "asymbol_eval");
  const double b2 = norm2(zeta_boundary);
  if (!(b2 > zeta_n * zeta_n)) throw DomainError("asymbol_eval: requires |zeta'| > |zeta_n|");
  const Complex d = p.nu - p.lambda;
  const Complex rg = recip_gamma(p.nu);
  if (rg == Complex(0.0)) return 0.0;
  return std::pow(kPi, 0.5 * (p.n - 1)) * phase(d) * cpow(std::sqrt(b2), d) * rg * cpow(2.0, -d) *
         hyp2f1((p.lambda - p.nu) / 2.0, (p.lambda + p.nu + 1.0 - Complex(p.n)) / 2.0, 0.5, -zeta_n * zeta_n / b2);
}

Complex asymbol_fr(const ParamPair& p, std::span<const double> xi_boundary, double xi_n) {
  check_boundary_dim(p, xi_boundary, "asymbol_fr");
  const double b2 = norm2(xi_boundary);
  if (!(b2 > xi_n * xi_n)) throw DomainError("asymbol_fr: requires |xi'| > |xi_n|");
  const Complex d = p.nu - p.lambda;
  // At zeta' = -i xi' the factor |zeta'|^d is e^{-i pi d/2} |xi'|^d and the
  // 2F1 argument -zeta_n^2/|zeta'|^2 keeps the value -xi_n^2/|xi'|^2.
  const Complex branch = std::exp(Complex(0.0, -0.5 * kPi) * d);
  const Complex rg = recip_gamma(p.nu);
  if (rg == Complex(0.0)) return 0.0;
  return std::pow(kPi, 0.5 * (p.n - 1)) * phase(d) * branch * cpow(std::sqrt(b2), d) * rg * cpow(2.0, -d) *
         hyp2f1((p.lambda - p.nu) / 2.0, (p.lambda + p.nu + 1.0 - Complex(p.n)) / 2.0, 0.5, -xi_n * xi_n / b2);
}

Complex csymbol_eval(const ParamPair& p, std::span<const double> zeta_boundary, double zeta_n) {
  check_boundary_dim(p, zeta_boundary, "csymbol_eval");
  std::optional<int> l = p.residue_l();
  if (!l) throw ParityError("csymbol_eval: nu - lambda must be a non-negative even integer");
  InflatedGegenbauer g = inflated_gegenbauer(*l, p.lambda - 0.5 * (p.n - 1));
  return g(-norm2(zeta_boundary), zeta_n);
}

Complex ks_symbol_eval(Complex lambda, int n, std::span<const double> zeta) {
  if (static_cast<int>(zeta.size()) != n) throw std::invalid_argument("ks_symbol_eval: dimension mismatch");
  const double r2 = norm2(zeta);
  if (!(r2 > 0.0)) throw DomainError("ks_symbol_eval: undefined at zeta = 0");
  const Complex e = 2.0 * lambda - Complex(n);
  const Complex rg = recip_gamma(lambda);
  if (rg == Complex(0.0)) return 0.0;
  return phase(e) * std::pow(kPi, 0.5 * n) * cpow(2.0, -e) * rg * cpow(r2, 0.5 * e);
}

Complex ks_symbol_fr(Complex lambda, int n, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != n) throw std::invalid_argument("ks_symbol_fr: dimension mismatch");
  const double r2 = norm2(xi);
  if (!(r2 > 0.0)) throw DomainError("ks_symbol_fr: undefined at xi = 0");
  const Complex e = 2.0 * lambda - Complex(n);
  // (zeta . zeta)^{e/2} at zeta = -i xi is e^{-i pi e/2} |xi|^e.
  const Complex branch = std::exp(Complex(0.0, -0.5 * kPi) * e);
  const Complex rg = recip_gamma(lambda);
  if (rg == Complex(0.0)) return 0.0;
  return phase(e) * branch * std::pow(kPi, 0.5 * n) * cpow(2.0, -e) * rg * cpow(r2, 0.5 * e);
}

// --- Riesz operators ---------------------------------------------------------

Complex riesz_apply(Complex lambda, int n, const GaussPolyFn& F, std::span<const double> x,
                    const QuadratureOptions& opts) {
  if (static_cast<int>(x.size()) != n || F.dim() != n) throw std::invalid_argument("riesz_apply: dimension mismatch");
  if (n != 2 && n != 3) throw std::invalid_argument("riesz_apply: implemented for n = 2 and n = 3");
  if (!(lambda.real() > -0.5 * n)) throw RangeError("riesz_apply: requires Re lambda > -n/2");
  if (F.is_zero()) return 0.0;
  const Complex norm = recip_gamma(lambda + 0.5 * n);
  if (norm == Complex(0.0)) return 0.0;
  const double scale = F.scale();
  QuadratureOptions outer = opts;
  outer.abs_tol = 1e-6 * scale;
  QuadratureOptions inner = opts;
  inner.abs_tol = 1e-9 * scale;
  std::vector<double> y(static_cast<std::size_t>(n));

  auto sphere_mean = [&](double rho) -> Complex {
    if (n == 2) {
      return integrate_periodic(
          [&](double th) {
            y[0] = x[0] + rho * std::cos(th);
            y[1] = x[1] + rho * std::sin(th);
            return F(y);
          },
          inner);
    }
    return integrate(
        [&](double u) {
          const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
          return integrate_periodic(
              [&](double ph) {
                std::vector<double> z = {x[0] + rho * s * std::cos(ph), x[1] + rho * s * std::sin(ph), x[2] + rho * u};
                return F(z);
              },
              inner);
        },
        -1.0, 1.0, inner);
  };
  auto radial = [&](double rho) -> Complex {
    if (rho == 0.0) return 0.0;
    return cpow(rho, 2.0 * lambda + Complex(n - 1)) * sphere_mean(rho);
  };
  return norm * integrate(radial, 0.0, kInf, outer);
}

Complex riesz_via_symbol(Complex lambda, const GaussPolyFn& F, std::span<const double> x,
                         const QuadratureOptions& opts) {
  if (x.size() != 2 || F.dim() != 2) throw std::invalid_argument("riesz_via_symbol: implemented for n = 2");
  if (!(lambda.real() > -1.0 && lambda.real() < 0.0)) {
    throw RangeError("riesz_via_symbol: requires -1 < Re lambda < 0");
  }
  const GaussPolyFn hat = fc_transform(F);
  const double unit[2] = {1.0, 0.0};
  const Complex radial_symbol = ks_symbol_fr(-lambda, 2, unit);  // value at |xi| = 1
  QuadratureOptions inner = opts;
  inner.abs_tol = 1e-9 * F.scale();
  QuadratureOptions outer = opts;
  outer.abs_tol = 1e-7 * F.scale();
  auto angular = [&](double rho) -> Complex {
    if (rho == 0.0) return 0.0;
    Complex a = integrate_periodic(
        [&](double th) {
          const double c = std::cos(th), s = std::sin(th);
          const Complex pt[2] = {Complex(0.0, -rho * c), Complex(0.0, -rho * s)};
          return hat.evaluate(pt) * std::exp(Complex(0.0, rho * (x[0] * c + x[1] * s)));
        },
        inner);
    return cpow(rho, -2.0 * lambda - 2.0) * rho * a;
  };
  return radial_symbol * integrate(angular, 0.0, kInf, outer) / (4.0 * kPi * kPi);
}

Complex residue_constant(int l, int n, Complex nu) {
  if (l < 0) throw std::invalid_argument("residue_constant: l must be non-negative");
  double f = 1.0;
  for (int k = 2; k <= l; ++k) f *= k;
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  return sign * f * std::pow(kPi, 0.5 * (n - 1)) * std::pow(2.0, -2 * l) * recip_gamma(nu);
}

// --- checks ------------------------------------------------------------------

std::vector<SymbolPoint> cone_grid(int n, std::size_t count, std::mt19937_64& rng, double max_ratio) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.5, 2.0), ratio(-max_ratio, max_ratio);
  std::vector<SymbolPoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    SymbolPoint pt;
    pt.boundary.resize(static_cast<std::size_t>(n - 1));
    double s = 0.0;
    do {
      s = 0.0;
      for (double& v : pt.boundary) {
        v = gauss(rng);
        s += v * v;
      }
    } while (s < 1e-6);
    const double r = radius(rng), scale = r / std::sqrt(s);
    for (double& v : pt.boundary) v *= scale;
    pt.normal = ratio(rng) * r;
    out.push_back(std::move(pt));
  }
  return out;
}

Discrepancy discrepancy(Complex value, Complex reference) {
  const double diff = std::abs(value - reference);
  const double mag = std::abs(reference);
  if (mag < 1e-10) return {diff, true};
  return {diff / mag, false};
}

void CheckResult::add(const Discrepancy& d) {
  ++samples;
  if (d.absolute) {
    max_absolute = std::max(max_absolute, d.error);
  } else {
    max_relative = std::max(max_relative, d.error);
  }
}

bool CheckResult::passes(double rel_tol, double abs_tol) const {
  return samples > 0 && max_relative <= rel_tol && max_absolute <= abs_tol;
}

CheckResult residue_check(int l, int n, Complex lambda, std::span<const SymbolPoint> grid) {
  ParamPair p{lambda, lambda + Complex(2.0 * l), n};
  const Complex c = residue_constant(l, n, p.nu);
  CheckResult out;
  for (const auto& pt : grid) {
    Complex a = asymbol_eval(p, pt.boundary, pt.normal);
    Complex rhs = c * csymbol_eval(p, pt.boundary, pt.normal);
    out.add(discrepancy(rhs, a));
  }
  return out;
}

CheckResult functional_eq_check(FunctionalEquation kind, const ParamPair& p, std::span<const SymbolPoint> grid) {
  CheckResult out;
  const int n = p.n;
  for (const auto& pt : grid) {
    Complex lhs, rhs;
    if (kind == FunctionalEquation::TA) {
      const int m = n - 1;
      ParamPair q{p.lambda, Complex(m) - p.nu, n};
      lhs = ks_symbol_eval(Complex(m) - p.nu, m, pt.boundary) * asymbol_eval(p, pt.boundary, pt.normal);
      rhs = std::pow(kPi, 0.5 * m) * recip_gamma(p.nu) * asymbol_eval(q, pt.boundary, pt.normal);
    } else {
      std::vector<double> full = pt.boundary;
      full.push_back(pt.normal);
      ParamPair q{Complex(n) - p.lambda, p.nu, n};
      lhs = asymbol_eval(p, pt.boundary, pt.normal) * ks_symbol_eval(p.lambda, n, full);
      rhs = std::pow(kPi, 0.5 * n) * recip_gamma(p.lambda) * asymbol_eval(q, pt.boundary, pt.normal);
    }
    out.add(discrepancy(lhs, rhs));
  }
  return out;
}

double l_even_max_symbol(const ParamPair& p, std::span<const SymbolPoint> grid) {
  double m = 0.0;
  for (const auto& pt : grid) m = std::max(m, std::abs(asymbol_eval(p, pt.boundary, pt.normal)));
  return m;
}

double juhl_fourier_check(const JuhlOperator& op, const GaussPolyFn& F, std::span<const std::vector<double>> points,
                          const QuadratureOptions& opts) {
  const int n = op.params.n;
  const GaussPolyFn lhs_fn = fc_transform(juhl_apply(op, F));
  const GaussPolyFn hat = fc_transform(F);
  QuadratureOptions q = opts;
  q.abs_tol = 1e-12 * std::max(1.0, hat.scale());
  double worst = 0.0;
  for (const auto& zb : points) {
    if (static_cast<int>(zb.size()) != n - 1) throw std::invalid_argument("juhl_fourier_check: point dimension");
    const Complex lhs = lhs_fn(zb);
    const double b2 = norm2(zb);
    std::vector<Complex> pt(zb.begin(), zb.end());
    pt.push_back(0.0);
    Complex rhs = integrate(
                      [&](double xi) {
                        const Complex zn(0.0, -xi);
                        std::vector<Complex> z = pt;
                        z.back() = zn;
                        return juhl_polynomial(op, b2, zn) * hat.evaluate(z);
                      },
                      -kInf, kInf, q) /
                  (2.0 * kPi);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  return worst;
}

// --- covariance --------------------------------------------------------------

namespace {

std::vector<std::vector<double>> sample_points(int dim, std::size_t count, std::uint64_t seed, bool avoid_origin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<std::vector<double>> out;
  while (out.size() < count) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (double& v : x) v = u(rng);
    const double r = std::sqrt(norm2(x));
    if (avoid_origin && (r < 0.5 || r > 1.5)) continue;
    out.push_back(std::move(x));
  }
  return out;
}

FlatFunction as_flat(const GaussPolyFn& F) {
  return [F](std::span<const double> x) { return F(x); };
}

double residual(Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(lhs)); }

}  // namespace

double covariance_check(OperatorKind kind, const FlatMotion& h, const ParamPair& p, const GaussPolyFn& F,
                        const CovarianceOptions& opts) {
  const int n = p.n;
  if (F.dim() != n) throw std::invalid_argument("covariance_check: dimension mismatch");
  const bool inversion = std::holds_alternative<Inversion>(h);
  double worst = 0.0;

  if (kind == OperatorKind::Riesz) {
    const Complex lam = p.lambda;
    const GaussPolyFn G = pi_flat(h, Complex(n) + lam, F);
    FlatFunction RF = [&](std::span<const double> x) { return riesz_apply(lam, n, F, x, opts.quadrature); };
    FlatFunction rhs_fn = pi_flat(h, -lam, RF);
    for (const auto& x : sample_points(n, opts.samples, opts.seed, inversion)) {
      worst = std::max(worst, residual(riesz_apply(lam, n, G, x, opts.quadrature), rhs_fn(x)));
    }
    return worst;
  }

  const FlatMotion hb = restrict_to_boundary(h, n);
  const auto points = sample_points(n - 1, opts.samples, opts.seed, inversion);

  if (kind == OperatorKind::Juhl) {
    const JuhlOperator op = juhl_build(p);
    const GaussPolyFn CF = juhl_apply(op, F);
    if (!inversion) {
      const GaussPolyFn lhs_fn = juhl_apply(op, pi_flat(h, p.lambda, F));
      const GaussPolyFn rhs_fn = pi_flat(hb, p.nu, CF);
      for (const auto& x : points) worst = std::max(worst, residual(lhs_fn(x), rhs_fn(x)));
      return worst;
    }
    const FlatFunction G = pi_flat(h, p.lambda, as_flat(F));
    const FlatFunction rhs_fn = pi_flat(hb, p.nu, as_flat(CF));
    for (const auto& x : points) {
      worst = std::max(worst, residual(juhl_apply(op, G, x, opts.fd_step), rhs_fn(x)));
    }
    return worst;
  }

  // A operators: the source side must stay in the Gaussian class.
  const GaussPolyFn G = pi_flat(h, p.lambda, F);
  FlatFunction AF = [&](std::span<const double> x) { return aop_apply(p, F, x, opts.quadrature); };
  const FlatFunction rhs_fn = pi_flat(hb, p.nu, AF);
  for (const auto& x : points) {
    worst = std::max(worst, residual(aop_apply(p, G, x, opts.quadrature), rhs_fn(x)));
  }
  return worst;
}

}  // namespace sbolab
