#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "generators.hpp"
#include "sbolab/errors.hpp"
#include "sbolab/sbops.hpp"

using namespace sbolab;
using namespace sbolab::testing;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

std::vector<SymbolPoint> grid(int n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  return cone_grid(n, count, rng);
}

}  // namespace

TEST_CASE("ParamPair predicates") {
  CHECK(ParamPair{2.5, 1.2, 2}.in_convergent_range());
  CHECK_FALSE(ParamPair{1.0, 1.2, 2}.in_convergent_range());
  CHECK_FALSE(ParamPair{1.5, 0.2, 3}.in_convergent_range());
  CHECK(ParamPair{1.0, 5.0, 3}.is_residue_point());
  CHECK(ParamPair{1.0, 5.0, 3}.residue_l() == 2);
  CHECK_FALSE(ParamPair{1.0, 4.0, 3}.is_residue_point());
  CHECK(ParamPair{Complex(1.0, 0.1), Complex(3.0, 0.1), 3}.residue_l() == 1);
  CHECK_FALSE(ParamPair{Complex(1.0, 0.1), Complex(3.0, 0.2), 3}.is_residue_point());
  CHECK(ParamPair{-3.0, -1.0, 2}.in_l_even());
  CHECK(ParamPair{0.0, 0.0, 2}.in_l_even());
  CHECK_FALSE(ParamPair{-2.0, -1.0, 2}.in_l_even());
  CHECK_FALSE(ParamPair{-1.0, 1.0, 2}.in_l_even());
}

TEST_CASE("juhl_build: coefficient tables") {
  const ExactJuhlOperator l0 = juhl_build(3, Rational(2, 3), Rational(2, 3));
  REQUIRE(l0.coeffs.size() == 1);
  CHECK(l0.coeffs[0] == 1);
  for (int n = 2; n <= 5; ++n) {
    const Rational lambda(-7, 5), nu = lambda + 2;
    const ExactJuhlOperator op = juhl_build(n, lambda, nu);
    REQUIRE(op.coeffs.size() == 2);
    CHECK(op.coeffs[1] == 1);
    CHECK(op.coeffs[0] == lambda + nu - n + 1);
  }
  CHECK_THROWS_AS(juhl_build(3, Rational(1), Rational(2)), ParityError);
  CHECK_THROWS_AS(juhl_build(3, Rational(1), Rational(-1)), ParityError);
  CHECK_THROWS_AS(juhl_build(ParamPair{1.0, Complex(3.0, 0.5), 3}), ParityError);
  const JuhlOperator numeric = juhl_build(ParamPair{0.5, 4.5, 3});
  CHECK(numeric.l == 2);
  CHECK(numeric.coeffs.size() == 3);
}

TEST_CASE("juhl symbol equals the inflated Gegenbauer polynomial exactly") {
  Rng rng(51);
  for (int n = 2; n <= 5; ++n) {
    for (int l = 0; l <= 6; ++l) {
      const Rational lambda = random_rational(rng, 20, 9);
      const auto b = juhl_coefficients<Rational>(n, l, lambda, lambda + 2 * l);
      const auto c = inflated_gegenbauer_coefficients<Rational>(l, lambda - Rational(n - 1) / 2);
      for (int j = 0; j <= l; ++j) {
        // v = -|zeta'|^2 contributes (-1)^j.
        CHECK(b[static_cast<std::size_t>(j)] == (j % 2 == 0 ? 1 : -1) * c[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("juhl_apply: restriction and the l = 1 chain-rule oracle") {
  const GaussPolyFn g = GaussPolyFn::gaussian(2, 1.0, {0.0, 0.0});
  const GaussPolyFn r = juhl_apply(juhl_build(ParamPair{0.3, 0.3, 2}), g);
  const Complex lambda(0.4, 0.2), nu = lambda + 2.0;
  const GaussPolyFn one = juhl_apply(juhl_build(ParamPair{lambda, nu, 2}), g);
  const Complex kappa = lambda + nu - 2.0 + 1.0;
  Rng rng(52);
  for (int k = 0; k < 10; ++k) {
    const double x[1] = {uniform(rng, -2, 2)};
    const double e = std::exp(-x[0] * x[0]);
    CHECK(rel_err(r(x), e) < 1e-15);
    CHECK(std::abs(one(x) - ((4 * x[0] * x[0] - 2) * e - 2.0 * kappa * e)) < 1e-13);
  }
}

TEST_CASE("akernel_eval: closed values") {
  const double xb[1] = {1.0};
  CHECK(akernel_eval(ParamPair{1.5, 1.5, 2}, xb, 0.7) == Complex(0.0));
  const ParamPair p{2.5, 1.2, 2};
  const Complex expected = recip_gamma((p.lambda + p.nu - 1.0) / 2.0) * recip_gamma((p.lambda - p.nu) / 2.0) *
                           std::pow(2.0, -p.nu.real());
  CHECK(rel_err(akernel_eval(p, xb, 1.0), expected) < 1e-14);
  CHECK(akernel_eval(p, xb, 0.5).real() > 0.0);
  CHECK_THROWS_AS(akernel_eval(p, xb, 0.0), DomainError);
}

TEST_CASE("asymbol: special values, homogeneity, region") {
  Rng rng(53);
  for (int k = 0; k < 20; ++k) {
    const int n = uniform_int(rng, 2, 5);
    const Complex lambda = uniform_complex(rng, -2, 3, -1, 1), nu = uniform_complex(rng, 0.5, 3, -1, 1);
    const auto pts = grid(n, 3, 100 + k);
    for (const auto& z : pts) {
      CHECK(rel_err(asymbol_eval(ParamPair{nu, nu, n}, z.boundary, z.normal),
                    std::pow(kPi, 0.5 * (n - 1)) * recip_gamma(nu)) < 1e-13);
      const double r = std::sqrt(norm2(z.boundary));
      const Complex d = nu - lambda;
      const Complex flat = std::pow(kPi, 0.5 * (n - 1)) * std::exp(Complex(0, kPi / 2) * d) *
                           positive_power(r, d) * recip_gamma(nu) * positive_power(2.0, -d);
      CHECK(rel_err(asymbol_eval(ParamPair{lambda, nu, n}, z.boundary, 0.0), flat) < 1e-13);
      const double c = uniform(rng, 0.3, 3.0);
      std::vector<double> scaled = z.boundary;
      for (auto& v : scaled) v *= c;
      const ParamPair p{lambda, nu, n};
      CHECK(rel_err(asymbol_eval(p, scaled, c * z.normal), positive_power(c, d) * asymbol_eval(p, z.boundary, z.normal)) <
            1e-12);
    }
  }
  const double zb[1] = {0.5};
  CHECK_THROWS_AS(asymbol_eval(ParamPair{1.0, 2.0, 2}, zb, 0.6), DomainError);
}

TEST_CASE("csymbol: low degrees and parity") {
  Rng rng(54);
  for (int n = 2; n <= 5; ++n) {
    const Complex lambda = uniform_complex(rng, -2, 2, -1, 1);
    for (const auto& z : grid(n, 5, 200 + n)) {
      CHECK(csymbol_eval(ParamPair{lambda, lambda, n}, z.boundary, z.normal) == Complex(1.0));
      const Complex mu = lambda - 0.5 * (n - 1);
      CHECK(rel_err(csymbol_eval(ParamPair{lambda, lambda + 2.0, n}, z.boundary, z.normal),
                    2.0 * (mu + 1.0) * z.normal * z.normal + norm2(z.boundary)) < 1e-13);
    }
  }
  const double zb[1] = {1.0};
  CHECK_THROWS_AS(csymbol_eval(ParamPair{1.0, 2.0, 2}, zb, 0.1), ParityError);
}

TEST_CASE("ks_symbol: special value and scaling") {
  Rng rng(55);
  for (int n = 1; n <= 4; ++n) {
    const auto zeta = random_point(rng, n, 2.0);
    CHECK(rel_err(ks_symbol_eval(0.5 * n, n, zeta), std::pow(kPi, 0.5 * n) * recip_gamma(0.5 * n)) < 1e-14);
    const Complex lambda = uniform_complex(rng, -2, 2, -1, 1);
    const double c = uniform(rng, 0.3, 3.0);
    std::vector<double> scaled = zeta;
    for (auto& v : scaled) v *= c;
    CHECK(rel_err(ks_symbol_eval(lambda, n, scaled), positive_power(c, 2.0 * lambda - double(n)) *
                                                         ks_symbol_eval(lambda, n, zeta)) < 1e-13);
  }
  const double origin[2] = {0.0, 0.0};
  CHECK_THROWS_AS(ks_symbol_eval(1.0, 2, origin), DomainError);
}

TEST_CASE("residue_constant: closed values") {
  for (int n = 2; n <= 5; ++n) {
    const Complex nu(1.7, 0.3);
    CHECK(rel_err(residue_constant(0, n, nu), std::pow(kPi, 0.5 * (n - 1)) * recip_gamma(nu)) < 1e-15);
    CHECK(residue_constant(2, n, 0.0) == Complex(0.0));
    CHECK(residue_constant(1, n, -1.0) == Complex(0.0));
  }
  CHECK(rel_err(residue_constant(1, 3, 2.0), -kPi / 4) < 1e-15);
  CHECK(rel_err(residue_constant(0, 3, 2.0), kPi) < 1e-15);
}

TEST_CASE("residue formula on symbol grids") {
  for (int n = 2; n <= 5; ++n) {
    const auto pts = grid(n, 50, 300 + n);
    CHECK(residue_check(0, n, 0.8, pts).max_error() < 1e-14);
    Rng rng(56 + n);
    for (int l = 0; l <= 4; ++l) {
      for (int k = 0; k < 3; ++k) {
        const CheckResult r = residue_check(l, n, uniform(rng, -3, 4), pts);
        CHECK(r.passes(1e-10));
      }
    }
  }
}

TEST_CASE("functional equations: zeta_n = 0 reduction and random sweeps") {
  Rng rng(57);
  for (int n = 2; n <= 4; ++n) {
    std::vector<SymbolPoint> flat = grid(n, 5, 400 + n);
    for (auto& z : flat) z.normal = 0.0;
    const auto pts = grid(n, 50, 500 + n);
    for (int k = 0; k < 3; ++k) {
      const ParamPair p{uniform_complex(rng, 0.5, 3, -1, 1), uniform_complex(rng, 0.5, 3, -1, 1), n};
      for (auto kind : {FunctionalEquation::TA, FunctionalEquation::AT}) {
        CHECK(functional_eq_check(kind, p, flat).passes(1e-12));
        CHECK(functional_eq_check(kind, p, pts).passes(1e-10));
      }
    }
  }
}

TEST_CASE("L_even: the A-symbol vanishes") {
  const std::pair<double, double> points[] = {{0, 0}, {-2, 0}, {-1, -1}, {-3, -1}, {-4, -2}};
  for (int n = 2; n <= 4; ++n) {
    const auto pts = grid(n, 50, 600 + n);
    for (const auto& [lambda, nu] : points) {
      const ParamPair p{lambda, nu, n};
      REQUIRE(p.in_l_even());
      CHECK(l_even_max_symbol(p, pts) <= 1e-12);
    }
    CHECK(l_even_max_symbol(ParamPair{-1.0, 0.5, n}, pts) > 1e-3);
  }
}

TEST_CASE("discrepancy switches to absolute error near zero") {
  CHECK_FALSE(discrepancy(1.0 + 1e-12, 1.0).absolute);
  const Discrepancy d = discrepancy(3e-12, 1e-11);
  CHECK(d.absolute);
  CHECK(d.error == doctest::Approx(7e-12));
  CheckResult r;
  r.add(discrepancy(1.0 + 1e-11, 1.0));
  r.add(discrepancy(2e-13, 1e-13));
  CHECK(r.samples == 2);
  CHECK(r.passes(1e-10));
  CHECK_FALSE(r.passes(1e-12));
  CHECK_FALSE(r.passes(1e-10, 1e-14));
}

TEST_CASE("aop_apply: zero input, range and an independent cartesian quadrature") {
  const ParamPair p{2.5, 1.2, 2};
  const double x[1] = {0.3};
  CHECK(aop_apply(p, GaussPolyFn(2), x) == Complex(0.0));
  CHECK_THROWS_AS(aop_apply(ParamPair{1.0, 1.5, 2}, GaussPolyFn::gaussian(2, 1.0, {0.0, 0.0}), x), RangeError);

  GaussPolyFn F = GaussPolyFn::gaussian(2, 0.8, {0.2, -0.3});
  F += GaussPolyFn::gaussian(2, 1.3, {-0.4, 0.5}, Complex(0.5, -0.25));
  // y1 = x' + sigma s, y2 = tau t with s, t >= 0, splitting at the kernel singularity.
  QuadratureOptions inner;
  inner.abs_tol = 1e-11;
  QuadratureOptions outer;
  outer.abs_tol = 1e-10;
  Complex oracle = 0.0;
  for (double sigma : {-1.0, 1.0}) {
    for (double tau : {-1.0, 1.0}) {
      oracle += integrate(
          [&](double t) {
            if (t == 0.0) return Complex(0.0);
            return integrate(
                [&](double s) {
                  const double y[2] = {x[0] + sigma * s, tau * t};
                  const double kb[1] = {-sigma * s};
                  return F(y) * akernel_eval(p, kb, -tau * t);
                },
                0.0, kInf, inner);
          },
          0.0, kInf, outer);
    }
  }
  const Complex value = aop_apply(p, F, x);
  CHECK(std::abs(value - oracle) <= 1e-6 * (1.0 + std::abs(oracle)));
}

TEST_CASE("riesz operator: zero input, window and the Fourier route") {
  const GaussPolyFn F = GaussPolyFn::gaussian(2, 1.0, {0.1, -0.2});
  const double x[2] = {0.4, 0.3};
  CHECK(riesz_apply(-0.5, 2, GaussPolyFn(2), x) == Complex(0.0));
  CHECK_THROWS_AS(riesz_apply(-1.2, 2, F, x), RangeError);
  for (const Complex lambda : {Complex(-0.6), Complex(-0.35, 0.3)}) {
    const Complex direct = riesz_apply(lambda, 2, F, x);
    const Complex fourier = riesz_via_symbol(lambda, F, x);
    CAPTURE(lambda);
    CHECK(std::abs(direct - fourier) <= 1e-6 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("juhl operator as a C-symbol multiplier") {
  Rng rng(58);
  for (int n = 2; n <= 3; ++n) {
    const GaussPolyFn F = random_gaussian(rng, n);
    std::vector<std::vector<double>> pts;
    for (int k = 0; k < 10; ++k) pts.push_back(random_point(rng, n - 1, 1.0));
    for (int l = 0; l <= 2; ++l) {
      const Complex lambda = uniform_complex(rng, -1, 2, -0.5, 0.5);
      const JuhlOperator op = juhl_build(ParamPair{lambda, lambda + 2.0 * l, n});
      CHECK(juhl_fourier_check(op, F, pts) <= 1e-8);
    }
  }
}

TEST_CASE("covariance: juhl under affine motions and the inversion") {
  Rng rng(59);
  const GaussPolyFn F = random_gaussian(rng, 2);
  CovarianceOptions opts;
  opts.samples = 10;
  for (int l = 0; l <= 2; ++l) {
    const ParamPair p{Complex(0.3, 0.2), Complex(0.3 + 2 * l, 0.2), 2};
    CHECK(covariance_check(OperatorKind::Juhl, Translation{{0.7, 0.0}}, p, F, opts) <= 1e-12);
    CHECK(covariance_check(OperatorKind::Juhl, Dilation{1.7}, p, F, opts) <= 1e-10);
    CHECK(covariance_check(OperatorKind::Juhl, Reflection{}, p, F, opts) <= 1e-10);
  }
  opts.samples = 3;
  const ParamPair p1{Complex(0.3, 0.2), Complex(2.3, 0.2), 2};
  CHECK(covariance_check(OperatorKind::Juhl, Inversion{}, p1, F, opts) <= 1e-6);
}

TEST_CASE("covariance: A and Riesz operators under dilation") {
  Rng rng(60);
  const GaussPolyFn F = GaussPolyFn::gaussian(2, 1.0, {0.2, -0.1});
  CovarianceOptions opts;
  opts.samples = 2;
  CHECK(covariance_check(OperatorKind::AOp, Dilation{1.4}, ParamPair{2.5, 1.2, 2}, F, opts) <= 1e-5);
  CHECK(covariance_check(OperatorKind::Riesz, Dilation{1.4}, ParamPair{-0.6, 0.0, 2}, F, opts) <= 1e-6);
  CHECK_THROWS_AS(covariance_check(OperatorKind::AOp, Inversion{}, ParamPair{2.5, 1.2, 2}, F, opts),
                  RepresentationError);
}
