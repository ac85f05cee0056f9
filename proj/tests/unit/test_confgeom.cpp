#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "sbolab/confgeom.hpp"
#include "sbolab/errors.hpp"

using namespace sbolab;
using namespace sbolab::testing;

namespace {

SpherePoint random_sphere_point(Rng& rng, int n) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd u(n + 1);
  for (int i = 0; i <= n; ++i) u[i] = normal(rng);
  return SpherePoint::from(u / u.norm());
}

Eigen::VectorXd to_eigen(const std::vector<double>& x) {
  return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

Eigen::MatrixXd rotation_matrix(int n, std::mt19937_64& rng) {
  Eigen::MatrixXd a(n, n);
  std::normal_distribution<double> normal;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = normal(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
}

std::vector<FlatMotion> generators(int n, Rng& rng) {
  std::vector<double> shift(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i + 1 < n; ++i) shift[static_cast<std::size_t>(i)] = uniform(rng, -1, 1);
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  r.topLeftCorner(n - 1, n - 1) = rotation_matrix(n - 1, rng);
  return {FlatIdentity{}, Translation{shift}, Dilation{uniform(rng, 0.5, 2.0)}, FlatRotation{r}, Reflection{},
          Inversion{}};
}

const Complex kLambdas[] = {Complex(0.7, 0.0), Complex(-1.3, 0.4), Complex(2.5, -1.0)};

}  // namespace

TEST_CASE("LorentzElement: validation") {
  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    const LorentzElement g = LorentzElement::random(n, rng);
    Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n + 2, n + 2);
    q(0, 0) = -1;
    CHECK((g.matrix().transpose() * q * g.matrix() - q).norm() < 1e-12 * g.matrix().squaredNorm());
    CHECK(((g * g.inverse()).matrix() - Eigen::MatrixXd::Identity(n + 2, n + 2)).norm() < 1e-12);
  }
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(4, 4);
  bad(1, 1) = 2;
  CHECK_THROWS_AS(LorentzElement::from_matrix(bad), DomainError);
  Eigen::MatrixXd reversing = Eigen::MatrixXd::Identity(4, 4);
  reversing(0, 0) = -1;
  CHECK_THROWS_AS(LorentzElement::from_matrix(reversing), DomainError);
  CHECK_THROWS_AS(SpherePoint::from(Eigen::Vector3d(1, 1, 0)), DomainError);
}

TEST_CASE("moebius_act: identity, isometries and boosts") {
  Rng rng(32);
  for (int n = 2; n <= 4; ++n) {
    const SpherePoint x = random_sphere_point(rng, n);
    const MoebiusImage id = moebius_act(LorentzElement::identity(n), x);
    CHECK((id.point.u - x.u).norm() < 1e-15);
    CHECK(id.omega == doctest::Approx(1.0).epsilon(1e-15));
    const double angle = uniform(rng, 0, 6);
    const MoebiusImage rot = moebius_act(LorentzElement::rotation(n, 0, n, angle), x);
    CHECK(std::abs(rot.omega - 1.0) < 1e-12);
    CHECK(std::abs(rot.point.u.norm() - 1.0) < 1e-12);
    CHECK(std::abs(rot.point.u[1] - x.u[1]) < 1e-15);
  }
  // Boost in the (time, pole) plane fixes both poles with factors e^{-s} and e^{s}.
  const double s = 0.8;
  Eigen::VectorXd north = Eigen::VectorXd::Zero(3), south = Eigen::VectorXd::Zero(3);
  north[0] = 1;
  south[0] = -1;
  const LorentzElement boost = LorentzElement::boost(2, 0, s);
  const MoebiusImage a = moebius_act(boost, SpherePoint::from(north));
  const MoebiusImage b = moebius_act(boost, SpherePoint::from(south));
  CHECK((a.point.u - north).norm() < 1e-15);
  CHECK((b.point.u - south).norm() < 1e-15);
  CHECK(std::abs(a.omega * b.omega - 1.0) < 1e-14);
  CHECK(std::abs(std::abs(std::log(a.omega)) - s) < 1e-14);
}

TEST_CASE("conformal factor: cocycle identity") {
  Rng rng(33);
  const SpherePoint x0 = random_sphere_point(rng, 3);
  CHECK(conformal_factor_cocycle_check(LorentzElement::identity(3), LorentzElement::identity(3), x0) == 0.0);
  for (int k = 0; k < 100; ++k) {
    const LorentzElement r1 = LorentzElement::rotation(3, 0, 2, uniform(rng, 0, 6));
    const LorentzElement r2 = LorentzElement::rotation(3, 1, 3, uniform(rng, 0, 6));
    CHECK(conformal_factor_cocycle_check(r1, r2, random_sphere_point(rng, 3)) < 1e-12);
  }
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = uniform_int(rng, 2, 4);
    worst = std::max(worst, conformal_factor_cocycle_check(LorentzElement::random(n, rng),
                                                           LorentzElement::random(n, rng),
                                                           random_sphere_point(rng, n)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("stereographic chart") {
  for (int n = 2; n <= 4; ++n) {
    Eigen::VectorXd pole = Eigen::VectorXd::Zero(n + 1);
    pole[0] = 1;
    const FlatPoint origin = stereographic(SpherePoint::from(pole));
    REQUIRE_FALSE(origin.at_infinity());
    CHECK(origin.x->norm() < 1e-15);
    pole[0] = -1;
    CHECK(stereographic(SpherePoint::from(pole)).at_infinity());
    CHECK(inverse_stereographic(FlatPoint::infinity(), n).u[0] == doctest::Approx(-1.0));
    // s = 0: the point omega itself.
    Eigen::VectorXd eq = Eigen::VectorXd::Zero(n + 1);
    eq[1] = 0.6;
    eq[n] = 0.8;
    const FlatPoint p = stereographic(SpherePoint::from(eq));
    CHECK(((*p.x) - eq.tail(n)).norm() < 1e-15);
  }
  Rng rng(34);
  for (int k = 0; k < 1000; ++k) {
    const int n = uniform_int(rng, 2, 4);
    const SpherePoint x = random_sphere_point(rng, n);
    const SpherePoint back = inverse_stereographic(stereographic(x), n);
    CHECK((back.u - x.u).norm() < 1e-12);
  }
  // Points with x_n = 0 lift to the equator u_n = 0.
  for (int k = 0; k < 100; ++k) {
    const int n = uniform_int(rng, 2, 4);
    auto x = random_point(rng, n, 3.0);
    x.back() = 0.0;
    const SpherePoint u = inverse_stereographic(FlatPoint{to_eigen(x)}, n);
    CHECK(std::abs(u.u[n]) < 1e-12);
  }
}

TEST_CASE("twisted pullback: closed forms") {
  Rng rng(35);
  for (const Complex lambda : kLambdas) {
    const FlatFunction one = twisted_pullback(lambda, [](const SpherePoint&) { return Complex(1.0); });
    const FlatFunction first = twisted_pullback(lambda, [](const SpherePoint& p) { return Complex(p.u[0]); });
    for (int k = 0; k < 20; ++k) {
      const auto x = random_point(rng, 3, 2.0);
      const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
      const Complex w = std::pow(Complex(1.0 + r2), -lambda);
      CHECK(rel_err(one(x), w) < 1e-13);
      CHECK(rel_err(first(x), w * (1.0 - r2) / (1.0 + r2)) < 1e-13);
    }
    // Pushforward inverts the pullback.
    const FlatFunction g = [](std::span<const double> x) { return Complex(std::exp(-x[0] * x[0]), x[1]); };
    const FlatFunction round = twisted_pullback(lambda, twisted_pushforward(lambda, g));
    for (int k = 0; k < 20; ++k) {
      const auto x = random_point(rng, 3, 2.0);
      CHECK(rel_err(round(x), g(x)) < 1e-12);
    }
  }
  const FlatFunction plain = twisted_pullback(0.0, [](const SpherePoint& p) { return Complex(p.u[1]); });
  const double x[2] = {0.3, -0.4};
  const SpherePoint lifted = inverse_stereographic(FlatPoint{Eigen::Vector2d(0.3, -0.4)}, 2);
  CHECK(rel_err(plain(x), lifted.u[1]) < 1e-15);
}

TEST_CASE("pi_compact: group action") {
  Rng rng(36);
  for (int k = 0; k < 100; ++k) {
    const int n = uniform_int(rng, 2, 4);
    const LorentzElement g1 = LorentzElement::random(n, rng), g2 = LorentzElement::random(n, rng);
    const Complex lambda = uniform_complex(rng, -2, 2, -1, 1);
    const Eigen::VectorXd c = random_sphere_point(rng, n).u;
    const SphereFunction f = [c](const SpherePoint& p) { return std::exp(Complex(p.u.dot(c), 0.5 * p.u[0])); };
    const SpherePoint x = random_sphere_point(rng, n);
    const Complex lhs = pi_compact(g1 * g2, lambda, f)(x);
    const Complex rhs = pi_compact(g1, lambda, pi_compact(g2, lambda, f))(x);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("pi_flat: closed forms of the generators") {
  Rng rng(37);
  const GaussPolyFn F = random_gaussian(rng, 2);
  const FlatFunction Ff = [&](std::span<const double> x) { return F(x); };
  for (const Complex lambda : kLambdas) {
    const GaussPolyFn same = pi_flat(FlatIdentity{}, lambda, F);
    const GaussPolyFn dil = pi_flat(Dilation{2.0}, lambda, F);
    const FlatFunction inv = pi_flat(Inversion{}, lambda, Ff);
    for (int k = 0; k < 20; ++k) {
      const auto x = random_point(rng, 2, 1.5);
      const double x2[2] = {2 * x[0], 2 * x[1]};
      const double r2 = x[0] * x[0] + x[1] * x[1];
      const double xi[2] = {x[0] / r2, x[1] / r2};
      CHECK(rel_err(same(x), F(x)) < 1e-15);
      CHECK(rel_err(dil(x), std::pow(Complex(2.0), lambda) * F(x2)) < 1e-13);
      CHECK(rel_err(inv(x), std::pow(Complex(r2), -lambda) * F(xi)) < 1e-13);
    }
  }
  CHECK_THROWS_AS(pi_flat(Inversion{}, Complex(1.0), F), RepresentationError);
}

TEST_CASE("pi_flat: agrees with the compact route for every generator") {
  Rng rng(38);
  for (int n = 2; n <= 3; ++n) {
    const GaussPolyFn F = random_gaussian(rng, n);
    const FlatFunction Ff = [&](std::span<const double> x) { return F(x); };
    for (const FlatMotion& h : generators(n, rng)) {
      for (const Complex lambda : kLambdas) {
        const FlatFunction flat = pi_flat(h, lambda, Ff);
        const FlatFunction compact =
            twisted_pullback(lambda, pi_compact(to_lorentz(h, n).inverse(), lambda, twisted_pushforward(lambda, Ff)));
        for (int k = 0; k < 50; ++k) {
          const auto x = random_point(rng, n, 1.5);
          const Complex a = flat(x), b = compact(x);
          CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
        }
        if (!std::holds_alternative<Inversion>(h)) {
          const GaussPolyFn symbolic = pi_flat(h, lambda, F);
          const auto x = random_point(rng, n, 1.5);
          CHECK(rel_err(symbolic(x), flat(x)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("flat_map and conformal factors") {
  const double x[2] = {0.6, -0.8};
  const FlatPoint img = flat_map(Inversion{}, x);
  CHECK((*img.x - Eigen::Vector2d(0.6, -0.8)).norm() < 1e-15);
  CHECK(flat_conformal_factor(Inversion{}, x) == doctest::Approx(1.0));
  const double origin[2] = {0.0, 0.0};
  CHECK(flat_map(Inversion{}, origin).at_infinity());
  CHECK(flat_conformal_factor(Dilation{3.0}, x) == doctest::Approx(3.0));
  CHECK(flat_conformal_factor(Reflection{}, x) == doctest::Approx(1.0));
  CHECK((*flat_map(Reflection{}, x).x - Eigen::Vector2d(0.6, 0.8)).norm() < 1e-15);
  CHECK_THROWS_AS(flat_map(Dilation{-1.0}, x), DomainError);
}
