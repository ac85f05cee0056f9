#pragma once

// Conformal geometry of S^n inside R^{n+1}, acted on by O(n+1,1) through the
// null cone: a sphere point u is the ray of v = (1, u), time coordinate first,
// with the quadratic form -v_0^2 + v_1^2 + ... + v_{n+1}^2. The first sphere
// coordinate u_0 is the "pole" coordinate s of the stereographic chart
//   (s, sqrt(1 - s^2) w)  ->  sqrt((1 - s)/(1 + s)) w,
// so that the equator u_n = 0 (last ambient coordinate) is the image of the
// hyperplane x_n = 0.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "sbolab/gausspoly.hpp"

namespace sbolab {

using Complex = std::complex<double>;

struct SpherePoint {
  Eigen::VectorXd u;  // unit vector in R^{n+1}

  /// Validates |u| = 1 to 1e-12.
  static SpherePoint from(Eigen::VectorXd u);
  int n() const { return static_cast<int>(u.size()) - 1; }
};

/// A point of R^n or the point at infinity.
struct FlatPoint {
  std::optional<Eigen::VectorXd> x;

  static FlatPoint infinity() { return {}; }
  bool at_infinity() const { return !x.has_value(); }
};

class LorentzElement {
 public:
  /// Validates M^T Q M = Q (to 1e-12 relative to |M|^2) and M_00 >= 1.
  static LorentzElement from_matrix(Eigen::MatrixXd m);

  static LorentzElement identity(int n);
  /// Rotation by `angle` in the plane of ambient sphere coordinates i, j.
  static LorentzElement rotation(int n, int i, int j, double angle);
  /// Boost of rapidity t mixing time with ambient sphere coordinate `axis`.
  static LorentzElement boost(int n, int axis, double rapidity);
  /// Product of a few random plane rotations and boosts (|rapidity| <= max_rapidity).
  static LorentzElement random(int n, std::mt19937_64& rng, double max_rapidity = 1.0);

  int n() const { return static_cast<int>(m_.rows()) - 2; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  LorentzElement inverse() const;
  friend LorentzElement operator*(const LorentzElement& a, const LorentzElement& b);

 private:
  explicit LorentzElement(Eigen::MatrixXd m) : m_(std::move(m)) {}
  Eigen::MatrixXd m_;
};

struct MoebiusImage {
  SpherePoint point;  // L_h x
  double omega;       // conformal factor Omega(h, x) = 1 / (h v)_0
};

/// Throws DomainError if (h v)_0 <= 0.
MoebiusImage moebius_act(const LorentzElement& h, const SpherePoint& x);

/// |Omega(h1 h2, x) - Omega(h1, L_{h2} x) Omega(h2, x)|
double conformal_factor_cocycle_check(const LorentzElement& h1, const LorentzElement& h2,
                                      const SpherePoint& x);

FlatPoint stereographic(const SpherePoint& x);
SpherePoint inverse_stereographic(const FlatPoint& p, int n);

using SphereFunction = std::function<Complex(const SpherePoint&)>;
using FlatFunction = std::function<Complex(std::span<const double>)>;

/// F(x) = (1 + |x|^2)^{-lambda} f(inverse_stereographic(x)).
FlatFunction twisted_pullback(Complex lambda, SphereFunction f);
/// Inverse of twisted_pullback away from the south pole s = -1.
SphereFunction twisted_pushforward(Complex lambda, FlatFunction F);

/// (varpi_lambda(g) f)(x) = Omega(g^{-1}, x)^lambda f(L_{g^{-1}} x).
SphereFunction pi_compact(const LorentzElement& g, Complex lambda, SphereFunction f);

// --- flat-chart generators ----------------------------------------------

struct FlatIdentity {};
struct Translation {
  std::vector<double> shift;  // x -> x + shift
};
struct Dilation {
  double factor;  // x -> factor * x, factor > 0
};
struct FlatRotation {
  Eigen::MatrixXd matrix;  // x -> R x, R orthogonal
};
struct Reflection {};  // x_n -> -x_n
struct Inversion {};   // x -> x / |x|^2

using FlatMotion = std::variant<FlatIdentity, Translation, Dilation, FlatRotation, Reflection, Inversion>;

/// L_h x in the chart (infinity for the inversion at the origin).
FlatPoint flat_map(const FlatMotion& h, std::span<const double> x);
/// Conformal factor of the chart map at x.
double flat_conformal_factor(const FlatMotion& h, std::span<const double> x);

/// The Lorentz matrix inducing h on S^n through the stereographic chart (R^n, n = dim).
LorentzElement to_lorentz(const FlatMotion& h, int n);

/// The induced motion on the hyperplane x_n = 0, as a motion of R^{n-1}.
/// The motion must preserve the hyperplane (tangential translation, rotation
/// fixing e_n up to sign).
FlatMotion restrict_to_boundary(const FlatMotion& h, int n);

/// Flat picture of varpi_lambda(h^{-1}): F -> Omega(h, .)^lambda F(L_h .).
FlatFunction pi_flat(const FlatMotion& h, Complex lambda, FlatFunction F);

/// Same map on the Gaussian class. The inversion leaves the class and raises
/// RepresentationError.
GaussPolyFn pi_flat(const FlatMotion& h, Complex lambda, const GaussPolyFn& F);

/// Complex power of a positive real with the principal branch.
inline Complex positive_power(double base, Complex exponent) {
  return std::exp(exponent * std::log(base));
}

}  // namespace sbolab
