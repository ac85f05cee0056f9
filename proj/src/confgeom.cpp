#include "sbolab/confgeom.hpp"

#include <cmath>
#include <stdexcept>

#include "sbolab/errors.hpp"

namespace sbolab {
namespace {

Eigen::MatrixXd lorentz_form(int n) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n + 2, n + 2);
  q(0, 0) = -1.0;
  return q;
}

// (v0, v1, x) <-> (p, q, x) with p = v0 + v1, q = v0 - v1.
Eigen::MatrixXd to_light_cone(int n) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(n + 2, n + 2);
  c(0, 0) = 1.0;
  c(0, 1) = 1.0;
  c(1, 0) = 1.0;
  c(1, 1) = -1.0;
  return c;
}

Eigen::MatrixXd from_light_cone(int n) {
  Eigen::MatrixXd c = to_light_cone(n);
  c.topLeftCorner(2, 2) *= 0.5;
  return c;
}

Eigen::VectorXd as_vector(std::span<const double> x) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v[static_cast<Eigen::Index>(i)] = x[i];
  return v;
}

void check_orthogonal(const Eigen::MatrixXd& r, int dim, const char* what) {
  if (r.rows() != dim || r.cols() != dim) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  if ((r.transpose() * r - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError(std::string(what) + ": matrix is not orthogonal");
  }
}

// Scaled null vector ((1 + r^2)/2, (1 - r^2)/2, x) in light-cone coordinates: (1, r^2, x).
Eigen::VectorXd flat_null_vector(std::span<const double> x) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(x.size()) + 2);
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    v[static_cast<Eigen::Index>(i) + 2] = x[i];
    r2 += x[i] * x[i];
  }
  v[0] = 1.0;
  v[1] = r2;
  return v;
}

// The motion h as a linear map in (p, q, x) coordinates on R^{n+2}.
Eigen::MatrixXd light_cone_matrix(const FlatMotion& h, int n) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n + 2, n + 2);
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Translation>) {
          if (static_cast<int>(g.shift.size()) != n) throw std::invalid_argument("Translation: dimension mismatch");
          double b2 = 0.0;
          for (int i = 0; i < n; ++i) {
            double b = g.shift[static_cast<std::size_t>(i)];
            b2 += b * b;
            t(i + 2, 0) = b;
            t(1, i + 2) = 2.0 * b;
          }
          t(1, 0) = b2;
        } else if constexpr (std::is_same_v<T, Dilation>) {
          if (!(g.factor > 0.0)) throw DomainError("Dilation: factor must be positive");
          t(0, 0) = 1.0 / g.factor;
          t(1, 1) = g.factor;
        } else if constexpr (std::is_same_v<T, FlatRotation>) {
          check_orthogonal(g.matrix, n, "FlatRotation");
          t.bottomRightCorner(n, n) = g.matrix;
        } else if constexpr (std::is_same_v<T, Reflection>) {
          t(n + 1, n + 1) = -1.0;
        } else if constexpr (std::is_same_v<T, Inversion>) {
          t(0, 0) = 0.0;
          t(1, 1) = 0.0;
          t(0, 1) = 1.0;
          t(1, 0) = 1.0;
        }
      },
      h);
  return t;
}

std::optional<Similarity> as_similarity(const FlatMotion& h, int n) {
  Similarity s = Similarity::identity(n);
  const auto un = static_cast<std::size_t>(n);
  bool affine = std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Translation>) {
          if (g.shift.size() != un) throw std::invalid_argument("Translation: dimension mismatch");
          s.shift = g.shift;
        } else if constexpr (std::is_same_v<T, Dilation>) {
          if (!(g.factor > 0.0)) throw DomainError("Dilation: factor must be positive");
          s.scale = g.factor;
        } else if constexpr (std::is_same_v<T, FlatRotation>) {
          check_orthogonal(g.matrix, n, "FlatRotation");
          for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t k = 0; k < un; ++k) {
              s.rotation[i * un + k] = g.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
            }
          }
        } else if constexpr (std::is_same_v<T, Reflection>) {
          s.rotation[un * un - 1] = -1.0;
        } else if constexpr (std::is_same_v<T, Inversion>) {
          return false;
        }
        return true;
      },
      h);
  if (!affine) return std::nullopt;
  return s;
}

}  // namespace

SpherePoint SpherePoint::from(Eigen::VectorXd u) {
  if (u.size() < 2) throw std::invalid_argument("SpherePoint: need at least two coordinates");
  if (!u.allFinite() || std::abs(u.norm() - 1.0) > 1e-12) throw DomainError("SpherePoint: not a unit vector");
  return SpherePoint{std::move(u)};
}

LorentzElement LorentzElement::from_matrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols() || m.rows() < 3) throw std::invalid_argument("LorentzElement: bad matrix shape");
  if (!m.allFinite()) throw DomainError("LorentzElement: non-finite entries");
  const int n = static_cast<int>(m.rows()) - 2;
  const Eigen::MatrixXd q = lorentz_form(n);
  const double norm = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m.transpose() * q * m - q).cwiseAbs().maxCoeff() > 1e-12 * norm * norm) {
    throw DomainError("LorentzElement: matrix does not preserve the quadratic form");
  }
  if (!(m(0, 0) > 0.0)) throw DomainError("LorentzElement: matrix reverses the light cone");
  return LorentzElement(std::move(m));
}

LorentzElement LorentzElement::identity(int n) { return LorentzElement(Eigen::MatrixXd::Identity(n + 2, n + 2)); }

LorentzElement LorentzElement::rotation(int n, int i, int j, double angle) {
  if (i < 0 || j < 0 || i > n || j > n || i == j) throw std::out_of_range("LorentzElement::rotation: bad plane");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 2, n + 2);
  const double c = std::cos(angle), s = std::sin(angle);
  m(i + 1, i + 1) = c;
  m(j + 1, j + 1) = c;
  m(i + 1, j + 1) = -s;
  m(j + 1, i + 1) = s;
  return LorentzElement(std::move(m));
}

LorentzElement LorentzElement::boost(int n, int axis, double rapidity) {
  if (axis < 0 || axis > n) throw std::out_of_range("LorentzElement::boost: bad axis");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 2, n + 2);
  const double c = std::cosh(rapidity), s = std::sinh(rapidity);
  m(0, 0) = c;
  m(axis + 1, axis + 1) = c;
  m(0, axis + 1) = s;
  m(axis + 1, 0) = s;
  return LorentzElement(std::move(m));
}

LorentzElement LorentzElement::random(int n, std::mt19937_64& rng, double max_rapidity) {
  std::uniform_int_distribution<int> axis(0, n);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_real_distribution<double> rap(-max_rapidity, max_rapidity);
  LorentzElement g = identity(n);
  for (int k = 0; k < 3; ++k) {
    int i = axis(rng), j = axis(rng);
    while (j == i) j = axis(rng);
    g = g * rotation(n, i, j, angle(rng));
    g = g * boost(n, axis(rng), rap(rng));
  }
  return g;
}

LorentzElement LorentzElement::inverse() const {
  const Eigen::MatrixXd q = lorentz_form(n());
  return LorentzElement(q * m_.transpose() * q);
}

LorentzElement operator*(const LorentzElement& a, const LorentzElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("LorentzElement: dimension mismatch");
  return LorentzElement(a.m_ * b.m_);
}

MoebiusImage moebius_act(const LorentzElement& h, const SpherePoint& x) {
  if (h.n() != x.n()) throw std::invalid_argument("moebius_act: dimension mismatch");
  Eigen::VectorXd v(x.u.size() + 1);
  v[0] = 1.0;
  v.tail(x.u.size()) = x.u;
  Eigen::VectorXd w = h.matrix() * v;
  if (!(w[0] > 0.0)) throw DomainError("moebius_act: image leaves the forward light cone");
  Eigen::VectorXd u = w.tail(x.u.size()) / w[0];
  u /= u.norm();
  return {SpherePoint{std::move(u)}, 1.0 / w[0]};
}

double conformal_factor_cocycle_check(const LorentzElement& h1, const LorentzElement& h2, const SpherePoint& x) {
  MoebiusImage a = moebius_act(h2, x);
  MoebiusImage b = moebius_act(h1, a.point);
  MoebiusImage c = moebius_act(h1 * h2, x);
  return std::abs(c.omega - b.omega * a.omega);
}

FlatPoint stereographic(const SpherePoint& x) {
  const double s = x.u[0];
  if (!(1.0 + s > 0.0)) return FlatPoint::infinity();
  return FlatPoint{Eigen::VectorXd(x.u.tail(x.u.size() - 1) / (1.0 + s))};
}

SpherePoint inverse_stereographic(const FlatPoint& p, int n) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n + 1);
  if (p.at_infinity()) {
    u[0] = -1.0;
    return SpherePoint{std::move(u)};
  }
  const Eigen::VectorXd& x = *p.x;
  if (x.size() != n) throw std::invalid_argument("inverse_stereographic: dimension mismatch");
  const double r2 = x.squaredNorm();
  u[0] = (1.0 - r2) / (1.0 + r2);
  u.tail(n) = 2.0 * x / (1.0 + r2);
  return SpherePoint{std::move(u)};
}

FlatFunction twisted_pullback(Complex lambda, SphereFunction f) {
  return [lambda, f = std::move(f)](std::span<const double> x) {
    Eigen::VectorXd v = as_vector(x);
    const double r2 = v.squaredNorm();
    SpherePoint u = inverse_stereographic(FlatPoint{v}, static_cast<int>(v.size()));
    return positive_power(1.0 + r2, -lambda) * f(u);
  };
}

SphereFunction twisted_pushforward(Complex lambda, FlatFunction F) {
  return [lambda, F = std::move(F)](const SpherePoint& u) {
    FlatPoint p = stereographic(u);
    if (p.at_infinity()) throw DomainError("twisted_pushforward: undefined at the point at infinity");
    const Eigen::VectorXd& x = *p.x;
    std::vector<double> xs(x.data(), x.data() + x.size());
    return positive_power(1.0 + x.squaredNorm(), lambda) * F(xs);
  };
}

SphereFunction pi_compact(const LorentzElement& g, Complex lambda, SphereFunction f) {
  return [ginv = g.inverse(), lambda, f = std::move(f)](const SpherePoint& x) {
    MoebiusImage im = moebius_act(ginv, x);
    return positive_power(im.omega, lambda) * f(im.point);
  };
}

LorentzElement to_lorentz(const FlatMotion& h, int n) {
  return LorentzElement::from_matrix(from_light_cone(n) * light_cone_matrix(h, n) * to_light_cone(n));
}

FlatPoint flat_map(const FlatMotion& h, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd w = light_cone_matrix(h, n) * flat_null_vector(x);
  if (w[0] == 0.0) return FlatPoint::infinity();
  return FlatPoint{Eigen::VectorXd(w.tail(n) / w[0])};
}

double flat_conformal_factor(const FlatMotion& h, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd w = light_cone_matrix(h, n) * flat_null_vector(x);
  if (!(w[0] > 0.0)) throw DomainError("flat_conformal_factor: x is mapped to infinity");
  return 1.0 / w[0];
}

FlatMotion restrict_to_boundary(const FlatMotion& h, int n) {
  return std::visit(
      [&](const auto& g) -> FlatMotion {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Translation>) {
          if (static_cast<int>(g.shift.size()) != n || g.shift.back() != 0.0) {
            throw DomainError("restrict_to_boundary: translation is not tangential");
          }
          return Translation{std::vector<double>(g.shift.begin(), g.shift.end() - 1)};
        } else if constexpr (std::is_same_v<T, FlatRotation>) {
          check_orthogonal(g.matrix, n, "FlatRotation");
          const Eigen::VectorXd en = g.matrix.col(n - 1);
          if (std::abs(std::abs(en[n - 1]) - 1.0) > 1e-12) {
            throw DomainError("restrict_to_boundary: rotation does not preserve the hyperplane");
          }
          return FlatRotation{Eigen::MatrixXd(g.matrix.topLeftCorner(n - 1, n - 1))};
        } else if constexpr (std::is_same_v<T, Reflection>) {
          return FlatIdentity{};
        } else {
          return g;
        }
      },
      h);
}

FlatFunction pi_flat(const FlatMotion& h, Complex lambda, FlatFunction F) {
  return [h, lambda, F = std::move(F)](std::span<const double> x) {
    FlatPoint y = flat_map(h, x);
    if (y.at_infinity()) throw DomainError("pi_flat: x is mapped to infinity");
    const Eigen::VectorXd& yv = *y.x;
    std::vector<double> ys(yv.data(), yv.data() + yv.size());
    return positive_power(flat_conformal_factor(h, x), lambda) * F(ys);
  };
}

GaussPolyFn pi_flat(const FlatMotion& h, Complex lambda, const GaussPolyFn& F) {
  std::optional<Similarity> s = as_similarity(h, F.dim());
  if (!s) throw RepresentationError("pi_flat: the inversion leaves the Gaussian class");
  GaussPolyFn out = F.pullback(*s);
  if (s->scale != 1.0) out *= positive_power(s->scale, lambda);
  return out;
}

}  // namespace sbolab
