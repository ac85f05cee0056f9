#include "sbolab/gausspoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sbolab/errors.hpp"

namespace sbolab {
namespace {

using Complex = std::complex<double>;

double squared_distance(std::span<const double> x, const std::vector<double>& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += (x[i] - c[i]) * (x[i] - c[i]);
  return s;
}

}  // namespace

Similarity Similarity::identity(int dim) {
  Similarity s;
  s.dim = dim;
  s.rotation.assign(static_cast<std::size_t>(dim * dim), 0.0);
  for (int i = 0; i < dim; ++i) s.rotation[static_cast<std::size_t>(i * dim + i)] = 1.0;
  s.shift.assign(static_cast<std::size_t>(dim), 0.0);
  return s;
}

GaussPolyFn GaussPolyFn::gaussian(int dim, double width, std::vector<double> center, Complex coeff) {
  GaussPolyFn f(dim);
  f.add_term({ComplexPoly::constant(dim, coeff), width, std::move(center)});
  return f;
}

bool GaussPolyFn::decaying() const {
  for (const auto& t : terms_) {
    if (!(t.width > 0.0)) return false;
  }
  return true;
}

void GaussPolyFn::add_term(GaussTerm term) {
  if (term.poly.nvars() != dim_ || static_cast<int>(term.center.size()) != dim_) {
    throw std::invalid_argument("GaussPolyFn: term dimension mismatch");
  }
  if (term.width == 0.0 || !std::isfinite(term.width)) {
    throw DomainError("GaussPolyFn: Gaussian width must be finite and nonzero");
  }
  if (term.poly.is_zero()) return;
  for (auto& t : terms_) {
    if (t.width == term.width && t.center == term.center) {
      t.poly += term.poly;
      if (t.poly.is_zero()) {
        t = std::move(terms_.back());
        terms_.pop_back();
      }
      return;
    }
  }
  terms_.push_back(std::move(term));
}

Complex GaussPolyFn::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("GaussPolyFn: dimension mismatch");
  std::vector<Complex> xc(x.begin(), x.end());
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    sum += t.poly.evaluate<Complex>(xc) * std::exp(-t.width * squared_distance(x, t.center));
  }
  return sum;
}

Complex GaussPolyFn::evaluate(std::span<const Complex> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("GaussPolyFn: dimension mismatch");
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    Complex d2 = 0.0;
    for (std::size_t i = 0; i < t.center.size(); ++i) d2 += (x[i] - t.center[i]) * (x[i] - t.center[i]);
    sum += t.poly.evaluate<Complex>(x) * std::exp(-t.width * d2);
  }
  return sum;
}

GaussPolyFn GaussPolyFn::derivative(int j) const {
  if (j < 0 || j >= dim_) throw std::out_of_range("GaussPolyFn::derivative: bad index");
  GaussPolyFn out(dim_);
  for (const auto& t : terms_) {
    // d/dx_j [p e^{-a|x-c|^2}] = (d_j p - 2a (x_j - c_j) p) e^{-a|x-c|^2}
    ComplexPoly shifted = ComplexPoly::variable(dim_, j) -
                          ComplexPoly::constant(dim_, t.center[static_cast<std::size_t>(j)]);
    ComplexPoly p = t.poly.derivative(j) - Complex(2.0 * t.width) * (shifted * t.poly);
    out.add_term({std::move(p), t.width, t.center});
  }
  return out;
}

GaussPolyFn GaussPolyFn::multiply(const ComplexPoly& p) const {
  if (p.nvars() != dim_) throw std::invalid_argument("GaussPolyFn::multiply: dimension mismatch");
  GaussPolyFn out(dim_);
  for (const auto& t : terms_) out.add_term({t.poly * p, t.width, t.center});
  return out;
}

GaussPolyFn GaussPolyFn::pullback(const Similarity& map) const {
  if (map.dim != dim_) throw std::invalid_argument("GaussPolyFn::pullback: dimension mismatch");
  if (!(map.scale > 0.0)) throw DomainError("GaussPolyFn::pullback: scale must be positive");
  const auto n = static_cast<std::size_t>(dim_);
  std::vector<ComplexPoly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexPoly img = ComplexPoly::constant(dim_, map.shift[i]);
    for (std::size_t k = 0; k < n; ++k) {
      double a = map.scale * map.rotation[i * n + k];
      if (a != 0.0) img += Complex(a) * ComplexPoly::variable(dim_, static_cast<int>(k));
    }
    images.push_back(std::move(img));
  }
  GaussPolyFn out(dim_);
  for (const auto& t : terms_) {
    // |sRx + b - c|^2 = s^2 |x - R^T (c - b) / s|^2
    std::vector<double> center(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) center[k] += map.rotation[i * n + k] * (t.center[i] - map.shift[i]);
      center[k] /= map.scale;
    }
    out.add_term({t.poly.substitute(images), t.width * map.scale * map.scale, std::move(center)});
  }
  return out;
}

GaussPolyFn GaussPolyFn::restrict_last() const {
  if (dim_ < 1) throw std::invalid_argument("GaussPolyFn::restrict_last: zero-dimensional");
  GaussPolyFn out(dim_ - 1);
  for (const auto& t : terms_) {
    double cn = t.center.back();
    ComplexPoly p = t.poly.restrict_variable_to_zero(dim_ - 1) * Complex(std::exp(-t.width * cn * cn));
    std::vector<double> center(t.center.begin(), t.center.end() - 1);
    out.add_term({std::move(p), t.width, std::move(center)});
  }
  return out;
}

GaussPolyFn& GaussPolyFn::operator+=(const GaussPolyFn& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("GaussPolyFn: dimension mismatch");
  for (const auto& t : o.terms_) add_term(t);
  return *this;
}

GaussPolyFn& GaussPolyFn::operator*=(Complex s) {
  if (s == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.poly *= s;
  return *this;
}

double GaussPolyFn::scale() const {
  double total = 0.0;
  for (const auto& t : terms_) {
    double radius = 1.0 / std::sqrt(std::abs(t.width));
    for (double c : t.center) radius += std::abs(c);
    for (const auto& [e, c] : t.poly.terms()) {
      total += std::abs(c) * std::pow(radius, detail::exponent_sum(e));
    }
  }
  return total;
}

GaussPolyFn fc_transform(const GaussPolyFn& f) {
  if (!f.decaying()) {
    throw RepresentationError("fc_transform: input has a non-decaying Gaussian term");
  }
  const int n = f.dim();
  const auto un = static_cast<std::size_t>(n);
  GaussPolyFn out(n);
  for (const auto& t : f.terms()) {
    const double a = t.width;
    // x_i = c_i + zeta_i / (2a) + w_i, in variables (zeta_1..zeta_n, w_1..w_n)
    std::vector<ComplexPoly> images;
    for (int i = 0; i < n; ++i) {
      images.push_back(ComplexPoly::constant(2 * n, t.center[static_cast<std::size_t>(i)]) +
                       Complex(0.5 / a) * ComplexPoly::variable(2 * n, i) +
                       ComplexPoly::variable(2 * n, n + i));
    }
    ComplexPoly expanded = t.poly.substitute(images);
    // Gaussian moments of w ~ exp(-a|w|^2): E[w^{2k}] = (2k-1)!! / (2a)^k
    ComplexPoly q(n);
    for (const auto& [e, c] : expanded.terms()) {
      double moment = 1.0;
      bool odd = false;
      for (std::size_t i = 0; i < un && !odd; ++i) {
        int k = e[un + i];
        if (k % 2 != 0) {
          odd = true;
          break;
        }
        for (int r = k - 1; r > 0; r -= 2) moment *= r;
        moment /= std::pow(2.0 * a, k / 2);
      }
      if (odd) continue;
      q.add_term(Exponents(e.begin(), e.begin() + n), c * moment);
    }
    double c2 = 0.0;
    for (double c : t.center) c2 += c * c;
    q *= Complex(std::pow(std::numbers::pi / a, 0.5 * n) * std::exp(-a * c2));
    std::vector<double> center(un);
    for (std::size_t i = 0; i < un; ++i) center[i] = -2.0 * a * t.center[i];
    out.add_term({std::move(q), -0.25 / a, std::move(center)});
  }
  return out;
}

}  // namespace sbolab
