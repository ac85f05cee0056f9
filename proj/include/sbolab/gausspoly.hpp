#pragma once

// Finite sums  sum_k p_k(x) exp(-a_k |x - c_k|^2)  on R^n.
//
// The class is closed under differentiation, multiplication by polynomials,
// similarity pullbacks x -> s R x + b, restriction to a coordinate hyperplane
// and the Fourier transform F_c f(zeta) = int f(x) e^{<x,zeta>} dx. Decaying
// functions have every width a > 0; F_c maps them to growing Gaussians
// (a < 0), which the class also represents so that symbols can be evaluated
// and differentiated, but which cannot be transformed again.

#include <complex>
#include <span>
#include <vector>

#include "sbolab/polynomial.hpp"
#include "sbolab/weyl.hpp"

namespace sbolab {

struct GaussTerm {
  ComplexPoly poly;
  double width = 1.0;           // a, nonzero
  std::vector<double> center;   // c
};

/// Orthogonal matrix R (row-major, dim x dim), scale s > 0 and shift b of the
/// map x -> s R x + b.
struct Similarity {
  int dim = 0;
  double scale = 1.0;
  std::vector<double> rotation;
  std::vector<double> shift;

  static Similarity identity(int dim);
};

class GaussPolyFn {
 public:
  GaussPolyFn() = default;
  explicit GaussPolyFn(int dim) : dim_(dim) {}

  /// coeff * exp(-width |x - center|^2)
  static GaussPolyFn gaussian(int dim, double width, std::vector<double> center,
                              std::complex<double> coeff = 1.0);

  int dim() const { return dim_; }
  const std::vector<GaussTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff every width is positive (the function is Schwartz).
  bool decaying() const;

  void add_term(GaussTerm term);

  std::complex<double> operator()(std::span<const double> x) const;
  /// Holomorphic extension to complex points (|x-c|^2 is the bilinear square).
  std::complex<double> evaluate(std::span<const std::complex<double>> x) const;

  GaussPolyFn derivative(int j) const;
  GaussPolyFn multiply(const ComplexPoly& p) const;
  /// x -> g(x) = f(s R x + b)
  GaussPolyFn pullback(const Similarity& map) const;
  /// x' -> f(x', 0): restriction to the hyperplane x_n = 0.
  GaussPolyFn restrict_last() const;

  GaussPolyFn& operator+=(const GaussPolyFn& o);
  GaussPolyFn& operator*=(std::complex<double> s);
  friend GaussPolyFn operator+(GaussPolyFn a, const GaussPolyFn& b) { return a += b; }
  friend GaussPolyFn operator-(GaussPolyFn a, const GaussPolyFn& b) {
    GaussPolyFn nb = b;
    nb *= -1.0;
    return a += nb;
  }
  friend GaussPolyFn operator*(GaussPolyFn a, std::complex<double> s) { return a *= s; }
  friend GaussPolyFn operator*(std::complex<double> s, GaussPolyFn a) { return a *= s; }

  /// Upper bound on sup |f| estimated from coefficient magnitudes; used to
  /// scale absolute quadrature tolerances.
  double scale() const;

 private:
  int dim_ = 0;
  std::vector<GaussTerm> terms_;
};

/// F_c f (zeta) = int f(x) exp(<x, zeta>) dx in closed form. Requires f decaying.
/// The result is a growing Gaussian-polynomial function of zeta; F_R f(xi)
/// equals its holomorphic extension at zeta = -i xi.
GaussPolyFn fc_transform(const GaussPolyFn& f);

/// Symbolic application of a Weyl operator (coefficients converted to complex).
template <class C>
GaussPolyFn weyl_apply(const WeylOperator<C>& op, const GaussPolyFn& f) {
  if (op.nvars() != f.dim()) throw std::invalid_argument("weyl_apply: dimension mismatch");
  GaussPolyFn out(f.dim());
  for (const auto& [key, c] : op.terms()) {
    GaussPolyFn g = f;
    for (int j = 0; j < f.dim(); ++j) {
      for (int r = 0; r < key.d[static_cast<std::size_t>(j)]; ++r) g = g.derivative(j);
    }
    out += g.multiply(ComplexPoly::monomial(key.z, to_complex(c)));
  }
  return out;
}

}  // namespace sbolab
