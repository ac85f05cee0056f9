#pragma once

// Exact linear algebra over Q and over Q[t] (fraction-free elimination).

#include <cstddef>
#include <optional>
#include <vector>

#include "sbolab/polynomial.hpp"
#include "sbolab/rational.hpp"

namespace sbolab {

template <class T>
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, const T& fill) : rows(r), cols(c), data(r * c, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = std::vector<Rational>;

/// Basis of {v : M v = 0} via fraction-free (Bareiss) elimination on the
/// row-scaled integer matrix. Every returned vector is checked exactly.
std::vector<RationalVector> exact_nullspace(const RationalMatrix& m);

std::size_t exact_rank(const RationalMatrix& m);

RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

// --- univariate polynomials over Q (ExactPoly with one variable) ---------

using UniPoly = ExactPoly;

UniPoly uni_constant(const Rational& c);
UniPoly uni_linear(const Rational& slope, const Rational& intercept);
int uni_degree(const UniPoly& p);
Rational uni_leading(const UniPoly& p);
Rational uni_eval(const UniPoly& p, const Rational& t);

/// Euclidean division a = q b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero iff both inputs are zero).
UniPoly uni_gcd(UniPoly a, UniPoly b);
/// All rational roots by the rational root test; nullopt when the candidate
/// divisor sets are too large to enumerate.
std::optional<std::vector<Rational>> uni_rational_roots(const UniPoly& p);

using UniPolyMatrix = DenseMatrix<UniPoly>;

struct FormalEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // original row indices
  std::vector<std::size_t> pivot_cols;
};

/// Generic rank over Q(t) by Bareiss elimination on Q[t] entries.
FormalEchelon formal_echelon(const UniPolyMatrix& m);

/// Determinant of a square matrix over Q[t].
UniPoly formal_determinant(const UniPolyMatrix& m);

}  // namespace sbolab
