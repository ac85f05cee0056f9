#pragma once

// Polynomial solutions of the F-system for S^n > S^{n-1}: O(n-1) x O(1)-invariant
// homogeneous polynomials F(zeta) of degree 2l annihilated by the fundamental
// operators nu d_j - (1/2) Delta o zeta_j (j < n), nu = lambda + 2l.

#include <optional>
#include <string>
#include <vector>

#include "sbolab/linalg.hpp"
#include "sbolab/polynomial.hpp"
#include "sbolab/rational.hpp"
#include "sbolab/weyl.hpp"

namespace sbolab {

using ExactWeyl = WeylOperator<Rational>;

/// nu d_j - (1/2) Delta o zeta_j in normal order; j is 1-based, 1 <= j <= n-1.
ExactWeyl fundamental_operator(const Rational& nu, int n, int j);

/// nu z_j + (1/2) |z|^2 d_j, whose algebraic Fourier transform is fundamental_operator.
ExactWeyl fundamental_operator_flat(const Rational& nu, int n, int j);

/// s^j u^{l-j}, j = 0..l, with s = zeta_1^2 + ... + zeta_{n-1}^2 and u = zeta_n^2.
std::vector<ExactPoly> invariant_basis(int n, int l);

struct SolSystem {
  int n = 2;
  int l = 0;
  Rational lambda;
  Rational nu;
  std::vector<ExactPoly> basis;
  std::vector<ExactWeyl> fundamentals;  // j = 1..n-1
  RationalMatrix constraints;           // rows: monomial coefficients, columns: basis

  static SolSystem build(int n, int l, const Rational& lambda);
  /// Same system with the operators obtained as weyl_hat of the flat pre-images.
  static SolSystem build_from_flat(int n, int l, const Rational& lambda);
};

/// Generators of the solution space as polynomials; the coefficient vectors
/// are in the exact nullspace of the constraint matrix.
std::vector<ExactPoly> solve_sol_space(int n, int l, const Rational& lambda);

/// Coefficient vectors (in the invariant basis) of the solution space.
std::vector<RationalVector> solve_sol_coefficients(const SolSystem& sys);

/// Exact check of all three conditions: invariance (rotation generators and
/// the reflections zeta_1 -> -zeta_1, zeta_n -> -zeta_n), the Euler equation
/// and annihilation by every fundamental operator.
bool verify_annihilation(const ExactPoly& F, const SolSystem& sys);

/// Coefficients of the Juhl symbol sum_j b_j s^j u^{l-j} at (n, lambda, nu = lambda + 2l).
RationalVector juhl_symbol_coefficients(int n, int l, const Rational& lambda);

/// If v = c w for a nonzero rational c, returns c.
std::optional<Rational> proportionality(const RationalVector& v, const RationalVector& w);

/// lambda treated as an indeterminate (l <= 3).
struct FormalSolution {
  int n = 2;
  int l = 0;
  std::size_t generic_dimension = 0;
  std::vector<UniPoly> generator;         // primitive, coefficients in Q[lambda]; when dimension 1
  UniPoly degeneracy;                     // monic gcd of the generator entries
  std::vector<Rational> candidate_lambdas;
  std::vector<Rational> degenerate_lambdas;  // candidates where the exact solve jumps in dimension
  bool roots_complete = false;
};

FormalSolution solve_sol_space_formal(int n, int l);

std::string to_string(const UniPoly& p, const std::string& var = "lambda");

}  // namespace sbolab
