#pragma once

// Symmetry breaking operators C^inf(R^n) -> C^inf(R^{n-1}) for the pair
// S^n > S^{n-1}: the Juhl differential operators, the normalized integral
// operators A_{lambda,nu}, the Riesz (Knapp-Stein) operators of R^n, their
// Fourier symbols and the identities between them.

#include <complex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sbolab/confgeom.hpp"
#include "sbolab/gausspoly.hpp"
#include "sbolab/quadrature.hpp"
#include "sbolab/rational.hpp"
#include "sbolab/specfun.hpp"

namespace sbolab {

struct ParamPair {
  Complex lambda;
  Complex nu;
  int n = 2;

  /// Re(lambda - nu) > 0 and Re(lambda + nu) > n - 1.
  bool in_convergent_range() const;
  /// nu - lambda in {0, 2, 4, ...}.
  bool is_residue_point() const;
  /// lambda, nu integers with lambda <= nu <= 0 and lambda - nu even.
  bool in_l_even() const;
  /// l with nu - lambda = 2l, if any.
  std::optional<int> residue_l() const;
};

/// b_j = 2^{2l-2j} prod_{i=1}^{l-j} ((lambda+nu-n-1)/2 + i) / (j! (2l-2j)!).
template <class T>
std::vector<T> juhl_coefficients(int n, int l, const T& lambda, const T& nu) {
  std::vector<T> out;
  const T base = (lambda + nu - T(n + 1)) / T(2);
  for (int j = 0; j <= l; ++j) {
    long num = 1L << (2 * (l - j));
    long den = 1;
    for (int k = 2; k <= j; ++k) den *= k;
    for (int k = 2; k <= 2 * (l - j); ++k) den *= k;
    T c = T(num) / T(den);
    for (int i = 1; i <= l - j; ++i) c = c * (base + T(i));
    out.push_back(c);
  }
  return out;
}

/// sum_j b_j Delta'^j d_n^{2l-2j} followed by restriction to x_n = 0.
struct JuhlOperator {
  ParamPair params;
  int l = 0;
  std::vector<Complex> coeffs;  // b_j
};

struct ExactJuhlOperator {
  Rational lambda;
  Rational nu;
  int n = 2;
  int l = 0;
  std::vector<Rational> coeffs;
};

/// Throws ParityError unless nu - lambda = 2l with l a non-negative integer.
JuhlOperator juhl_build(const ParamPair& params);
ExactJuhlOperator juhl_build(int n, const Rational& lambda, const Rational& nu);

/// The operator before restriction, as a Weyl operator on R^n.
WeylOperator<Complex> juhl_weyl(const JuhlOperator& op);

GaussPolyFn juhl_apply(const JuhlOperator& op, const GaussPolyFn& F);

/// Same operator on an evaluable function, derivatives by Richardson-extrapolated
/// eighth-order finite differences with step h.
Complex juhl_apply(const JuhlOperator& op, const FlatFunction& F, std::span<const double> x_boundary, double h);

/// recip_gamma((lambda+nu-n+1)/2) recip_gamma((lambda-nu)/2) |x_n|^{lambda+nu-n} (|x'|^2+x_n^2)^{-nu}.
/// Throws DomainError at x_n = 0.
Complex akernel_eval(const ParamPair& p, std::span<const double> x_boundary, double x_n);

/// (A F)(x') = int F(y', y_n) k(x' - y', -y_n) dy' dy_n in the convergent range
/// (n = 2 or 3). Throws RangeError outside it and QuadratureError / BudgetExceeded
/// when the tolerance 1e-6 * scale(F) cannot be met.
Complex aop_apply(const ParamPair& p, const GaussPolyFn& F, std::span<const double> x_boundary,
                  const QuadratureOptions& opts = {});

/// Closed-form A-symbol at real (zeta', zeta_n) with |zeta'| > |zeta_n|.
Complex asymbol_eval(const ParamPair& p, std::span<const double> zeta_boundary, double zeta_n);

/// The A-symbol continued to zeta = -i xi: the Euclidean Fourier transform of
/// the kernel at (xi', xi_n), |xi'| > |xi_n|.
Complex asymbol_fr(const ParamPair& p, std::span<const double> xi_boundary, double xi_n);

/// inflated_gegenbauer(l, lambda - (n-1)/2) at (-|zeta'|^2, zeta_n). Throws ParityError.
Complex csymbol_eval(const ParamPair& p, std::span<const double> zeta_boundary, double zeta_n);

/// e^{(pi i/2)(2 lambda - n)} pi^{n/2} 2^{n - 2 lambda} recip_gamma(lambda) |zeta|^{2 lambda - n}.
Complex ks_symbol_eval(Complex lambda, int n, std::span<const double> zeta);

/// The KS symbol continued to zeta = -i xi.
Complex ks_symbol_fr(Complex lambda, int n, std::span<const double> xi);

/// recip_gamma(lambda + n/2) int |x - y|^{2 lambda} F(y) dy (n = 2 or 3).
/// Its Euclidean Fourier multiplier is ks_symbol_fr(-lambda, n, .).
Complex riesz_apply(Complex lambda, int n, const GaussPolyFn& F, std::span<const double> x,
                    const QuadratureOptions& opts = {});

/// (2 pi)^{-n} int ks_symbol_fr(-lambda, n, xi) (F_R F)(xi) e^{i <x, xi>} dxi
/// for n = 2 and -1 < Re lambda < 0: the Riesz operator by the Fourier route.
Complex riesz_via_symbol(Complex lambda, const GaussPolyFn& F, std::span<const double> x,
                         const QuadratureOptions& opts = {});

/// (-1)^l l! pi^{(n-1)/2} 2^{-2l} recip_gamma(nu).
Complex residue_constant(int l, int n, Complex nu);

// --- identity checks on symbol grids -------------------------------------

struct SymbolPoint {
  std::vector<double> boundary;  // zeta'
  double normal = 0.0;           // zeta_n
};

/// Random points with |zeta'| in [0.5, 2] and |zeta_n| <= max_ratio |zeta'|.
std::vector<SymbolPoint> cone_grid(int n, std::size_t count, std::mt19937_64& rng, double max_ratio = 0.9);

/// Relative error, switching to absolute error when |reference| < 1e-10.
struct Discrepancy {
  double error = 0.0;
  bool absolute = false;
};
Discrepancy discrepancy(Complex value, Complex reference);

struct CheckResult {
  double max_relative = 0.0;
  double max_absolute = 0.0;
  std::size_t samples = 0;

  void add(const Discrepancy& d);
  /// Relative errors within rel_tol and absolute ones within abs_tol.
  bool passes(double rel_tol, double abs_tol = 1e-12) const;
  double max_error() const { return std::max(max_relative, max_absolute); }
};

/// asymbol(lambda, lambda + 2l) against residue_constant * csymbol.
CheckResult residue_check(int l, int n, Complex lambda, std::span<const SymbolPoint> grid);

enum class FunctionalEquation { TA, AT };

/// TA: ks_{n-1}(n-1-nu, zeta') asymbol(lambda, nu) = pi^{(n-1)/2}/Gamma(nu) asymbol(lambda, n-1-nu).
/// AT: asymbol(lambda, nu) ks_n(lambda, zeta) = pi^{n/2}/Gamma(lambda) asymbol(n-lambda, nu).
CheckResult functional_eq_check(FunctionalEquation kind, const ParamPair& p, std::span<const SymbolPoint> grid);

/// max |asymbol| over the grid (zero on L_even).
double l_even_max_symbol(const ParamPair& p, std::span<const SymbolPoint> grid);

/// max over grid of |F_c(juhl F)(zeta') - (1/2 pi) int csym(zeta', -i xi_n) F_c F(zeta', -i xi_n) dxi_n|
/// relative to 1 + |lhs|.
double juhl_fourier_check(const JuhlOperator& op, const GaussPolyFn& F, std::span<const std::vector<double>> points,
                          const QuadratureOptions& opts = {});

enum class OperatorKind { Juhl, AOp, Riesz };

struct CovarianceOptions {
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  double fd_step = 0.03;
  QuadratureOptions quadrature{};
};

/// Samples both sides of the intertwining relation of `kind` under the flat
/// generator h and returns max |lhs - rhs| / (1 + |lhs|):
///   juhl, aop:  T(pi_lambda(h) F) = pi_nu(h|_{x_n = 0}) (T F)   on R^{n-1}
///   riesz:      R(pi_{n+lambda}(h) F) = pi_{-lambda}(h) (R F)   on R^n
/// For riesz the pair's lambda is the Riesz exponent and nu is ignored.
double covariance_check(OperatorKind kind, const FlatMotion& h, const ParamPair& p, const GaussPolyFn& F,
                        const CovarianceOptions& opts = {});

}  // namespace sbolab
