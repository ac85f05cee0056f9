#pragma once

// Budgeted wrappers around the double-exponential quadratures of Boost.Math.

#include <complex>
#include <cstdint>
#include <functional>

namespace sbolab {

using Complex = std::complex<double>;

/// Shared counter of integrand evaluations; charge() throws BudgetExceeded
/// once the limit is passed.
class EvaluationBudget {
 public:
  explicit EvaluationBudget(std::uint64_t limit = 10'000'000) : limit_(limit) {}

  void charge(std::uint64_t count = 1);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  EvaluationBudget* budget = nullptr;  // null: a private budget of 1e7 per call
};

using RealIntegrand = std::function<Complex(double)>;

/// int_a^b f. Finite limits use tanh-sinh (endpoint singularities allowed),
/// [a, inf) uses exp-sinh and (-inf, inf) uses sinh-sinh. Throws
/// QuadratureError when the error estimate exceeds max(abs_tol, rel_tol * L1).
Complex integrate(const RealIntegrand& f, double a, double b, const QuadratureOptions& opts);

/// int_0^inf g(x) cos(omega x) dx for omega > 0 (Ooura-Mori double exponential).
double integrate_cos(const std::function<double(double)>& g, double omega, const QuadratureOptions& opts);

/// Periodic trapezoid rule for int_0^{2 pi} f, doubling the node count from 16
/// until successive values agree to the tolerance.
Complex integrate_periodic(const RealIntegrand& f, const QuadratureOptions& opts);

/// 4 int_0^inf int_0^inf x_2^alpha (x_1^2 + x_2^2)^beta cos(xi_1 x_1) cos(xi_2 x_2) dx_1 dx_2,
/// the Fourier transform at (xi_1, xi_2) of the even kernel |x_2|^alpha |x|^{2 beta}
/// on R^2. Requires xi_1 != 0, beta < -1/2 and alpha + 2 beta > -2.
double fourier_even_kernel_2d(double alpha, double beta, double xi1, double xi2, const QuadratureOptions& opts);

}  // namespace sbolab
