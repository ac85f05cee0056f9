#include "sbolab/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sbolab/errors.hpp"

namespace sbolab {
namespace {

namespace bq = boost::math::quadrature;

bq::tanh_sinh<double>& tanh_sinh_rule() {
  thread_local bq::tanh_sinh<double> rule;
  return rule;
}

bq::exp_sinh<double>& exp_sinh_rule() {
  thread_local bq::exp_sinh<double> rule;
  return rule;
}

bq::sinh_sinh<double>& sinh_sinh_rule() {
  thread_local bq::sinh_sinh<double> rule;
  return rule;
}

struct BudgetScope {
  EvaluationBudget local{10'000'000};
  EvaluationBudget* active;
  explicit BudgetScope(EvaluationBudget* b) : active(b ? b : &local) {}
};

void check_error(double err, double l1, const QuadratureOptions& opts, const char* what) {
  if (!std::isfinite(err) || err > std::max(opts.abs_tol, opts.rel_tol * l1)) {
    throw QuadratureError(std::string(what) + ": tolerance not met (error estimate " + std::to_string(err) + ")");
  }
}

}  // namespace

void EvaluationBudget::charge(std::uint64_t count) {
  used_ += count;
  if (used_ > limit_) {
    throw BudgetExceeded("quadrature budget of " + std::to_string(limit_) + " evaluations exhausted");
  }
}

Complex integrate(const RealIntegrand& f, double a, double b, const QuadratureOptions& opts) {
  BudgetScope scope(opts.budget);
  auto g = [&](double x) -> Complex {
    scope.active->charge();
    Complex v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return Complex(0.0);
    return v;
  };
  const double inf = std::numeric_limits<double>::infinity();
  double err = 0.0, l1 = 0.0;
  Complex value;
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, opts);
  if (std::isfinite(a) && std::isfinite(b)) {
    value = tanh_sinh_rule().integrate(g, a, b, opts.rel_tol, &err, &l1);
  } else if (std::isfinite(a) && b == inf) {
    value = exp_sinh_rule().integrate(g, a, b, opts.rel_tol, &err, &l1);
  } else if (a == -inf && std::isfinite(b)) {
    value = exp_sinh_rule().integrate([&](double t) { return g(-t); }, -b, inf, opts.rel_tol, &err, &l1);
  } else {
    value = sinh_sinh_rule().integrate(g, opts.rel_tol, &err, &l1);
  }
  check_error(err, l1, opts, "integrate");
  return value;
}

double integrate_cos(const std::function<double(double)>& g, double omega, const QuadratureOptions& opts) {
  if (!(omega > 0.0)) throw DomainError("integrate_cos: frequency must be positive");
  BudgetScope scope(opts.budget);
  thread_local bq::ooura_fourier_cos<double> rule(1e-11);
  auto [value, rel_err] = rule.integrate(
      [&](double x) {
        scope.active->charge();
        return g(x);
      },
      omega);
  if (!std::isfinite(value) || std::abs(value) * rel_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
    throw QuadratureError("integrate_cos: tolerance not met");
  }
  return value;
}

Complex integrate_periodic(const RealIntegrand& f, const QuadratureOptions& opts) {
  BudgetScope scope(opts.budget);
  auto trapezoid = [&](int m, int stride_from, Complex previous_sum) {
    // Sum of the new nodes only when refining.
    Complex sum = previous_sum;
    for (int k = stride_from; k < m; k += (stride_from == 0 ? 1 : 2)) {
      scope.active->charge();
      sum += f(2.0 * std::numbers::pi * k / m);
    }
    return sum;
  };
  int m = 16;
  Complex sum = trapezoid(m, 0, 0.0);
  Complex value = sum * (2.0 * std::numbers::pi / m);
  for (int level = 0; level < 12; ++level) {
    m *= 2;
    sum = trapezoid(m, 1, sum);
    Complex refined = sum * (2.0 * std::numbers::pi / m);
    double diff = std::abs(refined - value);
    value = refined;
    if (diff <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) return value;
  }
  throw QuadratureError("integrate_periodic: no convergence");
}

double fourier_even_kernel_2d(double alpha, double beta, double xi1, double xi2, const QuadratureOptions& opts) {
  if (xi1 == 0.0) throw DomainError("fourier_even_kernel_2d: xi_1 must be nonzero");
  if (!(beta < -0.5) || !(alpha + 2.0 * beta > -2.0)) {
    throw RangeError("fourier_even_kernel_2d: kernel outside the supported range");
  }
  const double w1 = std::abs(xi1);
  QuadratureOptions inner_opts = opts;
  inner_opts.rel_tol = std::min(opts.rel_tol, 1e-10);
  // int_0^inf (1 + w^2)^beta cos(omega w) dw; its value at omega = 0 is
  // B(1/2, -beta - 1/2) / 2.
  const double at_zero =
      0.5 * std::sqrt(std::numbers::pi) * std::tgamma(-beta - 0.5) / std::tgamma(-beta);
  // The profile decays like omega^{-beta-1/2} e^{-omega}; beyond omega = 40 it
  // is below double precision relative to its value at the origin.
  auto profile = [&](double omega) {
    if (omega == 0.0) return at_zero;
    if (omega > 40.0) return 0.0;
    return integrate_cos([&](double w) { return std::pow(1.0 + w * w, beta); }, omega, inner_opts);
  };
  // x_1 = b w rescales the inner integral to b^{1 + 2 beta} profile(xi_1 b).
  auto outer = [&](double b) -> Complex {
    if (b == 0.0) return 0.0;
    return std::pow(b, alpha + 2.0 * beta + 1.0) * profile(w1 * b) * std::cos(xi2 * b);
  };
  return 4.0 * integrate(outer, 0.0, std::numeric_limits<double>::infinity(), opts).real();
}

}  // namespace sbolab
