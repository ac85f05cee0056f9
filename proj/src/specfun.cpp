#include "sbolab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sbolab/errors.hpp"

namespace sbolab {
namespace {

constexpr double kPi = std::numbers::pi;

// Polynomial evaluations with real data accumulate in quad precision, so that
// cancellation near real roots costs no accuracy in the rounded result.
using Quad = __float128;

bool is_real(Complex z) { return z.imag() == 0.0; }

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

// sin(pi x), cos(pi x) for real x, reduced to [-1/4, 1/4] before scaling by pi.
double sin_pi_real(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  double sign = 1.0;
  if (r < 0) {
    r = -r;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;  // sin(pi r) = sin(pi (1 - r))
  return sign * (r <= 0.25 ? std::sin(kPi * r) : std::cos(kPi * (0.5 - r)));
}

double cos_pi_real(double x) { return sin_pi_real(x + 0.5); }

// Lanczos sum for Re z >= 1/2, returned as log Gamma to avoid overflow.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

Complex sin_pi(Complex z) {
  double x = z.real(), y = z.imag();
  return {sin_pi_real(x) * std::cosh(kPi * y), cos_pi_real(x) * std::sinh(kPi * y)};
}

Complex gamma(Complex z) {
  require_finite(z, "gamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
  }
  if (z.imag() == 0.0) return std::exp(lanczos_log_gamma(z).real());
  return std::exp(lanczos_log_gamma(z));
}

Complex recip_gamma(Complex z) {
  require_finite(z, "recip_gamma");
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) return sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)) / kPi;
  if (z.imag() == 0.0) return std::exp(-lanczos_log_gamma(z).real());
  return std::exp(-lanczos_log_gamma(z));
}

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
  require_finite(a, "hyp2f1");
  require_finite(b, "hyp2f1");
  require_finite(c, "hyp2f1");
  require_finite(z, "hyp2f1");

  // Terminating numerator: the shorter one wins.
  long terms = -1;
  for (Complex p : {a, b}) {
    if (is_nonpositive_integer(p)) {
      long m = static_cast<long>(-p.real());
      if (terms < 0 || m < terms) terms = m;
    }
  }
  if (is_nonpositive_integer(c)) {
    long k = static_cast<long>(-c.real());
    if (terms < 0 || terms > k) {
      throw PoleError("hyp2f1: c is a non-positive integer not cancelled by a or b");
    }
  }

  if (terms >= 0 && is_real(a) && is_real(b) && is_real(c) && is_real(z)) {
    const Quad qa = a.real(), qb = b.real(), qc = c.real(), qz = z.real();
    Quad sum = 1, term = 1;
    for (long k = 0; k < terms; ++k) {
      const Quad kq = static_cast<Quad>(k);
      term *= (qa + kq) * (qb + kq) / ((qc + kq) * (kq + 1)) * qz;
      sum += term;
    }
    return static_cast<double>(sum);
  }
  if (terms >= 0) {
    Complex sum = 1.0, term = 1.0;
    for (long k = 0; k < terms; ++k) {
      double kd = static_cast<double>(k);
      term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
      sum += term;
    }
    return sum;
  }

  if (std::abs(z) >= 1.0) {
    throw ConvergenceError("hyp2f1: |z| >= 1 outside the polynomial case");
  }
  // Pfaff: the series in z/(z-1) has Re >= 1/3 there and does not alternate for real z.
  if (z.real() < -0.5) return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, z / (z - 1.0));
  constexpr long kMaxTerms = 1'000'000;
  Complex sum = 1.0, term = 1.0;
  int small_run = 0;
  for (long k = 0; k < kMaxTerms; ++k) {
    double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    if (term == 0.0 || std::abs(term) < 1e-17 * std::abs(sum)) {
      if (++small_run == 3 || term == 0.0) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge");
}

Complex gegenbauer(int degree, Complex mu, Complex t) {
  if (degree < 0) throw DomainError("gegenbauer: negative degree");
  if (degree == 0) return 1.0;
  if (is_real(mu) && is_real(t)) {
    const Quad m = mu.real(), x = t.real();
    Quad prev = 1, cur = 2 * m * x;
    for (int k = 1; k < degree; ++k) {
      const Quad kq = k;
      const Quad next = (2 * x * (kq + m) * cur - (kq + 2 * m - 1) * prev) / (kq + 1);
      prev = cur;
      cur = next;
    }
    return static_cast<double>(cur);
  }
  Complex prev = 1.0;
  Complex cur = 2.0 * mu * t;
  for (int k = 1; k < degree; ++k) {
    double kd = k;
    Complex next = (2.0 * t * (kd + mu) * cur - (kd + 2.0 * mu - 1.0) * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex InflatedGegenbauer::operator()(Complex v, Complex t) const {
  if (is_real(mu) && is_real(v) && is_real(t)) {
    const auto c = inflated_gegenbauer_coefficients<Quad>(l, static_cast<Quad>(mu.real()));
    const Quad qv = v.real(), t2 = static_cast<Quad>(t.real()) * static_cast<Quad>(t.real());
    Quad sum = 0, t2_power = 1;
    for (int j = l; j >= 0; --j) {
      sum += c[static_cast<std::size_t>(j)] * t2_power * [&] {
        Quad p = 1;
        for (int i = 0; i < j; ++i) p *= qv;
        return p;
      }();
      t2_power *= t2;
    }
    return static_cast<double>(sum);
  }
  // Horner in v with t^2 powers built from the top: sum_j c_j v^j (t^2)^{l-j}
  Complex t2 = t * t;
  Complex sum = 0.0;
  Complex t2_power = 1.0;
  std::vector<Complex> scaled(coeffs.size());
  for (int j = l; j >= 0; --j) {
    scaled[static_cast<std::size_t>(j)] = coeffs[static_cast<std::size_t>(j)] * t2_power;
    t2_power *= t2;
  }
  for (int j = l; j >= 0; --j) sum = sum * v + scaled[static_cast<std::size_t>(j)];
  return sum;
}

InflatedGegenbauer inflated_gegenbauer(int l, Complex mu) {
  if (l < 0) throw DomainError("inflated_gegenbauer: negative l");
  require_finite(mu, "inflated_gegenbauer");
  return {l, mu, inflated_gegenbauer_coefficients<Complex>(l, mu)};
}

}  // namespace sbolab
