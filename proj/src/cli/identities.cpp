#include "cli/identities.hpp"

#include <cmath>

#include "sbolab/sbops.hpp"
#include "sbolab/specfun.hpp"

namespace sbolab::cli {
namespace {

IdentitySample finish(nlohmann::json inputs, Complex lhs, Complex rhs) {
  return {std::move(inputs), lhs, rhs, discrepancy(lhs, rhs).error};
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double dyadic(double x, int bits) { return std::ldexp(std::round(std::ldexp(x, bits)), -bits); }

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

IdentitySample gegenbauer_even_sample(int l, double mu, Complex x) {
  const Complex lhs = gegenbauer(2 * l, mu, x);
  const Complex pre = ((l % 2 == 0) ? 1.0 : -1.0) * gamma(Complex(l + mu)) * recip_gamma(mu) / factorial(l);
  const Complex rhs = pre * hyp2f1(-l, l + mu, 0.5, x * x);
  double terms = 0.0, term = 1.0;
  for (int k = 0; k <= l; ++k) {
    terms += std::abs(term);
    term *= (k - l) * (l + mu + k) / ((0.5 + k) * (k + 1)) * std::norm(x);
  }
  IdentitySample s = finish({{"l", l}, {"mu", mu}, {"x", {{"re", x.real()}, {"im", x.imag()}}}}, lhs, rhs);
  s.inputs["condition"] = std::abs(pre) * terms / std::max(std::abs(rhs), 1e-300);
  return s;
}

IdentitySample inflated_two_line_sample(int l, double mu, double v, double t) {
  const Complex lhs = inflated_gegenbauer(l, mu)(v, t);
  const Complex rhs = gamma(Complex(mu)) * recip_gamma(mu + l) * std::pow(v, l) * gegenbauer(2 * l, mu, t / std::sqrt(v));
  return finish({{"l", l}, {"mu", mu}, {"v", v}, {"t", t}}, lhs, rhs);
}

IdentitySample kummer_sample(double a, double b, double c, double z) {
  const Complex lhs = hyp2f1(a, b, c, z);
  const Complex rhs = std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z);
  return finish({{"a", a}, {"b", b}, {"c", c}, {"z", z}}, lhs, rhs);
}

IdentitySample gamma_shift_sample(Complex z) {
  return finish({{"re", z.real()}, {"im", z.imag()}}, z * gamma(z), gamma(z + 1.0));
}

IdentitySample recip_gamma_sample(Complex z) {
  return finish({{"re", z.real()}, {"im", z.imag()}}, recip_gamma(z) * gamma(z), 1.0);
}

IdentitySample contiguous_sample(double a, double b, double c, double z) {
  const Complex lhs = c * (1.0 - z) * hyp2f1(a, b, c, z) + (c - b) * z * hyp2f1(a, b, c + 1.0, z);
  const Complex rhs = c * hyp2f1(a - 1.0, b, c, z);
  return finish({{"a", a}, {"b", b}, {"c", c}, {"z", z}}, lhs, rhs);
}

std::vector<IdentitySample> gegenbauer_even_sweep(int l_max, std::size_t per_l, std::mt19937_64& rng) {
  std::vector<IdentitySample> out;
  for (int l = 0; l <= l_max; ++l) {
    for (std::size_t k = 0; k < per_l; ++k) {
      const double mu = uniform(rng, 0.1, 3.0);
      const double s = uniform(rng, -1.0, 1.0);
      out.push_back(gegenbauer_even_sample(l, mu, Complex(0.0, s)));
    }
  }
  return out;
}

std::vector<IdentitySample> gegenbauer_even_real_sweep(int l_max, std::size_t per_l, std::mt19937_64& rng) {
  std::vector<IdentitySample> out;
  for (int l = 0; l <= l_max; ++l) {
    for (std::size_t k = 0; k < per_l; ++k) {
      // Dyadic samples keep x^2 and l + mu exact, so both sides see the same polynomial.
      const double mu = dyadic(uniform(rng, 0.1, 3.0), 40);
      const double x = dyadic(uniform(rng, -1.0, 1.0), 26);
      out.push_back(gegenbauer_even_sample(l, mu, x));
    }
  }
  return out;
}

std::vector<IdentitySample> inflated_two_line_sweep(int l_max, std::size_t per_l, std::mt19937_64& rng) {
  std::vector<IdentitySample> out;
  for (int l = 0; l <= l_max; ++l) {
    for (std::size_t k = 0; k < per_l; ++k) {
      const double mu = uniform(rng, 0.1, 3.0);
      const double v = uniform(rng, 0.2, 3.0);
      const double t = uniform(rng, -2.0, 2.0);
      out.push_back(inflated_two_line_sample(l, mu, v, t));
    }
  }
  return out;
}

std::vector<IdentitySample> kummer_sweep(std::size_t count, std::mt19937_64& rng) {
  std::vector<IdentitySample> out;
  for (std::size_t k = 0; k < count; ++k) {
    const double a = uniform(rng, -2.0, 2.0);
    const double b = uniform(rng, -2.0, 2.0);
    const double c = uniform(rng, 0.5, 3.0);
    const double z = uniform(rng, -0.9, 0.9);
    out.push_back(kummer_sample(a, b, c, z));
  }
  return out;
}

}  // namespace sbolab::cli
