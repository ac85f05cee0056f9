#pragma once

// Scalar identities shared by the specfun suite, the table command and the
// acceptance run. Each sample carries both sides and its inputs.

#include <complex>
#include <random>
#include <vector>

#include <json.hpp>

namespace sbolab::cli {

struct IdentitySample {
  nlohmann::json inputs;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double error = 0.0;  // relative, absolute when |rhs| < 1e-10
};

/// C_{2l}^mu(x) against (-1)^l Gamma(l+mu)/(l! Gamma(mu)) 2F1(-l, l+mu; 1/2; x^2).
/// inputs["condition"] is sum |terms| / |sum| of the terminating series.
IdentitySample gegenbauer_even_sample(int l, double mu, std::complex<double> x);

/// The inflated Gegenbauer sum against Gamma(mu)/Gamma(mu+l) v^l C_{2l}^mu(t/sqrt v).
IdentitySample inflated_two_line_sample(int l, double mu, double v, double t);

/// 2F1(a,b;c;z) against (1-z)^{c-a-b} 2F1(c-a,c-b;c;z) for real z < 1.
IdentitySample kummer_sample(double a, double b, double c, double z);

/// Gamma(z+1) against z Gamma(z).
IdentitySample gamma_shift_sample(std::complex<double> z);

/// recip_gamma(z) Gamma(z) against 1.
IdentitySample recip_gamma_sample(std::complex<double> z);

/// c(1-z)F(a,b;c;z) + (c-b) z F(a,b;c+1;z) against c F(a-1,b;c;z).
IdentitySample contiguous_sample(double a, double b, double c, double z);

/// Seeded sweeps with the parameter ranges used throughout the harness.
/// The Gegenbauer sweep takes x = i s, s in (-1, 1), so that x^2 lies in (-1, 0]
/// as in the symbol identities; the real sweep takes dyadic mu and x with x in (-1, 1).
std::vector<IdentitySample> gegenbauer_even_sweep(int l_max, std::size_t per_l, std::mt19937_64& rng);
std::vector<IdentitySample> gegenbauer_even_real_sweep(int l_max, std::size_t per_l, std::mt19937_64& rng);
std::vector<IdentitySample> inflated_two_line_sweep(int l_max, std::size_t per_l, std::mt19937_64& rng);
std::vector<IdentitySample> kummer_sweep(std::size_t count, std::mt19937_64& rng);

}  // namespace sbolab::cli
