#pragma once

// Scalar special functions: Gamma, 1/Gamma, Gauss 2F1, Gegenbauer polynomials
// and their two-variable "inflated" homogenization.

#include <complex>
#include <vector>

namespace sbolab {

using Complex = std::complex<double>;

/// True iff z is exactly one of 0, -1, -2, ...
bool is_nonpositive_integer(Complex z);

/// sin(pi z) with exact argument reduction of Re z.
Complex sin_pi(Complex z);

/// Gamma function (reflection + Lanczos, g = 7, 9 terms).
/// Throws PoleError at z in {0, -1, -2, ...}.
Complex gamma(Complex z);

/// 1/Gamma(z); entire, exactly 0 at the non-positive integers.
Complex recip_gamma(Complex z);

/// Gauss hypergeometric function by direct power series.
///
/// Terminates as a polynomial when a or b is a non-positive integer (any z).
/// Otherwise requires |z| < 1, applies the Pfaff transformation for
/// Re z < -1/2, and sums until |term|/|sum| < 1e-17 for three consecutive
/// terms. Throws PoleError when c is a pole that is not cancelled by a
/// shorter terminating numerator, ConvergenceError for |z| >= 1.
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

/// C_N^mu(t) by the three-term recurrence.
Complex gegenbauer(int degree, Complex mu, Complex t);

/// Coefficient c_j (j = 0..l) of v^j t^{2l-2j} in the inflated Gegenbauer
/// polynomial, i.e. (-1)^j 2^{2l-2j} / (j! (2l-2j)!) prod_{i=1}^{l-j} (mu+l+i-1).
/// T is any field type constructible from long (mpq_class, std::complex).
template <class T>
std::vector<T> inflated_gegenbauer_coefficients(int l, const T& mu) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(l) + 1);
  for (int j = 0; j <= l; ++j) {
    long num = (j % 2 == 0 ? 1L : -1L) << (2 * (l - j));
    long den = 1;
    for (int k = 2; k <= j; ++k) den *= k;
    for (int k = 2; k <= 2 * (l - j); ++k) den *= k;
    T c = T(num) / T(den);
    for (int i = 1; i <= l - j; ++i) c = c * (mu + T(l + i - 1));
    out.push_back(c);
  }
  return out;
}

/// The polynomial C~_{2l}^mu(v, t) = sum_j c_j v^j t^{2l-2j}.
struct InflatedGegenbauer {
  int l = 0;
  Complex mu;
  std::vector<Complex> coeffs;  // coeffs[j] multiplies v^j t^{2l-2j}

  Complex operator()(Complex v, Complex t) const;
};

InflatedGegenbauer inflated_gegenbauer(int l, Complex mu);

}  // namespace sbolab
