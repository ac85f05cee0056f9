#pragma once

// Central finite differences of arbitrary order with Richardson extrapolation,
// for functions that leave the symbolic Gaussian class.

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace sbolab {

/// Fornberg weights w_k for d^m/dx^m at 0 from the nodes x_k.
std::vector<double> fornberg_weights(int order, std::span<const double> nodes);

/// Weights of the central stencil on -p..p (unit spacing) with accuracy order
/// at least `accuracy` for the derivative of order m.
struct CentralStencil {
  int radius = 0;
  std::vector<double> weights;  // index k + radius
};
CentralStencil central_stencil(int order, int accuracy = 8);

using PointFunction = std::function<std::complex<double>(std::span<const double>)>;

/// The mixed partial d^alpha f(x) from a tensor product of eighth-order central
/// stencils with spacing h, Richardson-extrapolated from h and h/2.
std::complex<double> mixed_partial(const PointFunction& f, std::span<const double> x,
                                   std::span<const int> alpha, double h);

}  // namespace sbolab
