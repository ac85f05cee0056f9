#include "sbolab/finite_difference.hpp"

#include <cmath>
#include <stdexcept>

namespace sbolab {

std::vector<double> fornberg_weights(int order, std::span<const double> nodes) {
  const int n = static_cast<int>(nodes.size()) - 1;
  if (order < 0 || order > n) throw std::invalid_argument("fornberg_weights: not enough nodes");
  // c[i][k] holds the weight of node i for derivative k.
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n) + 1, std::vector<double>(order + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][order];
  return w;
}

CentralStencil central_stencil(int order, int accuracy) {
  if (order < 0) throw std::invalid_argument("central_stencil: negative order");
  if (order == 0) return {0, {1.0}};
  // 2p + 1 symmetric nodes give accuracy 2p + 2 - 2 ceil(m/2).
  const int p = (accuracy + 1) / 2 - 1 + (order + 1) / 2;
  std::vector<double> nodes;
  for (int k = -p; k <= p; ++k) nodes.push_back(static_cast<double>(k));
  return {p, fornberg_weights(order, nodes)};
}

namespace {

std::complex<double> tensor_stencil(const PointFunction& f, std::span<const double> x,
                                    const std::vector<CentralStencil>& st, std::span<const int> alpha, double h) {
  const std::size_t d = x.size();
  std::vector<double> y(x.begin(), x.end());
  std::vector<int> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = -st[i].radius;
  std::complex<double> sum = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      w *= st[i].weights[static_cast<std::size_t>(idx[i] + st[i].radius)];
      y[i] = x[i] + idx[i] * h;
    }
    if (w != 0.0) sum += w * f(y);
    std::size_t i = 0;
    while (i < d && idx[i] == st[i].radius) {
      idx[i] = -st[i].radius;
      ++i;
    }
    if (i == d) break;
    ++idx[i];
  }
  int total = 0;
  for (int a : alpha) total += a;
  return sum / std::pow(h, total);
}

}  // namespace

std::complex<double> mixed_partial(const PointFunction& f, std::span<const double> x, std::span<const int> alpha,
                                   double h) {
  if (alpha.size() != x.size()) throw std::invalid_argument("mixed_partial: dimension mismatch");
  std::vector<CentralStencil> st;
  for (int a : alpha) st.push_back(central_stencil(a, 8));
  std::complex<double> coarse = tensor_stencil(f, x, st, alpha, h);
  std::complex<double> fine = tensor_stencil(f, x, st, alpha, 0.5 * h);
  constexpr double r = 256.0;
  return (r * fine - coarse) / (r - 1.0);
}

}  // namespace sbolab
