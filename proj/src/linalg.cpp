#include "sbolab/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sbolab/errors.hpp"

namespace sbolab {
namespace {

struct IntegerEchelon {
  DenseMatrix<mpz_class> a;
  std::vector<std::size_t> pivot_cols;
};

IntegerEchelon integer_echelon(const RationalMatrix& m) {
  IntegerEchelon out{DenseMatrix<mpz_class>(m.rows, m.cols, mpz_class(0)), {}};
  auto& a = out.a;
  for (std::size_t i = 0; i < m.rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols; ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && a(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(a(p, j), a(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_class v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols) throw std::invalid_argument("multiply: dimension mismatch");
  RationalVector out(m.rows, Rational(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

std::size_t exact_rank(const RationalMatrix& m) { return integer_echelon(m).pivot_cols.size(); }

std::vector<RationalVector> exact_nullspace(const RationalMatrix& m) {
  IntegerEchelon e = integer_echelon(m);
  const std::size_t rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = rank; i-- > 0;) {
      std::size_t pc = e.pivot_cols[i];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < m.cols; ++j) {
        if (sgn(v[j]) != 0 && e.a(i, j) != 0) s += Rational(e.a(i, j)) * v[j];
      }
      v[pc] = -s / Rational(e.a(i, pc));
    }
    for (const Rational& x : multiply(m, v)) {
      if (sgn(x) != 0) throw std::logic_error("exact_nullspace: verification failed");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- univariate ----------------------------------------------------------

UniPoly uni_constant(const Rational& c) { return UniPoly::constant(1, c); }

UniPoly uni_linear(const Rational& slope, const Rational& intercept) {
  return UniPoly::variable(1, 0) * slope + uni_constant(intercept);
}

int uni_degree(const UniPoly& p) { return p.total_degree(); }

Rational uni_leading(const UniPoly& p) {
  if (p.is_zero()) return 0;
  return p.terms().rbegin()->second;
}

Rational uni_eval(const UniPoly& p, const Rational& t) {
  std::vector<Rational> x{t};
  return p.evaluate<Rational>(x);
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("uni_divmod: division by zero polynomial");
  UniPoly q(1), r = a;
  const int db = uni_degree(b);
  const Rational lb = uni_leading(b);
  while (!r.is_zero() && uni_degree(r) >= db) {
    int shift = uni_degree(r) - db;
    Rational c = uni_leading(r) / lb;
    UniPoly t = UniPoly::monomial({shift}, c);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = uni_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = uni_leading(a);
  return a * Rational(1 / lead);
}

std::optional<std::vector<Rational>> uni_rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) return std::nullopt;
  // Integer coefficients, lowest to highest degree.
  const int d = uni_degree(p);
  mpz_class l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> coeff(static_cast<std::size_t>(d) + 1, mpz_class(0));
  for (const auto& [e, c] : p.terms()) coeff[static_cast<std::size_t>(e[0])] = c.get_num() * (l / c.get_den());
  std::size_t low = 0;
  while (coeff[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low == static_cast<std::size_t>(d)) return roots;

  auto divisors = [](mpz_class v) -> std::optional<std::vector<mpz_class>> {
    v = abs(v);
    if (v > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> out;
    for (mpz_class k = 1; k * k <= v; ++k) {
      if (v % k == 0) {
        out.push_back(k);
        if (k * k != v) out.push_back(v / k);
      }
    }
    return out;
  };
  auto ps = divisors(coeff[low]);
  auto qs = divisors(coeff.back());
  if (!ps || !qs) return std::nullopt;
  std::set<Rational> found;
  for (const auto& num : *ps) {
    for (const auto& den : *qs) {
      for (int sign : {1, -1}) {
        Rational cand(num * sign, den);
        cand.canonicalize();
        if (sgn(uni_eval(p, cand)) == 0) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

UniPoly uni_zero() { return UniPoly(1); }

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = uni_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("formal Bareiss: inexact division");
  return q;
}

}  // namespace

FormalEchelon formal_echelon(const UniPolyMatrix& m) {
  UniPolyMatrix a = m;
  std::vector<std::size_t> order(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) order[i] = i;
  FormalEchelon out;
  UniPoly prev = uni_constant(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && a(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(a(p, j), a(r, j));
      std::swap(order[p], order[r]);
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        a(i, j) = exact_quotient(a(r, c) * a(i, j) - a(i, c) * a(r, j), prev);
      }
      a(i, c) = uni_zero();
    }
    prev = a(r, c);
    out.pivot_rows.push_back(order[r]);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

UniPoly formal_determinant(const UniPolyMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("formal_determinant: non-square matrix");
  if (m.rows == 0) return uni_constant(1);
  UniPolyMatrix a = m;
  UniPoly prev = uni_constant(1);
  int sign = 1;
  const std::size_t n = m.rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return uni_zero();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = uni_zero();
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace sbolab
