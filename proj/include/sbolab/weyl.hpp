#pragma once

// Weyl algebra of polynomial-coefficient differential operators in normal
// order (all multiplication operators z^alpha left of all derivatives
// d^beta), and its algebraic Fourier transform d_j -> -zeta_j,
// z_j -> d/dzeta_j.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbolab/polynomial.hpp"

namespace sbolab {

struct WeylKey {
  Exponents z;  // multiplication part
  Exponents d;  // derivative part
  auto operator<=>(const WeylKey&) const = default;
};

template <class C>
class WeylOperator {
 public:
  using TermMap = std::map<WeylKey, C>;

  WeylOperator() = default;
  explicit WeylOperator(int nvars) : n_(nvars) {}

  static WeylOperator monomial(Exponents z, Exponents d, const C& c) {
    if (z.size() != d.size()) throw std::invalid_argument("WeylOperator: key length mismatch");
    WeylOperator w(static_cast<int>(z.size()));
    w.add_term(WeylKey{std::move(z), std::move(d)}, c);
    return w;
  }
  static WeylOperator scalar(int nvars, const C& c) {
    Exponents zero(static_cast<std::size_t>(nvars), 0);
    return monomial(zero, zero, c);
  }
  static WeylOperator identity(int nvars) { return scalar(nvars, C(1)); }
  /// Multiplication by z_j (0-based j).
  static WeylOperator z(int nvars, int j) {
    Exponents zero(static_cast<std::size_t>(nvars), 0), e = zero;
    e.at(static_cast<std::size_t>(j)) = 1;
    return monomial(e, zero, C(1));
  }
  /// d/dz_j (0-based j).
  static WeylOperator d(int nvars, int j) {
    Exponents zero(static_cast<std::size_t>(nvars), 0), e = zero;
    e.at(static_cast<std::size_t>(j)) = 1;
    return monomial(zero, e, C(1));
  }
  /// Laplacian sum_j d_j^2.
  static WeylOperator laplacian(int nvars) {
    WeylOperator out(nvars);
    Exponents zero(static_cast<std::size_t>(nvars), 0);
    for (int j = 0; j < nvars; ++j) {
      Exponents e = zero;
      e[static_cast<std::size_t>(j)] = 2;
      out.add_term(WeylKey{zero, e}, C(1));
    }
    return out;
  }
  /// Multiplication by a polynomial.
  static WeylOperator multiplication(const Polynomial<C>& p) {
    WeylOperator out(p.nvars());
    Exponents zero(static_cast<std::size_t>(p.nvars()), 0);
    for (const auto& [e, c] : p.terms()) out.add_term(WeylKey{e, zero}, c);
    return out;
  }

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total derivative order; -1 for the zero operator.
  int order() const {
    int o = -1;
    for (const auto& [k, c] : terms_) o = std::max(o, detail::exponent_sum(k.d));
    return o;
  }

  void add_term(const WeylKey& key, const C& c) {
    if (static_cast<int>(key.z.size()) != n_ || static_cast<int>(key.d.size()) != n_) {
      throw std::invalid_argument("WeylOperator: key length mismatch");
    }
    if (sbolab::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sbolab::is_zero(it->second)) terms_.erase(it);
    }
  }

  WeylOperator& operator+=(const WeylOperator& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  WeylOperator& operator-=(const WeylOperator& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, C(-c));
    return *this;
  }
  WeylOperator& operator*=(const C& s) {
    if (sbolab::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const C& s) { return a *= s; }
  friend WeylOperator operator*(const C& s, WeylOperator a) { return a *= s; }
  bool operator==(const WeylOperator& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// Normal-ordered product (*this) o (other), using
  /// d^b z^g = sum_k C(b,k) g!/(g-k)! z^{g-k} d^{b-k} in each variable.
  WeylOperator compose(const WeylOperator& other) const {
    check_same(other);
    WeylOperator out(n_);
    for (const auto& [k1, c1] : terms_) {
      for (const auto& [k2, c2] : other.terms_) {
        std::vector<int> shift(static_cast<std::size_t>(n_), 0);
        // Odometer over shift[i] in [0, min(d1_i, z2_i)].
        while (true) {
          long weight = 1;
          WeylKey key{Exponents(static_cast<std::size_t>(n_)), Exponents(static_cast<std::size_t>(n_))};
          for (std::size_t i = 0; i < shift.size(); ++i) {
            int b = k1.d[i], g = k2.z[i], k = shift[i];
            weight *= binomial(b, k) * falling(g, k);
            key.z[i] = k1.z[i] + g - k;
            key.d[i] = b - k + k2.d[i];
          }
          out.add_term(key, C(C(weight) * c1 * c2));
          std::size_t i = 0;
          for (; i < shift.size(); ++i) {
            if (shift[i] < std::min(k1.d[i], k2.z[i])) {
              ++shift[i];
              break;
            }
            shift[i] = 0;
          }
          if (i == shift.size()) break;
        }
      }
    }
    return out;
  }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return a.compose(b); }

  Polynomial<C> apply(const Polynomial<C>& p) const {
    if (p.nvars() != n_) throw std::invalid_argument("WeylOperator::apply: dimension mismatch");
    Polynomial<C> out(n_);
    for (const auto& [k, c] : terms_) {
      Polynomial<C> q = p;
      for (int j = 0; j < n_; ++j) {
        for (int r = 0; r < k.d[static_cast<std::size_t>(j)]; ++r) q = q.derivative(j);
      }
      if (q.is_zero()) continue;
      out += Polynomial<C>::monomial(k.z, c) * q;
    }
    return out;
  }

  std::string to_string(const std::string& zname = "z", const std::string& dname = "d") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + Polynomial<C>::constant(0, c).to_string() + ")";
      for (int i = 0; i < n_; ++i) {
        int e = k.z[static_cast<std::size_t>(i)];
        if (e > 0) out += "*" + zname + std::to_string(i + 1) + (e > 1 ? "^" + std::to_string(e) : "");
      }
      for (int i = 0; i < n_; ++i) {
        int e = k.d[static_cast<std::size_t>(i)];
        if (e > 0) out += "*" + dname + std::to_string(i + 1) + (e > 1 ? "^" + std::to_string(e) : "");
      }
    }
    return out;
  }

 private:
  static long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
  static long falling(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
  }
  void check_same(const WeylOperator& o) const {
    if (n_ != o.n_) throw std::invalid_argument("WeylOperator: variable count mismatch");
  }

  int n_ = 0;
  TermMap terms_;
};

template <class C>
WeylOperator<C> weyl_compose(const WeylOperator<C>& s, const WeylOperator<C>& t) {
  return s.compose(t);
}

/// Algebraic Fourier transform: the algebra map with d_j -> -zeta_j and
/// z_j -> d/dzeta_j, returned in normal order on the dual variables.
template <class C>
WeylOperator<C> weyl_hat(const WeylOperator<C>& s) {
  const int n = s.nvars();
  Exponents zero(static_cast<std::size_t>(n), 0);
  WeylOperator<C> out(n);
  for (const auto& [k, c] : s.terms()) {
    // z^a d^b  ->  d^a (-zeta)^b
    int sign = detail::exponent_sum(k.d) % 2 == 0 ? 1 : -1;
    auto derivs = WeylOperator<C>::monomial(zero, k.z, C(1));
    auto mults = WeylOperator<C>::monomial(k.d, zero, C(c * C(sign)));
    out += derivs.compose(mults);
  }
  return out;
}

}  // namespace sbolab
