#pragma once

// Sparse multivariate polynomials over an arbitrary coefficient ring.
//
// Used with Rational (exact symbolic pipelines) and std::complex<double>
// (the polynomial factor of Gaussian test functions). Zero coefficients are
// never stored, so structural equality is value equality.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "sbolab/rational.hpp"

namespace sbolab {

using Exponents = std::vector<int>;

namespace detail {

template <class X, class C>
X convert_coeff(const C& c) {
  if constexpr (std::is_same_v<X, C>) {
    return c;
  } else {
    return X(to_complex(c));
  }
}

inline int exponent_sum(const Exponents& e) {
  int s = 0;
  for (int k : e) s += k;
  return s;
}

}  // namespace detail

template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponents, C>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("Polynomial: negative variable count");
  }

  static Polynomial constant(int nvars, const C& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static Polynomial variable(int nvars, int j) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(j)) = 1;
    return monomial(std::move(e), C(1));
  }

  static Polynomial monomial(Exponents e, const C& c) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, detail::exponent_sum(e));
    return d;
  }

  int degree_in(int j) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(j)]);
    return d;
  }

  bool is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return detail::exponent_sum(t.first) == degree; });
  }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Exponents& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_) {
      throw std::invalid_argument("Polynomial: exponent length mismatch");
    }
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Polynomial derivative(int j) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      int k = e[static_cast<std::size_t>(j)];
      if (k == 0) continue;
      Exponents f = e;
      f[static_cast<std::size_t>(j)] -= 1;
      out.add_term(f, C(k) * c);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  Polynomial& operator*=(const C& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= C(-1); }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial out(a.nvars_);
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, C(ca * cb));
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Polynomial pow(int k) const {
    Polynomial out = constant(nvars_, C(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Value at x; X must be constructible from C (directly or via to_complex).
  template <class X>
  X evaluate(std::span<const X> x) const {
    if (static_cast<int>(x.size()) != nvars_) {
      throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
    }
    std::vector<std::vector<X>> powers(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      int d = std::max(degree_in(static_cast<int>(i)), 0);
      powers[i].reserve(static_cast<std::size_t>(d) + 1);
      powers[i].push_back(X(1));
      for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * x[i]);
    }
    X sum(0);
    for (const auto& [e, c] : terms_) {
      X term = detail::convert_coeff<X>(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) term *= powers[i][static_cast<std::size_t>(e[i])];
      }
      sum += term;
    }
    return sum;
  }

  /// Sets x_j = 0 and removes the variable (remaining variables keep their order).
  Polynomial restrict_variable_to_zero(int j) const {
    Polynomial out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<std::size_t>(j)] != 0) continue;
      Exponents f;
      f.reserve(e.size() - 1);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (static_cast<int>(i) != j) f.push_back(e[i]);
      }
      out.add_term(f, c);
    }
    return out;
  }

  /// Composition x_i -> images[i]; all images share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_) {
      throw std::invalid_argument("Polynomial::substitute: wrong number of images");
    }
    int m = images.empty() ? 0 : images.front().nvars();
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t i, int k) -> const Polynomial& {
      auto& tab = powers[i];
      if (tab.empty()) tab.push_back(constant(m, C(1)));
      while (static_cast<int>(tab.size()) <= k) tab.push_back(tab.back() * images[i]);
      return tab[static_cast<std::size_t>(k)];
    };
    Polynomial out(m);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(m, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) term = term * power_of(i, e[i]);
      }
      out += term;
    }
    return out;
  }

  template <class F>
  auto transform_coefficients(F f) const -> Polynomial<std::decay_t<decltype(f(std::declval<C>()))>> {
    using D = std::decay_t<decltype(f(std::declval<C>()))>;
    Polynomial<D> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_string(c) << ")";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string name = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        os << "*" << name;
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  static bool is_zero_coeff(const C& c) { return sbolab::is_zero(c); }

  static std::string coeff_string(const C& c) {
    if constexpr (std::is_same_v<C, Rational>) {
      return sbolab::to_string(c);
    } else {
      std::ostringstream os;
      os.precision(15);
      os << c;
      return os.str();
    }
  }

  void check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  int nvars_ = 0;
  TermMap terms_;
};

using ExactPoly = Polynomial<Rational>;
using ComplexPoly = Polynomial<std::complex<double>>;

}  // namespace sbolab
