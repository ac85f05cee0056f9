#include "sbolab/fmethod.hpp"

#include <map>
#include <stdexcept>

#include "sbolab/errors.hpp"
#include "sbolab/sbops.hpp"

namespace sbolab {
namespace {

ExactPoly boundary_square(int n) {
  ExactPoly s(n);
  for (int i = 0; i + 1 < n; ++i) s += ExactPoly::variable(n, i) * ExactPoly::variable(n, i);
  return s;
}

// Rows indexed by the monomials that occur in any op(basis[k]).
RationalMatrix constraint_matrix(const std::vector<ExactWeyl>& ops, const std::vector<ExactPoly>& basis) {
  std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const ExactPoly image = ops[j].apply(basis[k]);
      for (const auto& [e, c] : image.terms()) {
        auto [it, inserted] = row_of.try_emplace({j, e}, row_of.size());
        cols[k].emplace_back(it->second, c);
      }
    }
  }
  RationalMatrix m(row_of.size(), basis.size(), Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (const auto& [r, c] : cols[k]) m(r, k) = c;
  }
  return m;
}

ExactPoly combine(const std::vector<ExactPoly>& basis, const RationalVector& v) {
  ExactPoly out(basis.front().nvars());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(v[k]) != 0) out += basis[k] * v[k];
  }
  return out;
}

ExactPoly negate_variable(const ExactPoly& p, int j) {
  std::vector<ExactPoly> images;
  for (int i = 0; i < p.nvars(); ++i) {
    images.push_back(i == j ? ExactPoly::variable(p.nvars(), i) * Rational(-1) : ExactPoly::variable(p.nvars(), i));
  }
  return p.substitute(images);
}

}  // namespace

ExactWeyl fundamental_operator(const Rational& nu, int n, int j) {
  if (n < 2 || j < 1 || j > n - 1) throw std::out_of_range("fundamental_operator: need 1 <= j <= n-1");
  const int k = j - 1;
  ExactWeyl zk = ExactWeyl::z(n, k), dk = ExactWeyl::d(n, k);
  ExactWeyl lap_z = ExactWeyl::laplacian(n).compose(zk);
  return nu * dk - Rational(1, 2) * lap_z;
}

ExactWeyl fundamental_operator_flat(const Rational& nu, int n, int j) {
  if (n < 2 || j < 1 || j > n - 1) throw std::out_of_range("fundamental_operator_flat: need 1 <= j <= n-1");
  const int k = j - 1;
  ExactWeyl r2(n);
  for (int i = 0; i < n; ++i) r2 = r2 + ExactWeyl::z(n, i).compose(ExactWeyl::z(n, i));
  return nu * ExactWeyl::z(n, k) + Rational(1, 2) * r2.compose(ExactWeyl::d(n, k));
}

std::vector<ExactPoly> invariant_basis(int n, int l) {
  if (n < 2 || l < 0) throw std::invalid_argument("invariant_basis: need n >= 2 and l >= 0");
  const ExactPoly s = boundary_square(n);
  const ExactPoly u = ExactPoly::variable(n, n - 1) * ExactPoly::variable(n, n - 1);
  std::vector<ExactPoly> out;
  for (int j = 0; j <= l; ++j) out.push_back(s.pow(j) * u.pow(l - j));
  return out;
}

SolSystem SolSystem::build(int n, int l, const Rational& lambda) {
  SolSystem sys;
  sys.n = n;
  sys.l = l;
  sys.lambda = lambda;
  sys.nu = lambda + 2 * l;
  sys.basis = invariant_basis(n, l);
  for (int j = 1; j < n; ++j) sys.fundamentals.push_back(fundamental_operator(sys.nu, n, j));
  sys.constraints = constraint_matrix(sys.fundamentals, sys.basis);
  return sys;
}

SolSystem SolSystem::build_from_flat(int n, int l, const Rational& lambda) {
  SolSystem sys;
  sys.n = n;
  sys.l = l;
  sys.lambda = lambda;
  sys.nu = lambda + 2 * l;
  sys.basis = invariant_basis(n, l);
  for (int j = 1; j < n; ++j) sys.fundamentals.push_back(weyl_hat(fundamental_operator_flat(sys.nu, n, j)));
  sys.constraints = constraint_matrix(sys.fundamentals, sys.basis);
  return sys;
}

std::vector<RationalVector> solve_sol_coefficients(const SolSystem& sys) { return exact_nullspace(sys.constraints); }

std::vector<ExactPoly> solve_sol_space(int n, int l, const Rational& lambda) {
  SolSystem sys = SolSystem::build(n, l, lambda);
  std::vector<ExactPoly> out;
  for (const auto& v : solve_sol_coefficients(sys)) out.push_back(combine(sys.basis, v));
  return out;
}

bool verify_annihilation(const ExactPoly& F, const SolSystem& sys) {
  if (F.is_zero()) return true;
  const int n = sys.n;
  if (F.nvars() != n || !F.is_homogeneous(2 * sys.l)) return false;
  // Euler operator sum zeta_i d_i - (nu - lambda)
  ExactWeyl euler = ExactWeyl::scalar(n, -(sys.nu - sys.lambda));
  for (int i = 0; i < n; ++i) euler = euler + ExactWeyl::z(n, i).compose(ExactWeyl::d(n, i));
  if (!euler.apply(F).is_zero()) return false;
  for (int i = 0; i + 1 < n; ++i) {
    for (int k = i + 1; k + 1 < n; ++k) {
      ExactWeyl rot = ExactWeyl::z(n, i).compose(ExactWeyl::d(n, k)) - ExactWeyl::z(n, k).compose(ExactWeyl::d(n, i));
      if (!rot.apply(F).is_zero()) return false;
    }
  }
  if (!(negate_variable(F, 0) == F) || !(negate_variable(F, n - 1) == F)) return false;
  for (const auto& op : sys.fundamentals) {
    if (!op.apply(F).is_zero()) return false;
  }
  return true;
}

RationalVector juhl_symbol_coefficients(int n, int l, const Rational& lambda) {
  return juhl_coefficients<Rational>(n, l, lambda, Rational(lambda + 2 * l));
}

std::optional<Rational> proportionality(const RationalVector& v, const RationalVector& w) {
  if (v.size() != w.size()) return std::nullopt;
  std::optional<Rational> c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(w[i]) == 0) {
      if (sgn(v[i]) != 0) return std::nullopt;
      continue;
    }
    Rational r = v[i] / w[i];
    if (!c) {
      c = r;
    } else if (*c != r) {
      return std::nullopt;
    }
  }
  if (!c || sgn(*c) == 0) return std::nullopt;
  return c;
}

FormalSolution solve_sol_space_formal(int n, int l) {
  if (l < 0 || l > 3) throw std::invalid_argument("solve_sol_space_formal: supported for l <= 3");
  FormalSolution out;
  out.n = n;
  out.l = l;
  // Entries are affine in lambda: M(lambda) = M(0) + lambda (M(1) - M(0)).
  const SolSystem s0 = SolSystem::build(n, l, Rational(0));
  const SolSystem s1 = SolSystem::build(n, l, Rational(1));
  const auto cols = s0.basis.size();
  // Row sets agree generically; compare by rebuilding over the union of monomials.
  std::map<std::pair<std::size_t, Exponents>, std::size_t> rows;
  std::vector<std::map<std::size_t, std::pair<Rational, Rational>>> entries(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t j = 0; j < s0.fundamentals.size(); ++j) {
      ExactPoly a = s0.fundamentals[j].apply(s0.basis[k]);
      ExactPoly b = s1.fundamentals[j].apply(s1.basis[k]);
      for (const ExactPoly* p : {&a, &b}) {
        for (const auto& [e, c] : p->terms()) rows.try_emplace({j, e}, rows.size());
      }
      for (const auto& [e, c] : a.terms()) entries[k][rows.at({j, e})].first = c;
      for (const auto& [e, c] : b.terms()) entries[k][rows.at({j, e})].second = c;
    }
  }
  UniPolyMatrix m(rows.size(), cols, UniPoly(1));
  for (std::size_t k = 0; k < cols; ++k) {
    for (const auto& [r, ab] : entries[k]) m(r, k) = uni_linear(ab.second - ab.first, ab.first);
  }
  const FormalEchelon ech = formal_echelon(m);
  out.generic_dimension = cols - ech.rank;
  if (out.generic_dimension != 1) return out;

  // Generalized cross product of the pivot rows: v_k = (-1)^k det(A without column k).
  const std::size_t r = ech.rank;
  std::vector<UniPoly> v(cols, UniPoly(1));
  for (std::size_t k = 0; k < cols; ++k) {
    UniPolyMatrix a(r, r, UniPoly(1));
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == k) continue;
        a(i, cc++) = m(ech.pivot_rows[i], c);
      }
    }
    UniPoly d = formal_determinant(a);
    v[k] = (k % 2 == 0) ? d : d * Rational(-1);
  }
  UniPoly g(1);
  for (const auto& x : v) g = uni_gcd(g, x);
  out.degeneracy = g;
  for (auto& x : v) x = uni_divmod(x, g).first;
  out.generator = v;

  if (auto roots = uni_rational_roots(g)) {
    UniPoly rest = g;
    for (const Rational& lam : *roots) {
      while (uni_degree(rest) > 0 && sgn(uni_eval(rest, lam)) == 0) rest = uni_divmod(rest, uni_linear(1, -lam)).first;
    }
    out.roots_complete = uni_degree(rest) <= 0;
    out.candidate_lambdas = *roots;
    for (const Rational& lam : *roots) {
      if (solve_sol_space(n, l, lam).size() > 1) out.degenerate_lambdas.push_back(lam);
    }
  }
  return out;
}

std::string to_string(const UniPoly& p, const std::string& var) { return p.to_string({var}); }

}  // namespace sbolab
