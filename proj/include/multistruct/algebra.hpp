#pragma once

#include <map>
#include <memory>
#include <vector>

#include "multistruct/groebner.hpp"
#include "multistruct/linalg.hpp"

namespace multistruct {

/// Finite-dimensional presentation of B = S/J: the standard monomial basis
/// (monomials outside the leading-term ideal, increasing order, 1 first) and
/// one multiplication matrix per variable.
template <Field K>
class AlgebraPresentation {
 public:
  VarSetPtr vars;
  FieldSpec field;
  GroebnerBasis<K> gb;
  std::vector<Monomial> standard_monomials;
  std::vector<Matrix<K>> mult_matrices;  // one per variable, dim x dim
  bool zero_ring = false;

  AlgebraPresentation(VarSetPtr v, FieldSpec f, GroebnerBasis<K> g)
      : vars(std::move(v)), field(std::move(f)), gb(std::move(g)) {}

  std::size_t dim() const { return standard_monomials.size(); }
  std::size_t n_vars() const { return vars->size(); }
  K kzero() const { return FieldOps<K>::zero(field); }
  K kone() const { return FieldOps<K>::one(field); }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InternalInvariantViolation("monomial not standard");
    return it->second;
  }

  bool is_standard(const Monomial& m) const { return index_.count(m) != 0; }

  /// Coordinates of an arbitrary polynomial: reduce to normal form first.
  std::vector<K> coords_of(const Polynomial<K>& f) const {
    Polynomial<K> nf = normal_form(f, gb);
    std::vector<K> v(dim(), kzero());
    for (const auto& t : nf.terms()) v[index_of(t.mono)] = t.coef;
    return v;
  }

  Polynomial<K> to_polynomial(const std::vector<K>& coords) const {
    std::vector<Term<K>> terms;
    for (std::size_t j = 0; j < coords.size(); ++j)
      if (!coords[j].is_zero()) terms.push_back({standard_monomials[j], coords[j]});
    return Polynomial<K>::from_terms(vars, std::move(terms));
  }

  std::vector<K> unit_coords() const {
    std::vector<K> v(dim(), kzero());
    v[0] = kone();
    return v;
  }

  std::vector<K> apply_variable(std::size_t var, const std::vector<K>& v) const {
    return mult_matrices[var].apply(v);
  }

  /// The matrix of multiplication by the element u: column j equals
  /// u * e_j, built by walking divisor steps so each column costs one
  /// matrix-vector product.
  Matrix<K> mult_operator(const std::vector<K>& u) const {
    const std::size_t d = dim();
    Matrix<K> w(d, d, kzero());
    for (std::size_t i = 0; i < d; ++i) w.at(i, 0) = u[i];
    for (std::size_t j = 1; j < d; ++j) {
      auto [var, prev] = divisor_step_[j];
      const Matrix<K>& mv = mult_matrices[var];
      for (std::size_t i = 0; i < d; ++i) {
        K acc = kzero();
        const K* rp = mv.row_ptr(i);
        for (std::size_t t = 0; t < d; ++t) {
          const K& x = w.at(t, prev);
          if (!x.is_zero() && !rp[t].is_zero()) acc += rp[t] * x;
        }
        w.at(i, j) = acc;
      }
    }
    return w;
  }

  /// One-off product of two elements given by coordinates.
  std::vector<K> multiply(const std::vector<K>& u, const std::vector<K>& v) const {
    return mult_operator(u).apply(v);
  }

  void finalize(std::vector<Monomial> standard) {
    standard_monomials = std::move(standard);
    index_.clear();
    for (std::size_t j = 0; j < standard_monomials.size(); ++j)
      index_.emplace(standard_monomials[j], j);
    divisor_step_.assign(standard_monomials.size(), {0, 0});
    for (std::size_t j = 1; j < standard_monomials.size(); ++j) {
      const Monomial& m = standard_monomials[j];
      std::size_t var = 0;
      while (m.exponent(var) == 0) ++var;
      Monomial quotient = m / Monomial::variable(m.n_vars(), var);
      divisor_step_[j] = {var, index_of(quotient)};
    }
  }

 private:
  std::map<Monomial, std::size_t, MonomialLess> index_;
  std::vector<std::pair<std::size_t, std::size_t>> divisor_step_;
};

template <Field K>
using AlgebraPtr = std::shared_ptr<const AlgebraPresentation<K>>;

/// Builds the quotient presentation from a reduced Gröbner basis.  Throws
/// NotZeroDimensional when the quotient is infinite-dimensional; the unit
/// ideal yields a dim-0 presentation flagged zero_ring.
template <Field K>
AlgebraPtr<K> present_algebra(GroebnerBasis<K> gb, const FieldSpec& field) {
  VarSetPtr vars = gb.vars;
  const std::size_t n = vars->size();
  auto pres = std::make_shared<AlgebraPresentation<K>>(vars, field, std::move(gb));
  const auto& basis = pres->gb.generators;

  if (pres->gb.is_unit_ideal()) {
    pres->zero_ring = true;
    pres->finalize({});
    return pres;
  }

  // Finiteness: every variable needs a pure power among the leading monomials.
  std::vector<std::uint32_t> cap(n, 0);
  for (const auto& g : basis) {
    const Monomial& lm = g.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm.exponent(i) > 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1) {
      if (cap[var] == 0 || lm.exponent(var) < cap[var]) cap[var] = lm.exponent(var);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cap[i] == 0) throw NotZeroDimensional();

  // Standard monomials live in the exponent box below the pure powers.
  std::vector<Monomial> standard;
  std::vector<std::uint32_t> exps(n, 0);
  while (true) {
    Monomial m{std::vector<std::uint32_t>(exps)};
    bool divisible = false;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) standard.push_back(std::move(m));
    std::size_t i = 0;
    while (i < n) {
      if (++exps[i] < cap[i]) break;
      exps[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(standard.begin(), standard.end(), MonomialLess{});
  pres->finalize(std::move(standard));

  const std::size_t d = pres->dim();
  const K kz = pres->kzero();
  const K ko = pres->kone();
  for (std::size_t v = 0; v < n; ++v) {
    Matrix<K> m(d, d, kz);
    Monomial xv = Monomial::variable(n, v);
    for (std::size_t j = 0; j < d; ++j) {
      Monomial prod = pres->standard_monomials[j] * xv;
      if (pres->is_standard(prod)) {
        m.at(pres->index_of(prod), j) = ko;
      } else {
        Polynomial<K> nf =
            normal_form(Polynomial<K>::monomial(vars, prod, ko), pres->gb);
        for (const auto& t : nf.terms()) m.at(pres->index_of(t.mono), j) = t.coef;
      }
    }
    pres->mult_matrices.push_back(std::move(m));
  }
  return pres;
}

}  // namespace multistruct
