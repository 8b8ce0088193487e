#pragma once

#include <utility>
#include <vector>

#include "multistruct/algebra.hpp"

namespace multistruct {

/// An ideal of B held as a subspace of its coordinate space.  Closure under
/// multiplication by every variable is verified at construction; the basis is
/// the canonical RREF one, so ideal equality is basis equality.
template <Field K>
class IdealSubspace {
 public:
  IdealSubspace(AlgebraPtr<K> algebra, Subspace<K> space)
      : algebra_(std::move(algebra)), space_(std::move(space)) {
    if (space_.ambient_dim() != algebra_->dim()) throw AmbientMismatch();
    for (std::size_t v = 0; v < algebra_->n_vars(); ++v) {
      for (const auto& b : space_.basis_rows()) {
        if (!space_.contains(algebra_->apply_variable(v, b)))
          throw InternalInvariantViolation("subspace is not an ideal: not closed under x_" +
                                           std::to_string(v));
      }
    }
  }

  const AlgebraPtr<K>& algebra() const { return algebra_; }
  const Subspace<K>& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  bool operator==(const IdealSubspace& o) const {
    check(o);
    return space_ == o.space_;
  }
  bool operator!=(const IdealSubspace& o) const { return !(*this == o); }

  bool contains(const IdealSubspace& o) const {
    check(o);
    return space_.contains(o.space_);
  }

  void check(const IdealSubspace& o) const {
    if (algebra_ != o.algebra_) throw AlgebraMismatch();
  }

 private:
  AlgebraPtr<K> algebra_;
  Subspace<K> space_;
};

/// Smallest ideal containing the given coordinate vectors: saturate the span
/// under the variable matrices until stable.
template <Field K>
IdealSubspace<K> ideal_generated(const AlgebraPtr<K>& algebra,
                                 const std::vector<std::vector<K>>& gens) {
  const std::size_t d = algebra->dim();
  RowReducer<K> red(d, algebra->kzero());
  std::vector<std::vector<K>> frontier;
  for (const auto& g : gens) {
    if (g.size() != d) throw AmbientMismatch();
    if (red.insert(g)) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<K>> next;
    for (const auto& v : frontier) {
      for (std::size_t var = 0; var < algebra->n_vars(); ++var) {
        auto img = algebra->apply_variable(var, v);
        if (red.insert(img)) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return IdealSubspace<K>(algebra, Subspace<K>::from_reducer(red, algebra->kzero()));
}

template <Field K>
IdealSubspace<K> zero_ideal(const AlgebraPtr<K>& algebra) {
  return IdealSubspace<K>(algebra, Subspace<K>::zero_space(algebra->dim(), algebra->kzero()));
}

template <Field K>
IdealSubspace<K> unit_ideal(const AlgebraPtr<K>& algebra) {
  return IdealSubspace<K>(algebra, Subspace<K>::full_space(algebra->dim(), algebra->kzero()));
}

/// The maximal ideal I = (x_1, ..., x_n) of B.
template <Field K>
IdealSubspace<K> maximal_ideal(const AlgebraPtr<K>& algebra) {
  std::vector<std::vector<K>> gens;
  for (std::size_t v = 0; v < algebra->n_vars(); ++v)
    gens.push_back(algebra->apply_variable(v, algebra->unit_coords()));
  return ideal_generated(algebra, gens);
}

/// Minimal generator representatives: a basis of a modulo I*a (Nakayama).
template <Field K>
std::vector<std::vector<K>> minimal_generators(const IdealSubspace<K>& a) {
  const auto& alg = a.algebra();
  RowReducer<K> red(alg->dim(), alg->kzero());
  for (const auto& b : a.space().basis_rows())
    for (std::size_t v = 0; v < alg->n_vars(); ++v)
      red.insert(alg->apply_variable(v, b));
  std::vector<std::vector<K>> gens;
  for (const auto& b : a.space().basis_rows())
    if (red.insert(b)) gens.push_back(b);
  return gens;
}

/// Span of pairwise products of basis representatives.
template <Field K>
IdealSubspace<K> ideal_product(const IdealSubspace<K>& a, const IdealSubspace<K>& b) {
  a.check(b);
  const auto& alg = a.algebra();
  RowReducer<K> red(alg->dim(), alg->kzero());
  // Products of ideal generators of a with a spanning set of b span a*b,
  // and that span is itself multiplication-closed.
  auto ga = minimal_generators(a);
  for (const auto& u : ga) {
    Matrix<K> mu = alg->mult_operator(u);
    for (const auto& v : b.space().basis_rows()) red.insert(mu.apply(v));
  }
  return IdealSubspace<K>(alg, Subspace<K>::from_reducer(red, alg->kzero()));
}

/// a : b = { f in B : f*b ⊆ a }.  Computed as the intersection of the
/// preimages of a under multiplication by each minimal generator of b.
template <Field K>
IdealSubspace<K> colon(const IdealSubspace<K>& a, const IdealSubspace<K>& b) {
  a.check(b);
  const auto& alg = a.algebra();
  const std::size_t d = alg->dim();
  const K kz = alg->kzero();

  // Rows of C span the orthogonal complement of a, so ker C = a.
  Matrix<K> abasis = Matrix<K>::from_rows(a.space().basis_rows(), kz, d);
  Subspace<K> complement = kernel(abasis);

  Subspace<K> result = Subspace<K>::full_space(d, kz);
  for (const auto& g : minimal_generators(b)) {
    Matrix<K> mg = alg->mult_operator(g);
    // Constraint: C * (M_g f) = 0, i.e. f in ker(C M_g).
    Matrix<K> cm(complement.dim(), d, kz);
    for (std::size_t i = 0; i < complement.dim(); ++i) {
      const auto& c = complement.basis_rows()[i];
      for (std::size_t j = 0; j < d; ++j) {
        K acc = kz;
        for (std::size_t t = 0; t < d; ++t)
          if (!c[t].is_zero() && !mg.at(t, j).is_zero()) acc += c[t] * mg.at(t, j);
        cm.at(i, j) = acc;
      }
    }
    result = intersect(result, kernel(cm));
    if (result.is_zero_space()) break;
  }
  return IdealSubspace<K>(alg, std::move(result));
}

/// 0 : a, the annihilator of a.
template <Field K>
IdealSubspace<K> colon_into_zero(const IdealSubspace<K>& a) {
  return colon(zero_ideal(a.algebra()), a);
}

/// 0 : I — the socle.  Its dimension is 1 exactly when B is Gorenstein; this
/// is the oracle the theorem checker is validated against.
template <Field K>
IdealSubspace<K> socle(const AlgebraPtr<K>& algebra) {
  return colon_into_zero(maximal_ideal(algebra));
}

/// Powers of the maximal ideal: B = I^0 ⊃ I ⊃ I^2 ⊃ ... ⊃ I^m ⊃ I^{m+1} = 0.
/// Throws NotLocal when the chain stabilizes at a nonzero ideal (some
/// variable acts non-nilpotently).
template <Field K>
std::vector<IdealSubspace<K>> power_chain(const AlgebraPtr<K>& algebra) {
  std::vector<IdealSubspace<K>> chain;
  chain.push_back(unit_ideal(algebra));
  IdealSubspace<K> current = maximal_ideal(algebra);
  while (true) {
    if (current.dim() == chain.back().dim())
      throw NotLocal("power chain of the variable ideal stabilizes at dimension " +
                     std::to_string(current.dim()));
    chain.push_back(current);
    if (current.dim() == 0) break;
    // I^{l+1} = sum of x_v * I^l over the variables.
    const auto& alg = algebra;
    RowReducer<K> red(alg->dim(), alg->kzero());
    for (const auto& b : current.space().basis_rows())
      for (std::size_t v = 0; v < alg->n_vars(); ++v)
        red.insert(alg->apply_variable(v, b));
    current = IdealSubspace<K>(alg, Subspace<K>::from_reducer(red, alg->kzero()));
  }
  return chain;
}

/// Verifies locality and returns the nilpotency index m (largest l with
/// I^l != 0), computed from the power filtration.
template <Field K>
std::size_t locality_check(const AlgebraPtr<K>& algebra) {
  if (algebra->dim() == 0) throw ZeroRing();
  auto chain = power_chain(algebra);
  return chain.size() - 2;  // chain = I^0 .. I^{m+1}
}

/// Ambient-ring generators for an ideal of B: polynomials in standard
/// monomials whose images generate the subspace ideal, minimalized by
/// dropping any generator already inside the ideal the others generate.
template <Field K>
std::vector<Polynomial<K>> lift_generators(const IdealSubspace<K>& a) {
  const auto& alg = a.algebra();
  auto gens = minimal_generators(a);
  // Greedy irredundancy pass (Nakayama already minimalizes; this enforces the
  // reported contract directly).
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<std::vector<K>> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (ideal_generated(alg, others).space().contains(gens[i]))
      gens.erase(gens.begin() + i);
    else
      ++i;
  }
  std::vector<Polynomial<K>> lifted;
  for (const auto& g : gens) lifted.push_back(alg->to_polynomial(g));
  return lifted;
}

}  // namespace multistruct
