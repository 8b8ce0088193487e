#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "multistruct/polynomial.hpp"

namespace multistruct {

/// Reduced Gröbner basis: generators monic, interreduced, sorted by
/// increasing leading monomial.  Reduced bases are unique per ideal and
/// order, so this representation is canonical.
template <Field K>
struct GroebnerBasis {
  VarSetPtr vars;
  std::vector<Polynomial<K>> generators;

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit_ideal() const {
    return generators.size() == 1 && generators[0].leading_monomial().is_unit();
  }
};

/// Division by an arbitrary generator list; the first divisor in list order
/// reduces the leading term.
template <Field K>
Polynomial<K> normal_form_list(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens) {
  Polynomial<K> remainder = Polynomial<K>::zero(f.vars());
  Polynomial<K> work = f;
  while (!work.is_zero()) {
    const auto& lt = work.leading_term();
    bool reduced = false;
    for (const auto& g : gens) {
      const auto& glm = g.leading_monomial();
      if (glm.divides(lt.mono)) {
        K factor = lt.coef / g.leading_coefficient();
        work = work - g.times_term(lt.mono / glm, factor);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // Leading term is in normal form; move it to the remainder.
      remainder = remainder + Polynomial<K>::monomial(f.vars(), lt.mono, lt.coef);
      work = work - Polynomial<K>::monomial(f.vars(), lt.mono, lt.coef);
    }
  }
  return remainder;
}

/// Unique reduced remainder of f modulo the basis.  No term of the result is
/// divisible by any leading monomial.  Linear and idempotent.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  require_same_vars(*f.vars(), *gb.vars);
  return normal_form_list(f, gb.generators);
}

template <Field K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial<K> a = f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse());
  Polynomial<K> b = g.times_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
  return a - b;
}

namespace detail {

template <Field K>
std::vector<Polynomial<K>> interreduce(std::vector<Polynomial<K>> basis) {
  // Minimalize: drop a generator when another one's leading monomial divides
  // its own (earlier generator wins on equal leading monomials).
  std::vector<bool> alive(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !alive[i] || !alive[j]) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) {
        alive[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial<K>> kept;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (alive[i]) kept.push_back(basis[i].monic());
  // Tail-reduce every survivor against the others.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = normal_form_list(kept[i], others).monic();
  }
  std::sort(kept.begin(), kept.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
    return monomial_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return kept;
}

}  // namespace detail

/// Buchberger's algorithm with the normal pair-selection strategy (smallest
/// lcm degree first, ties by creation order) and the coprime-leading-term
/// criterion.  Returns the reduced Gröbner basis; the zero ideal yields an
/// empty basis.
template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& input) {
  if (input.empty()) throw Error("buchberger: empty generator list");
  VarSetPtr vars = input.front().vars();
  for (const auto& f : input) require_same_vars(*vars, *f.vars());

  std::vector<Polynomial<K>> basis;
  struct Pair {
    std::size_t i, j;
    std::uint64_t lcm_degree;
    std::uint64_t serial;
  };
  std::vector<Pair> pairs;
  std::uint64_t serial = 0;

  auto add_generator = [&](Polynomial<K> g) {
    g = g.monic();
    std::size_t idx = basis.size();
    for (std::size_t i = 0; i < idx; ++i) {
      pairs.push_back(Pair{i, idx,
                           basis[i].leading_monomial().lcm(g.leading_monomial()).degree(),
                           serial++});
    }
    basis.push_back(std::move(g));
  };

  for (const auto& f : input) {
    if (f.is_zero()) continue;
    Polynomial<K> r = normal_form_list(f, basis);
    if (!r.is_zero()) add_generator(std::move(r));
  }
  if (basis.empty()) return GroebnerBasis<K>{vars, {}};

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].lcm_degree < pairs[best].lcm_degree ||
          (pairs[k].lcm_degree == pairs[best].lcm_degree && pairs[k].serial < pairs[best].serial))
        best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);
    const auto& fi = basis[p.i];
    const auto& fj = basis[p.j];
    if (fi.leading_monomial().coprime_with(fj.leading_monomial())) continue;
    Polynomial<K> r = normal_form_list(s_polynomial(fi, fj), basis);
    if (!r.is_zero()) add_generator(std::move(r));
  }

  GroebnerBasis<K> result{vars, detail::interreduce(basis)};
  return result;
}

}  // namespace multistruct
