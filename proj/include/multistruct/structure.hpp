#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "multistruct/ideal.hpp"
#include "multistruct/verdicts.hpp"

namespace multistruct {

/// Successive quotient numerator/denominator of one filtration step, with
/// representatives completing a basis of the denominator inside the numerator.
template <Field K>
struct GradedPiece {
  std::size_t ell;
  std::size_t dim;
  std::vector<std::vector<K>> reps;
};

/// The three canonical chains, each running B = C_0 ⊃ C_1 ⊃ ... ⊃ C_{m+1} = 0.
template <Field K>
struct Filtrations {
  std::size_t m = 0;
  std::vector<IdealSubspace<K>> powers;  // I^l
  std::vector<IdealSubspace<K>> ann;     // I_l = 0 : I^{m+1-l}
  std::vector<IdealSubspace<K>> dann;    // J_l = 0 : (0 : I^l)
};

namespace detail {

template <Field K>
std::string subspace_key(const Subspace<K>& s) {
  std::ostringstream os;
  os << s.dim() << '|';
  for (const auto& row : s.basis_rows()) {
    for (const auto& x : row) os << x.to_string() << ',';
    os << ';';
  }
  return os.str();
}

/// Memoized annihilator computations keyed by the canonical basis, so the
/// battery's repeated colons of identical subspaces cost one computation.
template <Field K>
class ColonCache {
 public:
  explicit ColonCache(AlgebraPtr<K> algebra) : algebra_(std::move(algebra)) {}

  IdealSubspace<K> annihilator(const IdealSubspace<K>& a) {
    std::string key = subspace_key(a.space());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    IdealSubspace<K> r = colon_into_zero(a);
    cache_.emplace(std::move(key), r);
    return r;
  }

 private:
  AlgebraPtr<K> algebra_;
  std::map<std::string, IdealSubspace<K>> cache_;
};

}  // namespace detail

/// Builds the three filtrations.  Endpoints and strict descent are verified;
/// violations are engine bugs, not math outcomes.
template <Field K>
Filtrations<K> build_filtrations(const AlgebraPtr<K>& algebra, std::size_t m) {
  Filtrations<K> f;
  f.m = m;
  f.powers = power_chain(algebra);
  if (f.powers.size() != m + 2)
    throw InternalInvariantViolation("power chain length disagrees with m");
  for (std::size_t l = 0; l <= m + 1; ++l)
    f.ann.push_back(colon_into_zero(f.powers[m + 1 - l]));
  for (std::size_t l = 0; l <= m + 1; ++l)
    f.dann.push_back(colon_into_zero(f.ann[m + 1 - l]));

  auto verify = [&](const std::vector<IdealSubspace<K>>& chain, const char* name) {
    if (chain.front().dim() != algebra->dim() || chain.back().dim() != 0)
      throw InternalInvariantViolation(std::string(name) + " chain endpoints are not B and 0");
    for (std::size_t l = 0; l + 1 < chain.size(); ++l) {
      if (!chain[l].contains(chain[l + 1]) || chain[l].dim() <= chain[l + 1].dim())
        throw InternalInvariantViolation(std::string(name) +
                                         " chain does not strictly decrease at index " +
                                         std::to_string(l));
    }
  };
  verify(f.powers, "power");
  verify(f.ann, "annihilator");
  verify(f.dann, "double-annihilator");
  return f;
}

template <Field K>
struct GradedData {
  std::vector<GradedPiece<K>> b_pieces, a_pieces, m_pieces;
  StructureType type;
};

template <Field K>
GradedData<K> graded_pieces(const AlgebraPtr<K>& algebra, const Filtrations<K>& f) {
  GradedData<K> g;
  auto build = [&](const std::vector<IdealSubspace<K>>& chain, std::vector<GradedPiece<K>>& out,
                   std::vector<std::size_t>& dims) {
    std::size_t total = 0;
    for (std::size_t l = 0; l <= f.m; ++l) {
      GradedPiece<K> piece;
      piece.ell = l;
      piece.reps = chain[l].space().complete_basis(chain[l + 1].space());
      piece.dim = piece.reps.size();
      if (piece.dim != chain[l].dim() - chain[l + 1].dim())
        throw InternalInvariantViolation("graded piece dimension mismatch");
      dims.push_back(piece.dim);
      total += piece.dim;
      out.push_back(std::move(piece));
    }
    if (total != algebra->dim())
      throw InternalInvariantViolation("graded dimensions do not sum to dim B");
  };
  build(f.powers, g.b_pieces, g.type.dims_B);
  build(f.ann, g.m_pieces, g.type.dims_M);
  build(f.dann, g.a_pieces, g.type.dims_A);
  return g;
}

/// Ranks of the inclusion-induced maps I^l/I^{l+1} -> J_l/J_{l+1} -> I_l/I_{l+1}.
template <Field K>
std::vector<MorphismInfo> canonical_morphisms(const AlgebraPtr<K>& algebra,
                                              const Filtrations<K>& f) {
  Matrix<K> id = Matrix<K>::identity(algebra->dim(), algebra->kzero());
  std::vector<MorphismInfo> out;
  for (std::size_t l = 0; l <= f.m; ++l) {
    MorphismInfo info;
    info.ell = l;
    auto ba = induced_map_rank(id, f.powers[l].space(), f.powers[l + 1].space(),
                               f.dann[l].space(), f.dann[l + 1].space());
    auto am = induced_map_rank(id, f.dann[l].space(), f.dann[l + 1].space(),
                               f.ann[l].space(), f.ann[l + 1].space());
    info.rank_b_to_a = ba.rank;
    info.b_to_a_bijective = ba.injective && ba.surjective;
    info.rank_a_to_m = am.rank;
    info.a_to_m_bijective = am.injective && am.surjective;
    out.push_back(info);
  }
  return out;
}

/// The multiplication pairing A_l -> Hom(M_{m-l}, M_m).  Representative
/// independence is verified at ideal level before the matrix is built.
template <Field K>
PairingInfo pairing_map(std::size_t l, const AlgebraPtr<K>& algebra, const Filtrations<K>& f,
                        const GradedData<K>& g) {
  const std::size_t m = f.m;
  const K kz = algebra->kzero();
  const auto& a_piece = g.a_pieces[l];
  const auto& m_piece = g.m_pieces[m - l];
  const Subspace<K>& target = f.ann[m].space();  // M_m = I_m / 0
  if (target.dim() == 0) throw DegenerateTarget();

  // Denominator on the A side must kill the M numerator: J_{l+1} * I_{m-l} = 0.
  for (const auto& gmin : minimal_generators(f.dann[l + 1])) {
    Matrix<K> op = algebra->mult_operator(gmin);
    for (const auto& h : f.ann[m - l].space().basis_rows()) {
      for (const auto& x : op.apply(h))
        if (!x.is_zero()) throw NotWellDefined("A-side denominator does not kill M_{m-l}");
    }
  }

  const std::size_t cols = m_piece.dim * target.dim();
  Matrix<K> pairing(a_piece.dim, cols, kz);
  for (std::size_t i = 0; i < a_piece.dim; ++i) {
    Matrix<K> op = algebra->mult_operator(a_piece.reps[i]);
    // Denominator on the M side must be killed: a_i * I_{m+1-l} = 0.
    for (const auto& h : f.ann[m + 1 - l].space().basis_rows()) {
      for (const auto& x : op.apply(h))
        if (!x.is_zero()) throw NotWellDefined("A_l representative does not kill I_{m+1-l}");
    }
    for (std::size_t j = 0; j < m_piece.dim; ++j) {
      auto prod = op.apply(m_piece.reps[j]);
      auto coords = target.coordinates(prod);
      if (!coords) throw NotWellDefined("product left I_m");
      for (std::size_t t = 0; t < target.dim(); ++t)
        pairing.at(i, j * target.dim() + t) = (*coords)[t];
    }
  }
  PairingInfo info;
  info.ell = l;
  info.dim_a = a_piece.dim;
  info.dim_hom = cols;
  info.rank = rref(pairing).rank;
  info.bijective = info.rank == info.dim_a && info.rank == info.dim_hom;
  return info;
}

template <Field K>
std::vector<PairingInfo> all_pairings(const AlgebraPtr<K>& algebra, const Filtrations<K>& f,
                                      const GradedData<K>& g) {
  std::vector<PairingInfo> out;
  for (std::size_t l = 0; l <= f.m; ++l) out.push_back(pairing_map(l, algebra, f, g));
  return out;
}

/// Conditions (a), (b), (c) against the socle oracle.
template <Field K>
TheoremVerdict theorem_check(const AlgebraPtr<K>& algebra, const Filtrations<K>& f,
                             const GradedData<K>& g, const std::vector<PairingInfo>& pairings) {
  TheoremVerdict v;
  v.dim_a_top = g.type.dims_A[f.m];
  v.dim_m_top = g.type.dims_M[f.m];
  v.cond_a = v.dim_a_top == 1 && v.dim_m_top == 1;
  v.cond_b = f.dann[f.m] == f.ann[f.m];
  v.cond_c = true;
  for (const auto& p : pairings) v.cond_c = v.cond_c && p.bijective;
  v.criterion_gorenstein = v.cond_a && v.cond_b && v.cond_c;
  v.socle_dim = socle(algebra).dim();
  v.oracle_gorenstein = v.socle_dim == 1;
  v.agrees = v.criterion_gorenstein == v.oracle_gorenstein;
  return v;
}

template <Field K>
bool is_quasiprimitive(const GradedData<K>& g) {
  for (auto d : g.type.dims_A)
    if (d != 1) return false;
  for (auto d : g.type.dims_M)
    if (d != 1) return false;
  return true;
}

namespace detail {

/// Finds a product of representatives from two graded pieces that escapes
/// `excluded`; all products are verified to stay inside `required` first at
/// ideal level by the caller.
template <Field K>
bool some_product_escapes(const AlgebraPtr<K>& algebra, const GradedPiece<K>& left,
                          const GradedPiece<K>& right, const Subspace<K>& excluded) {
  for (const auto& u : left.reps) {
    Matrix<K> op = algebra->mult_operator(u);
    for (const auto& v : right.reps) {
      if (!excluded.contains(op.apply(v))) return true;
    }
  }
  return false;
}

}  // namespace detail

/// The full property battery.  Failures under hypotheses are falsification
/// events for the caller to escalate; they are reported, never thrown.
template <Field K>
std::vector<PropertyResult> property_battery(const AlgebraPtr<K>& algebra,
                                             const Filtrations<K>& f, const GradedData<K>& g,
                                             [[maybe_unused]] const std::vector<MorphismInfo>& morphisms,
                                             const TheoremVerdict& verdict) {
  const std::size_t m = f.m;
  std::vector<PropertyResult> out;
  detail::ColonCache<K> cache(algebra);
  const bool gorenstein = verdict.oracle_gorenstein;

  {  // I^l ⊆ J_l ⊆ I_l for every index.
    PropertyResult r;
    r.name = "ideal_inclusions";
    for (std::size_t l = 0; l <= m + 1 && r.holds; ++l) {
      if (!f.dann[l].contains(f.powers[l]))
        r.holds = false, r.details = "I^" + std::to_string(l) + " not inside J_" + std::to_string(l);
      else if (!f.ann[l].contains(f.dann[l]))
        r.holds = false, r.details = "J_" + std::to_string(l) + " not inside I_" + std::to_string(l);
    }
    out.push_back(std::move(r));
  }

  {  // Chains strictly decrease from B to 0 (re-checked on the built chains).
    PropertyResult r;
    r.name = "strict_chain_descent";
    auto strict = [&](const std::vector<IdealSubspace<K>>& c) {
      for (std::size_t l = 0; l + 1 < c.size(); ++l)
        if (c[l].dim() <= c[l + 1].dim()) return false;
      return true;
    };
    r.holds = strict(f.powers) && strict(f.ann) && strict(f.dann);
    out.push_back(std::move(r));
  }

  {  // Graded dimension vectors each sum to dim B.
    PropertyResult r;
    r.name = "splitting_dimension_sum";
    auto total = [](const std::vector<std::size_t>& v) {
      std::size_t s = 0;
      for (auto d : v) s += d;
      return s;
    };
    r.holds = total(g.type.dims_B) == algebra->dim() && total(g.type.dims_A) == algebra->dim() &&
              total(g.type.dims_M) == algebra->dim();
    out.push_back(std::move(r));
  }

  {  // Length additivity of the quotient sequences.
    PropertyResult r;
    r.name = "length_additivity";
    for (std::size_t l = 0; l <= m && r.holds; ++l) {
      bool ok_m = g.type.dims_M[l] == f.ann[l].dim() - f.ann[l + 1].dim();
      bool ok_a = g.type.dims_A[l] == f.dann[l].dim() - f.dann[l + 1].dim();
      if (!ok_m || !ok_a) r.holds = false, r.details = "at index " + std::to_string(l);
    }
    out.push_back(std::move(r));
  }

  {  // Multiplication maps on graded pieces are never zero while the degrees
     // stay within range.
    PropertyResult r;
    r.name = "graded_multiplication_nonzero";
    for (std::size_t l1 = 0; l1 <= m && r.holds; ++l1) {
      for (std::size_t l2 = 0; l1 + l2 <= m && r.holds; ++l2) {
        // Well-definedness at ideal level: J_{l1} J_{l2} ⊆ J_{l1+l2},
        // J_{l1} I_{l2} ⊆ I_{l1+l2}.
        for (const auto& u : minimal_generators(f.dann[l1])) {
          Matrix<K> op = algebra->mult_operator(u);
          for (const auto& v : minimal_generators(f.dann[l2]))
            if (!f.dann[l1 + l2].space().contains(op.apply(v)))
              r.holds = false, r.details = "A*A product escaped its target piece";
          for (const auto& v : minimal_generators(f.ann[l2]))
            if (!f.ann[l1 + l2].space().contains(op.apply(v)))
              r.holds = false, r.details = "A*M product escaped its target piece";
        }
        if (!r.holds) break;
        if (!detail::some_product_escapes(algebra, g.a_pieces[l1], g.a_pieces[l2],
                                          f.dann[l1 + l2 + 1].space())) {
          r.holds = false;
          r.details = "A_" + std::to_string(l1) + " x A_" + std::to_string(l2) + " vanishes";
        } else if (!detail::some_product_escapes(algebra, g.a_pieces[l1], g.m_pieces[l2],
                                                 f.ann[l1 + l2 + 1].space())) {
          r.holds = false;
          r.details = "A_" + std::to_string(l1) + " x M_" + std::to_string(l2) + " vanishes";
        }
      }
    }
    out.push_back(std::move(r));
  }

  {  // Linkage: 0:I_l = J_{m+1-l} and 0:J_l = I_{m+1-l}.
    PropertyResult r;
    r.name = "linkage_annihilator_duality";
    for (std::size_t l = 0; l <= m + 1 && r.holds; ++l) {
      if (cache.annihilator(f.ann[l]) != f.dann[m + 1 - l])
        r.holds = false, r.details = "0:I_" + std::to_string(l) + " is not J_" + std::to_string(m + 1 - l);
      else if (cache.annihilator(f.dann[l]) != f.ann[m + 1 - l])
        r.holds = false, r.details = "0:J_" + std::to_string(l) + " is not I_" + std::to_string(m + 1 - l);
    }
    out.push_back(std::move(r));
  }

  {  // 0:(0:(0:a)) = 0:a on every filtration ideal.
    PropertyResult r;
    r.name = "double_annihilator_closure";
    auto closure_ok = [&](const IdealSubspace<K>& a) {
      IdealSubspace<K> y = cache.annihilator(a);
      IdealSubspace<K> z = cache.annihilator(y);
      IdealSubspace<K> w = cache.annihilator(z);
      return w == y;
    };
    for (const auto* chain : {&f.powers, &f.ann, &f.dann})
      for (const auto& a : *chain)
        if (!closure_ok(a)) {
          r.holds = false;
          r.details = "closure failed on a chain ideal";
        }
    out.push_back(std::move(r));
  }

  {  // Gorenstein: dim a + dim 0:a = dim B on every filtration ideal.
    PropertyResult r;
    r.name = "gorenstein_complement_dims";
    r.applicable = gorenstein;
    if (gorenstein) {
      for (const auto* chain : {&f.powers, &f.ann, &f.dann})
        for (const auto& a : *chain)
          if (cache.annihilator(a).dim() + a.dim() != algebra->dim()) {
            r.holds = false;
            r.details = "dim a + dim 0:a != dim B";
          }
    }
    out.push_back(std::move(r));
  }

  {  // Gorenstein: the type is palindromic across A and M.
    PropertyResult r;
    r.name = "gorenstein_palindromic_type";
    r.applicable = gorenstein;
    if (gorenstein) {
      for (std::size_t l = 0; l <= m; ++l)
        if (g.type.dims_A[l] != g.type.dims_M[m - l]) {
          r.holds = false;
          r.details = "dims_A[" + std::to_string(l) + "] != dims_M[" + std::to_string(m - l) + "]";
        }
    }
    out.push_back(std::move(r));
  }

  {  // Gorenstein: A_l and M_l agree (same dimension, the module-isomorphism
     // criterion on a point) exactly when dims_A[l] = dims_A[m-l].
    PropertyResult r;
    r.name = "gorenstein_a_matches_m_iff_symmetric_rank";
    r.applicable = gorenstein;
    if (gorenstein) {
      for (std::size_t l = 0; l <= m; ++l) {
        bool same = g.type.dims_A[l] == g.type.dims_M[l];
        bool sym = g.type.dims_A[l] == g.type.dims_A[m - l];
        if (same != sym) {
          r.holds = false;
          r.details = "at index " + std::to_string(l);
        }
      }
    }
    out.push_back(std::move(r));
  }

  {  // Quasiprimitive structures: the three filtrations coincide.
    const bool qp = is_quasiprimitive(g);
    PropertyResult r;
    r.name = "quasiprimitive_chains_coincide";
    r.applicable = qp;
    if (qp) {
      for (std::size_t l = 0; l <= m + 1; ++l)
        if (f.powers[l] != f.ann[l] || f.powers[l] != f.dann[l]) {
          r.holds = false;
          r.details = "chains differ at index " + std::to_string(l);
        }
    }
    out.push_back(std::move(r));
  }

  return out;
}

/// Everything the report layer needs about one algebra.
template <Field K>
struct StructureAnalysis {
  AlgebraPtr<K> algebra;
  std::size_t m = 0;
  Filtrations<K> filtrations;
  GradedData<K> graded;
  std::vector<MorphismInfo> morphisms;
  std::vector<PairingInfo> pairings;
  TheoremVerdict verdict;
  std::vector<PropertyResult> battery;
  bool quasiprimitive = false;
  std::vector<std::string> falsifications;
};

template <Field K>
StructureAnalysis<K> analyze_structure(const AlgebraPtr<K>& algebra) {
  StructureAnalysis<K> s;
  s.algebra = algebra;
  s.m = locality_check(algebra);
  s.filtrations = build_filtrations(algebra, s.m);
  s.graded = graded_pieces(algebra, s.filtrations);
  s.morphisms = canonical_morphisms(algebra, s.filtrations);
  s.pairings = all_pairings(algebra, s.filtrations, s.graded);
  s.verdict = theorem_check(algebra, s.filtrations, s.graded, s.pairings);
  s.battery = property_battery(algebra, s.filtrations, s.graded, s.morphisms, s.verdict);
  s.quasiprimitive = is_quasiprimitive(s.graded);
  if (!s.verdict.agrees)
    s.falsifications.push_back("criterion and socle oracle disagree");
  for (const auto& r : s.battery)
    if (r.applicable && !r.holds)
      s.falsifications.push_back("property failed: " + r.name +
                                 (r.details.empty() ? "" : " (" + r.details + ")"));
  return s;
}

}  // namespace multistruct
