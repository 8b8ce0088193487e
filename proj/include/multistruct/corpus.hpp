#pragma once

#include <random>
#include <string>
#include <vector>

#include "multistruct/ideal.hpp"
#include "multistruct/problem.hpp"

namespace multistruct {

enum class CorpusKind { CompleteIntersection, Monomial, RandomBinomial };

inline const char* corpus_kind_name(CorpusKind k) {
  switch (k) {
    case CorpusKind::CompleteIntersection: return "ci";
    case CorpusKind::Monomial: return "monomial";
    case CorpusKind::RandomBinomial: return "binomial";
  }
  return "?";
}

struct CorpusSpec {
  CorpusKind kind = CorpusKind::CompleteIntersection;
  std::size_t count = 1;
  std::size_t n_vars = 0;  // 0 = mixed in {1,2,3}
  std::uint64_t seed = 1;
  std::size_t max_dim = 150;
  FieldSpec field = FieldSpec::prime(32003);
};

namespace detail {

inline VarSetPtr corpus_vars(std::size_t n) {
  static const char* names[] = {"x", "y", "z"};
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(names[i]);
  return std::make_shared<VarSet>(std::move(v));
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline TermExpr monomial_term(const std::vector<std::uint32_t>& exps, bool negative = false,
                              std::uint64_t coef = 1) {
  TermExpr t;
  t.negative = negative;
  t.coef_num = std::to_string(coef);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) t.powers.emplace_back(i, exps[i]);
  return t;
}

/// Standard-monomial count of a monomial ideal, by box enumeration.
inline std::size_t monomial_quotient_dim(const std::vector<std::vector<std::uint32_t>>& gens,
                                         const std::vector<std::uint32_t>& caps) {
  const std::size_t n = caps.size();
  std::vector<std::uint32_t> e(n, 0);
  std::size_t count = 0;
  while (true) {
    bool divisible = false;
    for (const auto& g : gens) {
      bool d = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > e[i]) {
          d = false;
          break;
        }
      if (d) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < caps[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return count;
}

}  // namespace detail

/// Deterministic corpus generation.  CompleteIntersection instances are local
/// and finite by construction (pure power plus lower-order terms in strictly
/// later variables); Monomial instances always contain a pure power of each
/// variable; RandomBinomial candidates are validated with the real engine and
/// regenerated on failure.
inline std::vector<ProblemFile> generate_corpus(const CorpusSpec& spec);

namespace detail {

inline ProblemFile make_ci(std::mt19937_64& rng, const CorpusSpec& spec, bool& valid) {
  const std::size_t n = spec.n_vars ? spec.n_vars : pick(rng, 1, 3);
  static const std::size_t degree_cap[] = {0, 20, 7, 4};
  VarSetPtr vars = corpus_vars(n);
  std::vector<PolyExpr> gens;
  std::size_t dim = 1;  // triangular shape: each f_i is monic of degree d_i in x_i
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t d = pick(rng, 2, degree_cap[n]);
    dim *= d;
    PolyExpr p;
    std::vector<std::uint32_t> lead(n, 0);
    lead[i] = static_cast<std::uint32_t>(d);
    p.terms.push_back(monomial_term(lead));
    if (i + 1 < n) {
      std::size_t tail_terms = pick(rng, 0, 2);
      for (std::size_t t = 0; t < tail_terms; ++t) {
        std::size_t deg = pick(rng, 1, std::min<std::size_t>(d - 1, 4));
        std::vector<std::uint32_t> e(n, 0);
        for (std::size_t u = 0; u < deg; ++u) ++e[pick(rng, i + 1, n - 1)];
        p.terms.push_back(monomial_term(e, rng() % 2 == 0, pick(rng, 1, 9)));
      }
    }
    gens.push_back(std::move(p));
  }
  valid = dim <= spec.max_dim;
  return ProblemFile(spec.field, vars, std::move(gens), ProblemMode::Intrinsic);
}

inline ProblemFile make_monomial(std::mt19937_64& rng, const CorpusSpec& spec, bool& valid) {
  const std::size_t n = spec.n_vars ? spec.n_vars : pick(rng, 1, 3);
  static const std::size_t power_cap[] = {0, 20, 8, 5};
  VarSetPtr vars = corpus_vars(n);
  std::vector<std::uint32_t> caps(n);
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    caps[i] = static_cast<std::uint32_t>(pick(rng, 2, power_cap[n]));
    std::vector<std::uint32_t> e(n, 0);
    e[i] = caps[i];
    gens.push_back(std::move(e));
  }
  std::size_t extras = pick(rng, 0, 2 * n);
  for (std::size_t t = 0; t < extras; ++t) {
    std::vector<std::uint32_t> e(n, 0);
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<std::uint32_t>(rng() % caps[i]);
      deg += e[i];
    }
    if (deg == 0) continue;  // the unit monomial would collapse the ring
    gens.push_back(std::move(e));
  }
  valid = monomial_quotient_dim(gens, caps) <= spec.max_dim;
  std::vector<PolyExpr> polys;
  for (const auto& e : gens) {
    PolyExpr p;
    p.terms.push_back(monomial_term(e));
    polys.push_back(std::move(p));
  }
  return ProblemFile(spec.field, vars, std::move(polys), ProblemMode::Intrinsic);
}

inline ProblemFile make_binomial(std::mt19937_64& rng, const CorpusSpec& spec) {
  const std::size_t n = spec.n_vars ? spec.n_vars : pick(rng, 1, 3);
  static const std::size_t power_cap[] = {0, 12, 6, 4};
  VarSetPtr vars = corpus_vars(n);
  std::vector<std::uint32_t> caps(n);
  std::vector<PolyExpr> gens;
  for (std::size_t i = 0; i < n; ++i) {
    caps[i] = static_cast<std::uint32_t>(pick(rng, 2, power_cap[n]));
    std::vector<std::uint32_t> e(n, 0);
    e[i] = caps[i];
    PolyExpr p;
    p.terms.push_back(monomial_term(e));
    gens.push_back(std::move(p));
  }
  auto random_monomial = [&](bool allow_unit) {
    std::vector<std::uint32_t> e(n, 0);
    std::uint32_t deg = 0;
    for (int tries = 0; tries < 50; ++tries) {
      deg = 0;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = static_cast<std::uint32_t>(rng() % caps[i]);
        deg += e[i];
      }
      if (deg > 0 || allow_unit) break;
    }
    return e;
  };
  std::size_t extra_monos = pick(rng, 0, n);
  for (std::size_t t = 0; t < extra_monos; ++t) {
    auto e = random_monomial(false);
    PolyExpr p;
    p.terms.push_back(monomial_term(e));
    gens.push_back(std::move(p));
  }
  std::size_t binomials = pick(rng, 1, n);
  for (std::size_t t = 0; t < binomials; ++t) {
    auto lead = random_monomial(false);
    // A small fraction of candidates get a unit tail; those typically fail
    // the locality check and exercise the regeneration path.
    bool unit_tail = rng() % 20 == 0;
    auto tail = unit_tail ? std::vector<std::uint32_t>(n, 0) : random_monomial(false);
    PolyExpr p;
    p.terms.push_back(monomial_term(lead));
    p.terms.push_back(monomial_term(tail, true, pick(rng, 1, 9)));
    gens.push_back(std::move(p));
  }
  return ProblemFile(spec.field, vars, std::move(gens), ProblemMode::Intrinsic);
}

}  // namespace detail

namespace detail {

template <Field K>
std::size_t probe_dimension_as(const ProblemFile& pf) {
  auto gens = instantiate_generators<K>(pf);
  auto gb = buchberger(gens);
  auto pres = present_algebra(std::move(gb), pf.field());
  if (pres->zero_ring) return 0;
  locality_check(pres);  // throws NotLocal on bad candidates
  return pres->dim();
}

}  // namespace detail

/// Validity probe used by the generator and exposed for tests: runs the
/// engine far enough to know whether analysis would start.  Returns 0 when
/// the candidate is rejected (unit ideal or non-local).
inline std::size_t probe_dimension(const ProblemFile& pf) {
  try {
    if (pf.field().kind() == FieldSpec::Kind::Prime)
      return detail::probe_dimension_as<Fp>(pf);
    return detail::probe_dimension_as<Rat>(pf);
  } catch (const NotLocal&) {
    return 0;
  }
}

inline std::vector<ProblemFile> generate_corpus(const CorpusSpec& spec) {
  if (spec.count < 1) throw Error("corpus count must be at least 1");
  if (spec.n_vars > 3) throw Error("corpus generator supports 1..3 variables");
  std::mt19937_64 rng(spec.seed);
  std::vector<ProblemFile> out;
  std::size_t consecutive_failures = 0;
  while (out.size() < spec.count) {
    if (consecutive_failures >= 100) throw GenerationExhausted();
    switch (spec.kind) {
      case CorpusKind::CompleteIntersection: {
        bool valid = false;
        ProblemFile pf = detail::make_ci(rng, spec, valid);
        if (valid)
          out.push_back(std::move(pf)), consecutive_failures = 0;
        else
          ++consecutive_failures;
        break;
      }
      case CorpusKind::Monomial: {
        bool valid = false;
        ProblemFile pf = detail::make_monomial(rng, spec, valid);
        if (valid)
          out.push_back(std::move(pf)), consecutive_failures = 0;
        else
          ++consecutive_failures;
        break;
      }
      case CorpusKind::RandomBinomial: {
        ProblemFile pf = detail::make_binomial(rng, spec);
        std::size_t d = probe_dimension(pf);
        if (d >= 1 && d <= spec.max_dim)
          out.push_back(std::move(pf)), consecutive_failures = 0;
        else
          ++consecutive_failures;
        break;
      }
    }
  }
  return out;
}

}  // namespace multistruct
