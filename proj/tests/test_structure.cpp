#include <catch2/catch_amalgamated.hpp>

#include "multistruct/analysis.hpp"
#include "support/brute.hpp"

using namespace multistruct;

namespace {

StructureReport analyze_text(const std::string& text) {
  return run_analysis(parse_problem(text));
}

using Dims = std::vector<std::size_t>;

}  // namespace

TEST_CASE("worked example: full structure of k[x,y]/(x^3, xy, y^4)") {
  auto r = analyze_text("field 32003\nvars x, y\nideal x^3; x*y; y^4\n");

  // Frozen values, derived by brute-force linear algebra on the 6-element
  // monomial basis (re-derived below by the independent oracle).
  CHECK(r.dim_B == 6);
  CHECK(r.m == 3);
  CHECK(r.powers_dims == Dims{6, 5, 3, 1, 0});
  CHECK(r.ann_dims == Dims{6, 5, 4, 2, 0});
  CHECK(r.dann_dims == Dims{6, 5, 3, 2, 0});
  CHECK(r.type.dims_B == Dims{1, 2, 2, 1});
  CHECK(r.type.dims_A == Dims{1, 2, 1, 2});
  CHECK(r.type.dims_M == Dims{1, 1, 2, 2});
  CHECK(r.type.dims_B != r.type.dims_A);
  CHECK(r.type.dims_A != r.type.dims_M);
  CHECK(r.type.dims_B != r.type.dims_M);

  CHECK_FALSE(r.theorem.cond_a);
  CHECK(r.theorem.dim_a_top == 2);
  CHECK(r.theorem.dim_m_top == 2);
  CHECK_FALSE(r.theorem.criterion_gorenstein);
  CHECK(r.theorem.socle_dim == 2);
  CHECK_FALSE(r.theorem.oracle_gorenstein);
  CHECK(r.theorem.agrees);
  CHECK(r.falsifications.empty());
  CHECK_FALSE(r.quasiprimitive);

  // the map B_3 -> A_3 has rank 1 into a 2-dimensional target
  CHECK(r.morphisms[3].rank_b_to_a == 1);
  CHECK_FALSE(r.morphisms[3].b_to_a_bijective);
  // at l = 0 the pairing target Hom(M_3, M_3) is 4-dimensional
  CHECK(r.pairings[0].dim_a == 1);
  CHECK(r.pairings[0].dim_hom == 4);
  CHECK_FALSE(r.pairings[0].bijective);

  // independent oracle: exhaustive computation over the same ring
  auto ring = brute::Ring::monomial_quotient(32003, 2, {{3, 0}, {1, 1}, {0, 4}});
  REQUIRE(ring.dim() == 6);
  auto chains = brute::chains(ring);
  CHECK(chains.m == 3);
  CHECK(brute::chain_dims(chains.powers) == r.powers_dims);
  CHECK(brute::chain_dims(chains.ann) == r.ann_dims);
  CHECK(brute::chain_dims(chains.dann) == r.dann_dims);
  CHECK(brute::graded_dims(chains.powers) == r.type.dims_B);
  CHECK(brute::graded_dims(chains.ann) == r.type.dims_M);
  CHECK(brute::graded_dims(chains.dann) == r.type.dims_A);
  CHECK(brute::socle_dim(ring) == r.theorem.socle_dim);
}

TEST_CASE("principal nilpotent k[x]/(x^3): all chains coincide") {
  auto r = analyze_text("field Q\nvars x\nideal x^3\n");
  CHECK(r.dim_B == 3);
  CHECK(r.m == 2);
  CHECK(r.powers_dims == Dims{3, 2, 1, 0});
  CHECK(r.ann_dims == Dims{3, 2, 1, 0});
  CHECK(r.dann_dims == Dims{3, 2, 1, 0});
  CHECK(r.theorem.cond_a);
  CHECK(r.theorem.cond_b);
  CHECK(r.theorem.cond_c);
  CHECK(r.theorem.criterion_gorenstein);
  CHECK(r.theorem.socle_dim == 1);
  CHECK(r.theorem.agrees);
  CHECK(r.quasiprimitive);

  auto ring = brute::Ring::monomial_quotient(32003, 1, {{3}});
  auto chains = brute::chains(ring);
  CHECK(brute::chain_dims(chains.powers) == r.powers_dims);
  CHECK(brute::chain_dims(chains.ann) == r.ann_dims);
  CHECK(brute::chain_dims(chains.dann) == r.dann_dims);
}

TEST_CASE("k[x,y]/(x^2, y^2): symmetric type, bijective pairings") {
  auto r = analyze_text("field Q\nvars x, y\nideal x^2; y^2\n");
  CHECK(r.dim_B == 4);
  CHECK(r.m == 2);
  CHECK(r.type.dims_B == Dims{1, 2, 1});
  CHECK(r.type.dims_A == Dims{1, 2, 1});
  CHECK(r.type.dims_M == Dims{1, 2, 1});
  for (const auto& p : r.pairings) CHECK(p.bijective);
  // middle pairing is the 2x2 swap-shaped map of rank 2
  CHECK(r.pairings[1].dim_a == 2);
  CHECK(r.pairings[1].dim_hom == 2);
  CHECK(r.pairings[1].rank == 2);
  // l = 0: A_0 = k -> Hom(M_2, M_2) = k is the identity
  CHECK(r.pairings[0].dim_a == 1);
  CHECK(r.pairings[0].dim_hom == 1);
  CHECK(r.pairings[0].bijective);
  CHECK(r.theorem.criterion_gorenstein);
  CHECK(r.theorem.oracle_gorenstein);
  CHECK(r.theorem.agrees);
  for (const auto& pr : r.properties)
    if (pr.applicable) CHECK(pr.holds);

  auto ring = brute::Ring::monomial_quotient(32003, 2, {{2, 0}, {0, 2}});
  auto chains = brute::chains(ring);
  CHECK(brute::graded_dims(chains.dann) == r.type.dims_A);
  CHECK(brute::socle_dim(ring) == 1);
}

TEST_CASE("fat point k[x,y]/(x^2, xy, y^2): condition (a) fails") {
  auto r = analyze_text("field 32003\nvars x, y\nideal x^2; x*y; y^2\n");
  CHECK(r.dim_B == 3);
  CHECK(r.m == 1);
  CHECK(r.type.dims_A == Dims{1, 2});
  CHECK_FALSE(r.theorem.cond_a);
  CHECK(r.theorem.dim_a_top == 2);
  CHECK(r.theorem.socle_dim == 2);
  CHECK_FALSE(r.theorem.oracle_gorenstein);
  CHECK(r.theorem.agrees);
}

TEST_CASE("trivial structure B = k") {
  auto r = analyze_text("field Q\nvars x\nideal x\n");
  CHECK(r.dim_B == 1);
  CHECK(r.m == 0);
  CHECK(r.trivial_multiplicity_one);
  CHECK(r.powers_dims == Dims{1, 0});
  CHECK(r.type.dims_A == Dims{1});
  CHECK(r.theorem.criterion_gorenstein);
  CHECK(r.theorem.socle_dim == 1);
  CHECK(r.theorem.agrees);
  CHECK(r.quasiprimitive);
}

TEST_CASE("quasiprimitive k[x]/(x^4): chains equal, morphisms bijective") {
  auto r = analyze_text("field 32003\nvars x\nideal x^4\n");
  CHECK(r.quasiprimitive);
  for (const auto& mo : r.morphisms) {
    CHECK(mo.b_to_a_bijective);
    CHECK(mo.a_to_m_bijective);
  }
  bool saw_quasi = false;
  for (const auto& p : r.properties)
    if (p.name == "quasiprimitive_chains_coincide") {
      saw_quasi = true;
      CHECK(p.applicable);
      CHECK(p.holds);
    }
  CHECK(saw_quasi);
}

TEST_CASE("non-monomial Gorenstein with distinct A and M chains") {
  // A complete intersection with an inhomogeneous tie between the variables;
  // found while testing: the canonical map A_l -> M_l need not be bijective
  // at the symmetric middle index even though the ring is Gorenstein.
  auto r = analyze_text("field 32003\nvars x, y, z\nideal x^2; y^4 + 6*z^3; z^4\n");
  CHECK(r.dim_B == 32);
  CHECK(r.m == 8);
  CHECK(r.theorem.criterion_gorenstein);
  CHECK(r.theorem.oracle_gorenstein);
  CHECK(r.theorem.agrees);
  CHECK(r.falsifications.empty());
  // palindromic duality of the type
  for (std::size_t l = 0; l <= r.m; ++l)
    CHECK(r.type.dims_A[l] == r.type.dims_M[r.m - l]);
  // ... while the A and M filtrations themselves differ
  CHECK(r.ann_dims != r.dann_dims);
  // and the middle canonical map is not bijective (rank 2 out of 6)
  CHECK(r.type.dims_A[4] == 6);
  CHECK(r.morphisms[4].rank_a_to_m == 2);
}

TEST_CASE("property battery rows are all present") {
  auto r = analyze_text("field 32003\nvars x, y\nideal x^3; x*y; y^4\n");
  std::vector<std::string> names;
  for (const auto& p : r.properties) names.push_back(p.name);
  for (const char* expected :
       {"ideal_inclusions", "strict_chain_descent", "splitting_dimension_sum",
        "length_additivity", "graded_multiplication_nonzero", "linkage_annihilator_duality",
        "double_annihilator_closure", "gorenstein_complement_dims",
        "gorenstein_palindromic_type", "gorenstein_a_matches_m_iff_symmetric_rank",
        "quasiprimitive_chains_coincide"}) {
    CAPTURE(expected);
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  }
}

TEST_CASE("battery on a spread of instances never fails under hypotheses") {
  for (const char* text : {
           "field 32003\nvars x\nideal x^9\n",
           "field 32003\nvars x, y\nideal x^2; y^5\n",
           "field 32003\nvars x, y\nideal x^3 + y^2; y^3\n",
           "field 32003\nvars x, y, z\nideal x^2; y^2; z^2\n",
           "field 32003\nvars x, y\nideal x^4; x^2*y; y^3\n",
           "field Q\nvars x, y\nideal x^3 - y^2; y^4\n",
       }) {
    CAPTURE(text);
    auto r = analyze_text(text);
    CHECK(r.theorem.agrees);
    CHECK(r.falsifications.empty());
    for (const auto& p : r.properties) {
      CAPTURE(p.name, p.details);
      if (p.applicable) CHECK(p.holds);
    }
  }
}

TEST_CASE("chain dims match the brute oracle on assorted monomial ideals") {
  struct Case {
    std::size_t n;
    std::vector<brute::Expo> gens;
    std::string text;
  };
  std::vector<Case> cases{
      {2, {{4, 0}, {0, 3}}, "field 32003\nvars x, y\nideal x^4; y^3\n"},
      {2, {{4, 0}, {2, 1}, {0, 3}}, "field 32003\nvars x, y\nideal x^4; x^2*y; y^3\n"},
      {3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}},
       "field 32003\nvars x, y, z\nideal x^2; y^2; z^2; x*y*z\n"},
      {1, {{12}}, "field 32003\nvars x\nideal x^12\n"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    auto r = analyze_text(c.text);
    auto ring = brute::Ring::monomial_quotient(32003, c.n, c.gens);
    auto chains = brute::chains(ring);
    CHECK(r.dim_B == ring.dim());
    CHECK(r.m == chains.m);
    CHECK(r.powers_dims == brute::chain_dims(chains.powers));
    CHECK(r.ann_dims == brute::chain_dims(chains.ann));
    CHECK(r.dann_dims == brute::chain_dims(chains.dann));
    CHECK(r.theorem.socle_dim == brute::socle_dim(ring));
  }
}

TEST_CASE("math-domain errors surface with the right types") {
  CHECK_THROWS_AS(analyze_text("field Q\nvars x\nideal x^2 - 1\n"), NotLocal);
  // a reduced point away from the origin is not a multiple structure on it
  CHECK_THROWS_AS(analyze_text("field Q\nvars x\nideal x - 1\n"), NotLocal);
  CHECK_THROWS_AS(analyze_text("field Q\nvars x, y\nideal x*y\n"), NotZeroDimensional);
  CHECK_THROWS_AS(analyze_text("field Q\nvars x\nideal x; x - 1\n"), ZeroRing);
}
