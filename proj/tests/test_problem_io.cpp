#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include "multistruct/analysis.hpp"

using namespace multistruct;

TEST_CASE("parsing the worked example file") {
  auto pf = parse_problem("field 32003\nvars x, y\nideal x^3; x*y; y^4\n");
  CHECK(pf.field().modulus() == 32003);
  CHECK(pf.vars()->names() == std::vector<std::string>{"x", "y"});
  REQUIRE(pf.generators().size() == 3);
  CHECK(pf.mode() == ProblemMode::Intrinsic);
  CHECK(print_poly(pf.generators()[0], *pf.vars()) == "x^3");
  CHECK(print_poly(pf.generators()[1], *pf.vars()) == "x*y");
}

TEST_CASE("grammar niceties") {
  // comments, blank lines, fractions, mode line, signs
  auto pf = parse_problem(
      "# a quotient over Q\n"
      "field Q\n"
      "\n"
      "vars x, y   # two variables\n"
      "ideal x^3 + x*y - 2/3*y^4; -y^5\n"
      "mode embedded\n");
  CHECK(pf.field().kind() == FieldSpec::Kind::Rationals);
  CHECK(pf.mode() == ProblemMode::Embedded);
  CHECK(print_poly(pf.generators()[0], *pf.vars()) == "x^3 + x*y - 2/3*y^4");
  CHECK(print_poly(pf.generators()[1], *pf.vars()) == "-y^5");
}

TEST_CASE("grammar errors carry positions") {
  // missing field line
  try {
    parse_problem("vars x\nideal x^2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  // implicit multiplication
  try {
    parse_problem("field Q\nvars x\nideal 2x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() == 8);
  }
  // unknown variable
  CHECK_THROWS_AS(parse_problem("field Q\nvars x\nideal x + z\n"), UnknownVariable);
  // composite modulus
  CHECK_THROWS_AS(parse_problem("field 32001\nvars x\nideal x^2\n"), InvalidField);
  // 64-bit modulus rejected
  CHECK_THROWS_AS(parse_problem("field 9223372036854775907\nvars x\nideal x^2\n"), InvalidField);
  // duplicate lines
  CHECK_THROWS_AS(parse_problem("field Q\nfield Q\nvars x\nideal x\n"), ParseError);
  // duplicate variables
  CHECK_THROWS_AS(parse_problem("field Q\nvars x, x\nideal x\n"), ParseError);
  // empty input
  CHECK_THROWS_AS(parse_problem(""), ParseError);
  // trailing garbage
  CHECK_THROWS_AS(parse_problem("field Q extra\nvars x\nideal x\n"), ParseError);
  // ^ without exponent
  CHECK_THROWS_AS(parse_problem("field Q\nvars x\nideal x^\n"), ParseError);
}

TEST_CASE("parse-print identity") {
  for (const char* text : {
           "field 32003\nvars x, y\nideal x^3; x*y; y^4\nmode intrinsic\n",
           "field Q\nvars x, y, z\nideal 2*x^2 - 3/4*y*z + 1; z^5\nmode embedded\n",
           "field 2\nvars x\nideal x^2 + x\nmode intrinsic\n",
           "field Q\nvars x\nideal 0*x + 7\nmode intrinsic\n",
       }) {
    CAPTURE(text);
    auto pf = parse_problem(text);
    auto printed = print_problem(pf);
    auto reparsed = parse_problem(printed);
    CHECK(reparsed == pf);
    CHECK(print_problem(reparsed) == printed);
  }
}

TEST_CASE("parse-print identity on generated corpora") {
  for (auto kind : {CorpusKind::CompleteIntersection, CorpusKind::Monomial,
                    CorpusKind::RandomBinomial}) {
    CorpusSpec spec;
    spec.kind = kind;
    spec.count = 15;
    spec.seed = 321;
    for (const auto& pf : generate_corpus(spec)) {
      auto printed = print_problem(pf);
      CHECK(parse_problem(printed) == pf);
    }
  }
}

TEST_CASE("fraction coefficients in prime fields") {
  // 1/2 mod 32003 is (32003+1)/2
  auto pf = parse_problem("field 32003\nvars x\nideal 1/2*x^2\n");
  auto gens = instantiate_generators<Fp>(pf);
  CHECK(gens[0].leading_coefficient() == Fp(16002, 32003));
  // denominator divisible by p is a zero division at instantiation time
  auto bad = parse_problem("field 32003\nvars x\nideal 1/32003*x^2\n");
  CHECK_THROWS_AS(instantiate_generators<Fp>(bad), DivisionByZero);
}

TEST_CASE("coefficient factors merge, exponents accumulate") {
  auto pf = parse_problem("field Q\nvars x\nideal 2*x*3*x^2\n");
  auto gens = instantiate_generators<Rat>(pf);
  CHECK(gens[0].to_string() == "6*x^3");
  CHECK(print_poly(pf.generators()[0], *pf.vars()) == "6*x^3");
}

TEST_CASE("report JSON round trip and schema") {
  auto report = run_analysis(parse_problem("field 32003\nvars x, y\nideal x^3; x*y; y^4\n"));
  Json j = to_json(report);
  CHECK(j.at("schema_version") == 1);
  StructureReport back = report_from_json(j);
  CHECK(to_json(back) == j);
  // embedded reports round-trip too
  auto emb = run_analysis(
      parse_problem("field 32003\nvars x, y\nideal x^3; x*y; y^4\nmode embedded\n"));
  Json je = to_json(emb);
  CHECK(to_json(report_from_json(je)) == je);
  REQUIRE(emb.embedded.has_value());
  CHECK(emb.embedded->annihilator[3] == std::vector<std::string>{"x^2", "y^3"});
}

TEST_CASE("golden report file for the worked example") {
  auto report = run_analysis(parse_problem("field 32003\nvars x, y\nideal x^3; x*y; y^4\n"));
  Json j = to_json(report);
  j.erase("timing_ms");
  std::ifstream in(std::string(MULTISTRUCT_TEST_DATA) + "/golden_worked_example.json");
  REQUIRE(in.good());
  Json expected = Json::parse(in);
  CHECK(j == expected);
}

TEST_CASE("dimension signature is identical across fields for the worked example") {
  auto base = parse_problem("field 32003\nvars x, y\nideal x^3; x*y; y^4\n");
  auto r0 = run_analysis(base);
  auto r2 = run_analysis(base.with_field(FieldSpec::prime(2)));
  auto rq = run_analysis(base.with_field(FieldSpec::rationals()));
  CHECK(dimension_signature(r0) == dimension_signature(r2));
  CHECK(dimension_signature(r0) == dimension_signature(rq));
}
