#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multistruct/polynomial.hpp"

namespace multistruct {

enum class ProblemMode { Intrinsic, Embedded };

/// One signed term of a generator as written: sign, an exact fraction
/// coefficient (decimal strings; "1"/"1" when absent), and variable powers.
struct TermExpr {
  bool negative = false;
  std::string coef_num = "1";
  std::string coef_den = "1";
  std::vector<std::pair<std::size_t, std::uint32_t>> powers;  // (var index, exponent)

  bool operator==(const TermExpr&) const = default;
};

struct PolyExpr {
  std::vector<TermExpr> terms;

  bool operator==(const PolyExpr&) const = default;
};

/// Field-independent parsed problem: the polynomials stay symbolic until a
/// scalar type is chosen.
class ProblemFile {
 public:
  ProblemFile(FieldSpec field, VarSetPtr vars, std::vector<PolyExpr> generators,
              ProblemMode mode)
      : field_(std::move(field)), vars_(std::move(vars)), generators_(std::move(generators)),
        mode_(mode) {}

  const FieldSpec& field() const { return field_; }
  const VarSetPtr& vars() const { return vars_; }
  const std::vector<PolyExpr>& generators() const { return generators_; }
  ProblemMode mode() const { return mode_; }

  ProblemFile with_field(FieldSpec f) const {
    return ProblemFile(std::move(f), vars_, generators_, mode_);
  }

  bool operator==(const ProblemFile& o) const {
    return field_ == o.field_ && *vars_ == *o.vars_ && generators_ == o.generators_ &&
           mode_ == o.mode_;
  }

 private:
  FieldSpec field_;
  VarSetPtr vars_;
  std::vector<PolyExpr> generators_;
  ProblemMode mode_;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Character cursor over one logical line; columns are 1-based.
struct LineCursor {
  const std::string& s;
  std::size_t line;
  std::size_t pos = 0;

  std::size_t col() const { return pos + 1; }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  void skip_spaces() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }

  std::string read_ident() {
    skip_spaces();
    if (!ident_start(peek())) fail("expected an identifier");
    std::size_t start = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }

  std::string read_digits() {
    skip_spaces();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && ident_start(s[pos]))
      fail("implicit multiplication is not allowed; write '*'");
    return s.substr(start, pos - start);
  }
};

inline TermExpr parse_term(LineCursor& c, const VarSet& vars, bool negative) {
  using boost::multiprecision::cpp_int;
  TermExpr t;
  t.negative = negative;
  cpp_int num = 1, den = 1;
  bool expect_factor = true;
  while (expect_factor) {
    c.skip_spaces();
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::string a = c.read_digits();
      std::string b = "1";
      c.skip_spaces();
      if (c.peek() == '/') {
        ++c.pos;
        b = c.read_digits();
      }
      num *= cpp_int(a);
      den *= cpp_int(b);
    } else if (ident_start(c.peek())) {
      std::size_t col = c.col();
      std::string name = c.read_ident();
      auto idx = vars.index_of(name);
      if (!idx) throw UnknownVariable(c.line, col, name);
      std::uint32_t exp = 1;
      c.skip_spaces();
      if (c.peek() == '^') {
        ++c.pos;
        std::string digits = c.read_digits();
        if (digits.size() > 9) c.fail("exponent out of range");
        unsigned long long e = std::stoull(digits);
        if (e > 0xFFFFFFFFull) c.fail("exponent out of range");
        exp = static_cast<std::uint32_t>(e);
      }
      bool merged = false;
      for (auto& [vi, ve] : t.powers) {
        if (vi == *idx) {
          std::uint64_t s = static_cast<std::uint64_t>(ve) + exp;
          if (s > 0xFFFFFFFFull) c.fail("exponent out of range");
          ve = static_cast<std::uint32_t>(s);
          merged = true;
          break;
        }
      }
      if (!merged) t.powers.emplace_back(*idx, exp);
    } else {
      c.fail("expected a coefficient or a variable");
    }
    c.skip_spaces();
    if (c.peek() == '*') {
      ++c.pos;
      expect_factor = true;
    } else {
      expect_factor = false;
    }
  }
  t.coef_num = num.str();
  t.coef_den = den.str();
  return t;
}

inline PolyExpr parse_poly(LineCursor& c, const VarSet& vars) {
  PolyExpr p;
  c.skip_spaces();
  bool negative = false;
  if (c.peek() == '+' || c.peek() == '-') {
    negative = c.peek() == '-';
    ++c.pos;
  }
  p.terms.push_back(parse_term(c, vars, negative));
  while (true) {
    c.skip_spaces();
    if (c.peek() == '+' || c.peek() == '-') {
      negative = c.peek() == '-';
      ++c.pos;
      p.terms.push_back(parse_term(c, vars, negative));
    } else {
      break;
    }
  }
  return p;
}

}  // namespace detail

/// Parses the line-oriented problem grammar:
///   field 32003 | field Q
///   vars x, y
///   ideal x^3; x*y; y^4
///   mode intrinsic|embedded     (optional)
/// '#' starts a comment; the ideal line needs field and vars declared first.
inline ProblemFile parse_problem(const std::string& text) {
  std::optional<FieldSpec> field;
  VarSetPtr vars;
  std::optional<std::vector<PolyExpr>> gens;
  std::optional<ProblemMode> mode;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t field_line = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    detail::LineCursor c{line, line_no};
    c.skip_spaces();
    if (c.done()) {
      if (pos > text.size()) break;
      continue;
    }
    std::string directive = c.read_ident();
    if (directive == "field") {
      if (field) c.fail("duplicate 'field' line");
      c.skip_spaces();
      if (c.peek() == 'Q') {
        ++c.pos;
        field = FieldSpec::rationals();
      } else {
        std::string digits = c.read_digits();
        if (digits.size() > 19) throw InvalidField("modulus must fit in 63 bits");
        field = FieldSpec::prime(std::stoull(digits));  // InvalidField on composites
      }
      field_line = line_no;
    } else if (directive == "vars") {
      if (vars) c.fail("duplicate 'vars' line");
      std::vector<std::string> names;
      names.push_back(c.read_ident());
      c.skip_spaces();
      while (c.peek() == ',') {
        ++c.pos;
        names.push_back(c.read_ident());
        c.skip_spaces();
      }
      try {
        vars = std::make_shared<VarSet>(std::move(names));
      } catch (const Error& e) {
        throw ParseError(line_no, 1, e.what());
      }
    } else if (directive == "ideal") {
      if (gens) c.fail("duplicate 'ideal' line");
      if (!field) c.fail("'ideal' requires a 'field' line first");
      if (!vars) c.fail("'ideal' requires a 'vars' line first");
      std::vector<PolyExpr> list;
      list.push_back(detail::parse_poly(c, *vars));
      c.skip_spaces();
      while (c.peek() == ';') {
        ++c.pos;
        list.push_back(detail::parse_poly(c, *vars));
        c.skip_spaces();
      }
      gens = std::move(list);
    } else if (directive == "mode") {
      if (mode) c.fail("duplicate 'mode' line");
      std::string which = c.read_ident();
      if (which == "intrinsic")
        mode = ProblemMode::Intrinsic;
      else if (which == "embedded")
        mode = ProblemMode::Embedded;
      else
        c.fail("mode must be 'intrinsic' or 'embedded'");
    } else {
      c.fail("unknown directive '" + directive + "'");
    }
    detail::LineCursor tail{line, line_no, c.pos};
    tail.skip_spaces();
    if (!tail.done()) tail.fail("trailing input");
    if (pos > text.size()) break;
  }
  (void)field_line;
  if (!field) throw ParseError(line_no, 1, "missing 'field' line");
  if (!vars) throw ParseError(line_no, 1, "missing 'vars' line");
  if (!gens || gens->empty()) throw ParseError(line_no, 1, "missing 'ideal' line");
  return ProblemFile(*field, vars, std::move(*gens), mode.value_or(ProblemMode::Intrinsic));
}

inline std::string print_poly(const PolyExpr& p, const VarSet& vars) {
  std::string s;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const TermExpr& t = p.terms[i];
    if (i == 0) {
      if (t.negative) s += "-";
    } else {
      s += t.negative ? " - " : " + ";
    }
    std::string coef = t.coef_num;
    if (t.coef_den != "1") coef += "/" + t.coef_den;
    bool coef_is_one = coef == "1";
    std::string monos;
    for (std::size_t k = 0; k < t.powers.size(); ++k) {
      if (k) monos += "*";
      monos += vars.name(t.powers[k].first);
      if (t.powers[k].second != 1) monos += "^" + std::to_string(t.powers[k].second);
    }
    if (monos.empty()) {
      s += coef;
    } else if (coef_is_one) {
      s += monos;
    } else {
      s += coef + "*" + monos;
    }
  }
  return s;
}

/// Canonical text form; parse(print(p)) == p.
inline std::string print_problem(const ProblemFile& pf) {
  std::string s = "field " + pf.field().to_string() + "\n";
  s += "vars ";
  for (std::size_t i = 0; i < pf.vars()->size(); ++i) {
    if (i) s += ", ";
    s += pf.vars()->name(i);
  }
  s += "\nideal ";
  for (std::size_t i = 0; i < pf.generators().size(); ++i) {
    if (i) s += "; ";
    s += print_poly(pf.generators()[i], *pf.vars());
  }
  s += "\nmode ";
  s += pf.mode() == ProblemMode::Embedded ? "embedded" : "intrinsic";
  s += "\n";
  return s;
}

/// Realizes the symbolic generators over a concrete scalar type.
template <Field K>
std::vector<Polynomial<K>> instantiate_generators(const ProblemFile& pf) {
  std::vector<Polynomial<K>> out;
  const std::size_t n = pf.vars()->size();
  for (const auto& pe : pf.generators()) {
    std::vector<Term<K>> terms;
    for (const auto& te : pe.terms) {
      K c = FieldOps<K>::from_fraction(pf.field(), te.coef_num, te.coef_den);
      if (te.negative) c = -c;
      std::vector<std::uint32_t> exps(n, 0);
      for (const auto& [vi, ve] : te.powers) exps[vi] += ve;
      terms.push_back({Monomial(std::move(exps)), std::move(c)});
    }
    out.push_back(Polynomial<K>::from_terms(pf.vars(), std::move(terms)));
  }
  return out;
}

}  // namespace multistruct
