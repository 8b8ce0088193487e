#pragma once

#include <map>
#include <utility>
#include <vector>

#include "multistruct/monomial.hpp"
#include "multistruct/scalars.hpp"

namespace multistruct {

template <Field K>
struct Term {
  Monomial mono;
  K coef;
};

/// Sparse polynomial: terms strictly descending in the monomial order, no
/// zero coefficients.  The zero polynomial is the empty term list.
template <Field K>
class Polynomial {
 public:
  explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

  /// Terms may arrive in any order; equal monomials are combined.
  static Polynomial from_terms(VarSetPtr vars, std::vector<Term<K>> terms) {
    std::map<Monomial, K, MonomialGreater> acc;
    for (auto& t : terms) {
      if (t.mono.n_vars() != vars->size()) throw VarSetMismatch();
      auto it = acc.find(t.mono);
      if (it == acc.end())
        acc.emplace(std::move(t.mono), std::move(t.coef));
      else
        it->second += t.coef;
    }
    Polynomial p(std::move(vars));
    for (auto& [m, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  static Polynomial zero(VarSetPtr vars) { return Polynomial(std::move(vars)); }

  static Polynomial constant(VarSetPtr vars, const K& c) {
    Polynomial p(vars);
    if (!c.is_zero()) p.terms_.push_back({Monomial::unit(vars->size()), c});
    return p;
  }

  static Polynomial monomial(VarSetPtr vars, Monomial m, const K& c) {
    Polynomial p(vars);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t n_terms() const { return terms_.size(); }

  const Term<K>& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const K& leading_coefficient() const { return leading_term().coef; }

  std::uint64_t degree() const { return leading_term().mono.degree(); }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

  Polynomial operator-() const {
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coef});
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check(o);
    std::map<Monomial, K, MonomialGreater> acc;
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        K c = a.coef * b.coef;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else
          it->second += c;
      }
    }
    Polynomial r(vars_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
  }

  /// f * c·m, the workhorse of polynomial reduction.
  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
  }

  Polynomial times_scalar(const K& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return times_scalar(leading_coefficient().inverse());
  }

  bool operator==(const Polynomial& o) const {
    check(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      std::string c = t.coef.to_string();
      bool neg = !c.empty() && c[0] == '-';
      if (i == 0) {
        if (neg) s += "-", c = c.substr(1);
      } else {
        s += neg ? " - " : " + ";
        if (neg) c = c.substr(1);
      }
      bool unit_coef = c == "1";
      if (t.mono.is_unit()) {
        s += c;
      } else if (unit_coef) {
        s += t.mono.to_string(*vars_);
      } else {
        s += c + "*" + t.mono.to_string(*vars_);
      }
    }
    return s;
  }

 private:
  void check(const Polynomial& o) const { require_same_vars(*vars_, *o.vars_); }

  Polynomial merged(const Polynomial& o, bool subtract) const {
    check(o);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      auto ord = monomial_cmp(terms_[i].mono, o.terms_[j].mono);
      if (ord > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (ord < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coef : t.coef});
      } else {
        K c = subtract ? terms_[i].coef - o.terms_[j].coef : terms_[i].coef + o.terms_[j].coef;
        if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      const auto& t = o.terms_[j];
      r.terms_.push_back({t.mono, subtract ? -t.coef : t.coef});
    }
    return r;
  }

  VarSetPtr vars_;
  std::vector<Term<K>> terms_;
};

}  // namespace multistruct
