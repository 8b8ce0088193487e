#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "multistruct/errors.hpp"

namespace multistruct {

/// Ordered list of distinct variable names.  The declared order fixes the
/// variable order used by the monomial order for the whole session.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("variable set must not be empty");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw Error("duplicate variable '" + names_[i] + "'");
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const VarSet& o) const { return names_ == o.names_; }
  bool operator!=(const VarSet& o) const { return names_ != o.names_; }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline void require_same_vars(const VarSet& a, const VarSet& b) {
  if (a != b) throw VarSetMismatch();
}

/// Exponent vector with cached total degree.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    degree_ = d;
  }

  static Monomial unit(std::size_t n_vars) {
    return Monomial(std::vector<std::uint32_t>(n_vars, 0));
  }

  static Monomial variable(std::size_t n_vars, std::size_t i, std::uint32_t e = 1) {
    std::vector<std::uint32_t> v(n_vars, 0);
    v[i] = e;
    return Monomial(std::move(v));
  }

  std::size_t n_vars() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw VarSetMismatch();
    std::vector<std::uint32_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      std::uint64_t s = static_cast<std::uint64_t>(exps_[i]) + o.exps_[i];
      if (s > 0xFFFFFFFFull) throw DegreeOverflow();
      r[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(r));
  }

  bool divides(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw VarSetMismatch();
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw VarSetMismatch();
    std::vector<std::uint32_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (o.exps_[i] > exps_[i]) throw Error("monomial division with remainder");
      r[i] = exps_[i] - o.exps_[i];
    }
    return Monomial(std::move(r));
  }

  Monomial lcm(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw VarSetMismatch();
    std::vector<std::uint32_t> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r[i] = std::max(exps_[i], o.exps_[i]);
    return Monomial(std::move(r));
  }

  bool coprime_with(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw VarSetMismatch();
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  std::string to_string(const VarSet& vars) const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars.name(i);
      if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_;
};

/// Degree-reverse-lexicographic order.  Higher total degree wins; on ties,
/// scanning exponents from the last variable backwards, the monomial with the
/// smaller exponent at the first difference is the larger one.
inline std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b) {
  if (a.n_vars() != b.n_vars()) throw VarSetMismatch();
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.n_vars(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i))
      return b.exponent(i) <=> a.exponent(i);  // smaller exponent is larger
  }
  return std::strong_ordering::equal;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_cmp(a, b) < 0;
  }
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_cmp(a, b) > 0;
  }
};

}  // namespace multistruct
