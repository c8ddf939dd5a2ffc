#pragma once

// Sparse multivariate polynomials over Q in named symbols. Used as the
// coefficient ring when eps-coefficients of parameters are left symbolic
// (e.g. 2F1(a eps, b eps; 1 + c eps; z)).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypred/rational.hpp"

namespace hypred {

class MPoly {
 public:
  /// Sorted (symbol, exponent) list, exponents > 0.
  using Monomial = std::vector<std::pair<std::string, int>>;

  MPoly() = default;
  MPoly(int c) : MPoly(Rat(c)) {}
  MPoly(const Rat& c) {
    if (!is_zero(c)) terms_[{}] = c;
  }
  static MPoly symbol(const std::string& name) {
    MPoly p;
    p.terms_[{{name, 1}}] = 1;
    return p;
  }

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rat constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Rat& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  MPoly& operator/=(const Rat& s) { return *this *= Rat(1 / s); }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mul(ma, mb), Rat(ca * cb));
    return r;
  }
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  friend MPoly operator/(MPoly a, const Rat& s) { return a /= s; }
  /// Division by a nonzero constant polynomial.
  friend MPoly operator/(MPoly a, const MPoly& s) {
    if (!s.is_constant() || s.zero())
      throw Error(ErrorKind::InvalidArgument, "MPoly division by a non-constant");
    return a /= s.constant();
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  friend bool operator<(const MPoly& a, const MPoly& b) { return a.terms_ < b.terms_; }

  /// Substitutes every symbol; unbound symbols raise InvalidArgument.
  Rat eval(const std::map<std::string, Rat>& values) const;

  std::vector<std::string> symbols() const;

  std::string to_string() const;

 private:
  static Monomial mul(const Monomial& a, const Monomial& b);
  void add_term(const Monomial& m, const Rat& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  std::map<Monomial, Rat> terms_;
};

inline bool is_zero(const MPoly& p) { return p.zero(); }

}  // namespace hypred
