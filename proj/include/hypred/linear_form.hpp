#pragma once

// Linear combinations of n and named integer parameters (propagator powers
// and similar), with rational coefficients.

#include <map>
#include <string>

#include "hypred/epslin.hpp"

namespace hypred {

using Bindings = std::map<std::string, Rat>;

class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(const Rat& c) : const_(c) {}
  LinearForm(int c) : const_(c) {}

  static LinearForm symbol(const std::string& name, const Rat& coeff = Rat(1));

  const Rat& constant() const { return const_; }
  Rat coeff(const std::string& name) const;
  const std::map<std::string, Rat>& coeffs() const { return c_; }
  bool is_constant() const { return c_.empty(); }

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a);
  friend LinearForm operator*(const Rat& s, const LinearForm& a);
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.const_ == b.const_ && a.c_ == b.c_; }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
  friend bool operator<(const LinearForm& a, const LinearForm& b);

  /// Replaces a symbol by another form.
  LinearForm substitute(const std::string& name, const LinearForm& value) const;

  /// Exact value; every symbol must be bound.
  Rat evaluate(const Bindings& b) const;

  /// Value as A + a*eps: bound symbols are substituted and n, when unbound,
  /// becomes 4 - 2 eps. Any other unbound symbol is an InvalidArgument.
  EpsLin to_epslin(const Bindings& b) const;

  std::string to_string() const;

 private:
  Rat const_{0};
  std::map<std::string, Rat> c_;
};

inline std::string to_string(const LinearForm& f) { return f.to_string(); }

}  // namespace hypred
