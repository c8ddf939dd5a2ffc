#pragma once

// Parameters of the form A + a*eps. The constant part is always a rational;
// the eps coefficient is a rational (EpsLin) or a symbolic polynomial
// (SymEpsLin).

#include <string>

#include "hypred/frac.hpp"
#include "hypred/mpoly.hpp"
#include "hypred/rational.hpp"

namespace hypred {

template <class C>
struct EpsLinT {
  Rat const_part{0};
  C eps_part{0};

  EpsLinT() = default;
  EpsLinT(const Rat& c) : const_part(c), eps_part(0) {}
  EpsLinT(int c) : const_part(c), eps_part(0) {}
  EpsLinT(const Rat& c, const C& e) : const_part(c), eps_part(e) {}

  /// Integer-valued: no eps dependence and an integral constant.
  bool is_integer() const { return is_zero(eps_part) && hypred::is_integer(const_part); }

  friend EpsLinT operator+(const EpsLinT& a, const EpsLinT& b) {
    return {Rat(a.const_part + b.const_part), C(a.eps_part + b.eps_part)};
  }
  friend EpsLinT operator-(const EpsLinT& a, const EpsLinT& b) {
    return {Rat(a.const_part - b.const_part), C(a.eps_part - b.eps_part)};
  }
  friend EpsLinT operator-(const EpsLinT& a) { return {Rat(-a.const_part), C(-a.eps_part)}; }
  friend EpsLinT operator*(const Rat& s, const EpsLinT& a) {
    return {Rat(s * a.const_part), C(a.eps_part * s)};
  }
  friend bool operator==(const EpsLinT& a, const EpsLinT& b) {
    return a.const_part == b.const_part && a.eps_part == b.eps_part;
  }
  friend bool operator!=(const EpsLinT& a, const EpsLinT& b) { return !(a == b); }
  friend bool operator<(const EpsLinT& a, const EpsLinT& b) {
    if (a.const_part != b.const_part) return a.const_part < b.const_part;
    return a.eps_part < b.eps_part;
  }
};

using EpsLin = EpsLinT<Rat>;
using SymEpsLin = EpsLinT<MPoly>;

/// The parameter as an element of Q(eps).
inline QEps to_qeps(const EpsLin& x) { return QEps(Poly<Rat>({x.const_part, x.eps_part})); }

inline SymEpsLin to_symbolic(const EpsLin& x) { return {x.const_part, MPoly(x.eps_part)}; }

/// Numeric form; throws InvalidArgument if the eps part is not a constant.
EpsLin to_numeric(const SymEpsLin& x);

/// Substitutes values for the symbols of the eps part.
EpsLin bind(const SymEpsLin& x, const std::map<std::string, Rat>& values);

std::string to_string(const EpsLin& x);
std::string to_string(const SymEpsLin& x);

}  // namespace hypred
