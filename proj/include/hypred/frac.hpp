#pragma once

// Rational functions in one variable over an exact field: the fraction field
// of Poly<F>. Canonical form has gcd(num, den) = 1 and a monic denominator, so
// equality is structural.

#include <utility>

#include "hypred/poly.hpp"

namespace hypred {

template <class F>
class Frac {
 public:
  using Scalar = F;
  using PolyT = Poly<F>;

  Frac() : num_(), den_(F(1)) {}
  Frac(int c) : num_(F(c)), den_(F(1)) {}
  Frac(const F& c) : num_(c), den_(F(1)) {}
  Frac(PolyT num) : num_(std::move(num)), den_(F(1)) {}
  Frac(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Frac x() { return Frac(PolyT::x()); }

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// The constant value; requires a constant function.
  F constant() const { return num_[0] / den_[0]; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Frac operator-(const Frac& a) {
    Frac r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.zero() || b.zero()) return Frac();
    if (a.is_polynomial() && b.is_polynomial()) {
      Frac r;
      r.num_ = a.num_ * b.num_ * (F(1) / (a.den_.lead() * b.den_.lead()));
      return r;
    }
    // Cross-cancel before multiplying to keep degrees small.
    PolyT g1 = gcd(a.num_, b.den_);
    PolyT g2 = gcd(b.num_, a.den_);
    Frac r;
    r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    r.make_den_monic();
    return r;
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.zero()) throw Error(ErrorKind::InvalidArgument, "rational function division by zero");
    Frac inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.make_den_monic();
    return a * inv;
  }

  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  /// Value at x; the denominator must not vanish there.
  F eval(const F& x) const {
    F d = den_.eval(x);
    if (is_zero(d)) throw Error(ErrorKind::InvalidArgument, "rational function evaluated at a pole");
    return num_.eval(x) / d;
  }

  Frac derivative() const {
    return Frac(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// x d/dx.
  Frac theta() const {
    return Frac(num_.theta() * den_ - num_ * den_.theta(), den_ * den_);
  }

 private:
  void normalize() {
    if (den_.zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
    if (num_.zero()) {
      den_ = PolyT(F(1));
      return;
    }
    if (den_.degree() > 0) {
      PolyT g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    make_den_monic();
  }
  void make_den_monic() {
    F l = den_.lead();
    if (l == F(1)) return;
    F inv = F(1) / l;
    num_ *= inv;
    den_ *= inv;
  }

  PolyT num_;
  PolyT den_;
};

template <class F>
bool is_zero(const Frac<F>& f) {
  return f.zero();
}

/// Rational functions in eps over Q: the parameter field.
using QEps = Frac<Rat>;
/// Rational functions in z with coefficients in Q(eps).
using RatFunc = Frac<QEps>;

}  // namespace hypred
