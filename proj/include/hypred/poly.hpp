#pragma once

// Dense univariate polynomials over an exact coefficient type.
//
// Coefficients are stored lowest degree first and the vector is kept trimmed,
// so the zero polynomial is the empty vector. Division and gcd require the
// coefficient type to be a field.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hypred/rational.hpp"

namespace hypred {

template <class F>
class Poly {
 public:
  using Scalar = F;

  Poly() = default;
  Poly(int c) : Poly(F(c)) {}
  Poly(const F& c) {
    if (!is_zero(c)) coeffs_.push_back(c);
  }
  explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial c * x^k.
  static Poly monomial(const F& c, std::size_t k) {
    if (is_zero(c)) return Poly();
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool zero() const { return coeffs_.empty(); }
  const std::vector<F>& coeffs() const { return coeffs_; }

  F operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
  const F& lead() const { return coeffs_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const F& s) {
    if (is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    Poly r = *this;
    if (r.degree() < d.degree()) return {Poly(), r};
    std::vector<F> q(r.degree() - d.degree() + 1, F(0));
    const F inv_lead = F(1) / d.lead();
    while (!r.zero() && r.degree() >= d.degree()) {
      const int shift = r.degree() - d.degree();
      F c = r.lead() * inv_lead;
      q[shift] = c;
      for (int i = 0; i <= d.degree(); ++i) r.coeffs_[i + shift] -= c * d.coeffs_[i];
      r.trim();
    }
    return {Poly(std::move(q)), r};
  }

  /// Exact quotient; throws if the division leaves a remainder.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
  }

  Poly monic() const {
    if (zero()) return *this;
    return *this * (F(1) / lead());
  }

  F eval(const F& x) const {
    F acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<F> v(coeffs_.size() - 1, F(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * F(static_cast<int>(i));
    return Poly(std::move(v));
  }

  /// x d/dx.
  Poly theta() const {
    std::vector<F> v = coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= F(static_cast<int>(i));
    return Poly(std::move(v));
  }

  /// Lowest k with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero(coeffs_[i])) return static_cast<int>(i);
    return 0;
  }

  /// Divides by x^k; the low coefficients must vanish.
  Poly shift_down(int k) const {
    if (k <= 0) return *this;
    std::vector<F> v(coeffs_.begin() + std::min<std::size_t>(k, coeffs_.size()), coeffs_.end());
    return Poly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.zero();
}

/// Monic gcd over a field coefficient type; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.zero()) {
    Poly<F> r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace hypred
