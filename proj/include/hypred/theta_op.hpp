#pragma once

// Noncommutative operators sum_k c_k(z) theta^k, theta = z d/dz, with
// coefficients in Q(eps)(z). Composition uses theta * c = c * theta + theta(c).

#include <string>
#include <vector>

#include "hypred/convert.hpp"
#include "hypred/frac.hpp"
#include "hypred/series.hpp"

namespace hypred {

class ThetaOp {
 public:
  ThetaOp() = default;
  ThetaOp(const RatFunc& c) : ThetaOp(std::vector<RatFunc>{c}) {}
  explicit ThetaOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ThetaOp identity() { return ThetaOp(RatFunc(1)); }
  static ThetaOp theta() { return ThetaOp(std::vector<RatFunc>{RatFunc(0), RatFunc(1)}); }
  /// theta + shift, shift a parameter value.
  static ThetaOp theta_plus(const QEps& shift) {
    return ThetaOp(std::vector<RatFunc>{RatFunc(shift), RatFunc(1)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  RatFunc coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : RatFunc(); }

  friend ThetaOp operator+(const ThetaOp& a, const ThetaOp& b);
  friend ThetaOp operator-(const ThetaOp& a, const ThetaOp& b);
  /// Left multiplication by a rational function.
  friend ThetaOp operator*(const RatFunc& c, const ThetaOp& a);
  /// Composition a o b.
  friend ThetaOp operator*(const ThetaOp& a, const ThetaOp& b);
  friend bool operator==(const ThetaOp& a, const ThetaOp& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ThetaOp& a, const ThetaOp& b) { return !(a == b); }

  /// Applies the operator to a series. The z truncation order drops by the
  /// largest z-pole order among the coefficients.
  BiSeries<Rat> apply(const BiSeries<Rat>& s) const;

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().zero()) c_.pop_back();
  }

  std::vector<RatFunc> c_;
};

inline ThetaOp theta_compose(const ThetaOp& a, const ThetaOp& b) { return a * b; }
inline BiSeries<Rat> apply_theta_op(const ThetaOp& op, const BiSeries<Rat>& s) { return op.apply(s); }

/// theta^k(c) for a rational function c.
RatFunc theta_power(const RatFunc& c, int k);

/// The variable z as a rational function.
inline RatFunc z_var() { return RatFunc::x(); }

}  // namespace hypred
