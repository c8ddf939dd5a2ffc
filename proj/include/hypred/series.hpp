#pragma once

// Truncated power series with exact coefficients.
//
// EpsPoly<C> is a polynomial in eps known up to eps^K. BiSeries<C> is a power
// series in z, known up to z^N, whose coefficients are EpsPoly<C> known up to
// eps^K. Mixed-order arithmetic truncates to the smaller orders.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypred/epslin.hpp"
#include "hypred/error.hpp"

namespace hypred {

template <class C>
class EpsPoly {
 public:
  EpsPoly() : EpsPoly(0) {}
  explicit EpsPoly(int order) : c_(static_cast<std::size_t>(order) + 1, C(0)) {}
  EpsPoly(int order, const C& constant) : EpsPoly(order) { c_[0] = constant; }

  /// c + e*eps truncated at order K.
  static EpsPoly linear(int order, const EpsLinT<C>& x) {
    EpsPoly r(order, C(x.const_part));
    if (order >= 1) r.c_[1] = x.eps_part;
    return r;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int k) const { return c_[k]; }
  C& operator[](int k) { return c_[k]; }
  const std::vector<C>& coeffs() const { return c_; }

  bool zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const C& x) { return is_zero(x); });
  }

  EpsPoly truncated(int order) const {
    EpsPoly r(std::min(order, this->order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = c_[k];
    return r;
  }

  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend EpsPoly operator-(const EpsPoly& a) {
    EpsPoly r(a.order());
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = -a.c_[k];
    return r;
  }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend EpsPoly operator*(EpsPoly a, const Rat& s) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const EpsPoly& a, const EpsPoly& b) { return !(a == b); }

  /// Multiplicative inverse; the eps^0 coefficient must be a nonzero constant.
  EpsPoly inverse() const;

 private:
  std::vector<C> c_;
};

template <class C>
Rat constant_value(const C& c);

template <>
inline Rat constant_value<Rat>(const Rat& c) {
  return c;
}
template <>
inline Rat constant_value<MPoly>(const MPoly& c) {
  if (!c.is_constant()) throw Error(ErrorKind::InvalidArgument, "symbolic leading eps coefficient");
  return c.constant();
}

template <class C>
EpsPoly<C> EpsPoly<C>::inverse() const {
  const Rat c0 = constant_value(c_[0]);
  if (is_zero(c0)) throw Error(ErrorKind::PoleAtEpsZero, "inverse of a series vanishing at eps = 0");
  const Rat inv0 = 1 / c0;
  EpsPoly r(order());
  r.c_[0] = C(inv0);
  for (int k = 1; k <= order(); ++k) {
    C acc(0);
    for (int i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

/// prod_{m<j} (x + m) expanded in eps to order K.
template <class C>
EpsPoly<C> pochhammer_eps(const EpsLinT<C>& x, int j, int order) {
  EpsPoly<C> r(order, C(1));
  for (int m = 0; m < j; ++m) r = r * EpsPoly<C>::linear(order, x + EpsLinT<C>(Rat(m)));
  return r;
}

/// 1 / pochhammer_eps(x, j, K); PoleAtEpsZero if some x.const + m vanishes.
template <class C>
EpsPoly<C> inv_pochhammer_eps(const EpsLinT<C>& x, int j, int order) {
  for (int m = 0; m < j; ++m)
    if (is_zero(Rat(x.const_part + m)))
      throw Error(ErrorKind::PoleAtEpsZero, "Pochhammer symbol vanishes at eps = 0");
  return pochhammer_eps(x, j, order).inverse();
}

/// Location of the first differing coefficient between two series.
struct Mismatch {
  int z_order;
  int eps_order;
};

/// Outcome of an oracle comparison: the lowest (z, eps) order that differs.
struct VerifyOutcome {
  bool pass = true;
  std::optional<Mismatch> mismatch;
};

template <class C>
class BiSeries {
 public:
  BiSeries() : BiSeries(0, 0) {}
  BiSeries(int z_order, int eps_order)
      : n_(z_order), k_(eps_order), c_(static_cast<std::size_t>(z_order + 1) * (eps_order + 1), C(0)) {}

  /// Constant series c (an eps-polynomial) in z.
  static BiSeries constant(int z_order, const EpsPoly<C>& c) {
    BiSeries r(z_order, c.order());
    r.set(0, c);
    return r;
  }

  int z_order() const { return n_; }
  int eps_order() const { return k_; }

  const C& at(int j, int k) const { return c_[idx(j, k)]; }
  C& at(int j, int k) { return c_[idx(j, k)]; }

  EpsPoly<C> coeff(int j) const {
    EpsPoly<C> r(k_);
    for (int k = 0; k <= k_; ++k) r[k] = at(j, k);
    return r;
  }
  void set(int j, const EpsPoly<C>& v) {
    for (int k = 0; k <= k_; ++k) at(j, k) = k <= v.order() ? v[k] : C(0);
  }

  /// Coefficients of eps^k as a z-series (length N+1).
  std::vector<C> eps_layer(int k) const {
    std::vector<C> out(n_ + 1);
    for (int j = 0; j <= n_; ++j) out[j] = at(j, k);
    return out;
  }

  BiSeries truncated(int z_order, int eps_order) const {
    BiSeries r(std::min(z_order, n_), std::min(eps_order, k_));
    for (int j = 0; j <= r.n_; ++j)
      for (int k = 0; k <= r.k_; ++k) r.at(j, k) = at(j, k);
    return r;
  }

  bool zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const C& x) { return is_zero(x); });
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.n_, b.n_), std::min(a.k_, b.k_));
    for (int j = 0; j <= r.n_; ++j)
      for (int k = 0; k <= r.k_; ++k) r.at(j, k) = a.at(j, k) + b.at(j, k);
    return r;
  }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.n_, b.n_), std::min(a.k_, b.k_));
    for (int j = 0; j <= r.n_; ++j)
      for (int k = 0; k <= r.k_; ++k) r.at(j, k) = a.at(j, k) - b.at(j, k);
    return r;
  }
  friend BiSeries operator-(const BiSeries& a) { return BiSeries(a.n_, a.k_) - a; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.n_, b.n_), std::min(a.k_, b.k_));
    for (int i = 0; i <= r.n_; ++i)
      for (int ki = 0; ki <= r.k_; ++ki) {
        const C& x = a.at(i, ki);
        if (is_zero(x)) continue;
        for (int j = 0; i + j <= r.n_; ++j)
          for (int kj = 0; ki + kj <= r.k_; ++kj) r.at(i + j, ki + kj) += x * b.at(j, kj);
      }
    return r;
  }
  friend BiSeries operator*(const EpsPoly<C>& s, const BiSeries& a) {
    return constant(a.n_, s) * a;
  }
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

  /// z d/dz.
  BiSeries theta() const {
    BiSeries r = *this;
    for (int j = 0; j <= n_; ++j)
      for (int k = 0; k <= k_; ++k) r.at(j, k) *= Rat(j);
    return r;
  }

  /// Multiplication by z^m, m >= 0; the truncation order is kept.
  BiSeries shift_up(int m) const {
    BiSeries r(n_, k_);
    for (int j = 0; j + m <= n_; ++j)
      for (int k = 0; k <= k_; ++k) r.at(j + m, k) = at(j, k);
    return r;
  }

  /// Division by z^m; UncancelledPole unless the first m coefficients vanish.
  BiSeries shift_down(int m) const {
    if (m <= 0) return *this;
    for (int j = 0; j < std::min(m, n_ + 1); ++j)
      for (int k = 0; k <= k_; ++k)
        if (!is_zero(at(j, k)))
          throw Error(ErrorKind::UncancelledPole, "1/z factor meets a nonzero coefficient at z^" + std::to_string(j));
    if (m > n_) throw Error(ErrorKind::InvalidArgument, "shift exceeds truncation order");
    BiSeries r(n_ - m, k_);
    for (int j = 0; j <= r.n_; ++j)
      for (int k = 0; k <= k_; ++k) r.at(j, k) = at(j + m, k);
    return r;
  }

  /// First (z, eps) position where the two series differ within their common
  /// truncation, scanning by z order first.
  friend std::optional<Mismatch> first_mismatch(const BiSeries& a, const BiSeries& b) {
    const int n = std::min(a.n_, b.n_), kk = std::min(a.k_, b.k_);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= kk; ++k)
        if (a.at(j, k) != b.at(j, k)) return Mismatch{j, k};
    return std::nullopt;
  }

 private:
  std::size_t idx(int j, int k) const { return static_cast<std::size_t>(j) * (k_ + 1) + k; }

  int n_;
  int k_;
  std::vector<C> c_;
};

}  // namespace hypred
