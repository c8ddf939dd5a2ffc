#pragma once

// Expansion of exact rational functions into truncated series.

#include "hypred/frac.hpp"
#include "hypred/series.hpp"

namespace hypred {

/// Taylor expansion of an element of Q(eps) around eps = 0.
EpsPoly<Rat> eps_series(const QEps& x, int eps_order);

/// Series of a polynomial in z with Q(eps) coefficients.
BiSeries<Rat> z_series(const Poly<QEps>& p, int z_order, int eps_order);

/// Multiplicative inverse of a series whose z^0 coefficient is invertible at eps = 0.
BiSeries<Rat> inverse(const BiSeries<Rat>& s);

/// Series of r * z^m where m is the z-valuation of r's denominator. Returns
/// the series of z^m * r together with m.
struct LaurentHead {
  BiSeries<Rat> series;
  int pole_order;
};
LaurentHead z_series(const RatFunc& r, int z_order, int eps_order);

}  // namespace hypred
