#pragma once

// A generalized hypergeometric function p+1Fp(upper; lower; kappa * var) and
// its series oracle.

#include <algorithm>
#include <string>
#include <vector>

#include "hypred/epslin.hpp"
#include "hypred/series.hpp"

namespace hypred {

template <class C>
struct HyperFnT {
  std::vector<EpsLinT<C>> upper;
  std::vector<EpsLinT<C>> lower;
  Rat kappa{1};
  std::string var{"z"};

  HyperFnT() = default;
  HyperFnT(std::vector<EpsLinT<C>> up, std::vector<EpsLinT<C>> low, Rat k = Rat(1), std::string v = "z")
      : upper(std::move(up)), lower(std::move(low)), kappa(std::move(k)), var(std::move(v)) {
    if (upper.size() != lower.size() + 1)
      throw Error(ErrorKind::InvalidArgument, "p+1Fp needs exactly one more upper than lower parameter");
  }

  /// p of p+1Fp.
  int p() const { return static_cast<int>(lower.size()); }

  /// Equality up to reordering within each parameter list.
  friend bool operator==(const HyperFnT& a, const HyperFnT& b) {
    return a.kappa == b.kappa && sorted(a.upper) == sorted(b.upper) && sorted(a.lower) == sorted(b.lower);
  }
  friend bool operator!=(const HyperFnT& a, const HyperFnT& b) { return !(a == b); }

  static std::vector<EpsLinT<C>> sorted(std::vector<EpsLinT<C>> v) {
    std::sort(v.begin(), v.end());
    return v;
  }
};

using HyperFn = HyperFnT<Rat>;
using SymHyperFn = HyperFnT<MPoly>;

/// Term-by-term series: coefficient of z^j is kappa^j prod(a)_j / prod(b)_j / j!
/// expanded in eps.
template <class C>
BiSeries<C> series_of_hyper(const HyperFnT<C>& f, int z_order, int eps_order) {
  for (const auto& b : f.lower)
    if (b.is_integer() && b.const_part <= 0)
      throw Error(ErrorKind::PoleAtEpsZero, "lower parameter is a non-positive integer at eps = 0");
  BiSeries<C> out(z_order, eps_order);
  EpsPoly<C> term(eps_order, C(1));
  for (int j = 0; j <= z_order; ++j) {
    out.set(j, term);
    if (j == z_order) break;
    EpsPoly<C> step(eps_order, C(f.kappa / Rat(j + 1)));
    for (const auto& a : f.upper) step = step * EpsPoly<C>::linear(eps_order, a + EpsLinT<C>(Rat(j)));
    for (const auto& b : f.lower) step = step * inv_pochhammer_eps(b + EpsLinT<C>(Rat(j)), 1, eps_order);
    term = term * step;
  }
  return out;
}

std::string to_string(const HyperFn& f);
std::string to_string(const SymHyperFn& f);

}  // namespace hypred
