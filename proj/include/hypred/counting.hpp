#pragma once

// Exceptional parameter sets and the number of irreducible basis functions.

#include <optional>
#include <vector>

#include "hypred/hyper.hpp"

namespace hypred {

struct ParamPair {
  int upper;
  int lower;
  Rat difference;  // upper - lower
};

struct ExceptionalReport {
  std::vector<int> integer_uppers;
  /// Upper/lower pairs with equal eps parts and upper - lower a non-negative integer.
  std::vector<ParamPair> integer_difference_pairs;
  /// Pairs with upper == lower.
  std::vector<ParamPair> equal_pairs;
  /// Greedy disjoint selection used for counting.
  std::vector<ParamPair> matched_pairs;
  /// Integer uppers not consumed by a matched pair.
  std::vector<int> unpaired_integer_uppers;
  /// An integer upper is also part of a matched pair.
  bool overlap = false;

  bool exceptional() const { return !integer_uppers.empty() || !integer_difference_pairs.empty(); }
};

template <class C>
std::optional<Rat> nonneg_integer_difference(const EpsLinT<C>& up, const EpsLinT<C>& low) {
  if (!(up.eps_part == low.eps_part)) return std::nullopt;
  Rat d = up.const_part - low.const_part;
  if (!is_integer(d) || d < 0) return std::nullopt;
  return d;
}

template <class C>
ExceptionalReport detect_exceptional(const HyperFnT<C>& f) {
  ExceptionalReport r;
  const int nu = static_cast<int>(f.upper.size()), nl = static_cast<int>(f.lower.size());
  for (int i = 0; i < nu; ++i)
    if (f.upper[i].is_integer()) r.integer_uppers.push_back(i);
  for (int i = 0; i < nu; ++i)
    for (int l = 0; l < nl; ++l)
      if (auto d = nonneg_integer_difference(f.upper[i], f.lower[l])) {
        r.integer_difference_pairs.push_back({i, l, *d});
        if (*d == 0) r.equal_pairs.push_back({i, l, *d});
      }
  std::vector<bool> lower_used(nl, false), upper_used(nu, false);
  for (int i = 0; i < nu; ++i) {
    int best = -1;
    Rat best_d;
    for (int l = 0; l < nl; ++l) {
      if (lower_used[l]) continue;
      auto d = nonneg_integer_difference(f.upper[i], f.lower[l]);
      if (d && (best < 0 || *d < best_d)) best = l, best_d = *d;
    }
    if (best < 0) continue;
    lower_used[best] = upper_used[i] = true;
    r.matched_pairs.push_back({i, best, best_d});
  }
  for (int i : r.integer_uppers) {
    if (upper_used[i])
      r.overlap = true;
    else
      r.unpaired_integer_uppers.push_back(i);
  }
  return r;
}

/// (p+1) minus one per matched pair, minus one more if any integer upper is
/// left unpaired; never negative.
template <class C>
int count_nontrivial_basis(const HyperFnT<C>& f) {
  ExceptionalReport r = detect_exceptional(f);
  int n = f.p() + 1 - static_cast<int>(r.matched_pairs.size()) - (r.unpaired_integer_uppers.empty() ? 0 : 1);
  return n < 0 ? 0 : n;
}

}  // namespace hypred
