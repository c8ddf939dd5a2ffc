#pragma once

// eps-expansion of hypergeometric functions as polylogarithm expressions.
//
// Supported classes:
//  (a) integer parameters: pF_{p-1}(a eps; 1 + b eps) directly from its Pfaff
//      system in theta^i F, optionally wrapped by unit-gap pairs
//      (upper x eps, lower 1 + x eps) around a residual 1F0(1 + a eps);
//      alphabet {0, 1/kappa} in z.
//  (b) 2F1(1/2 + a1 eps, 1/2 + a2 eps; 3/2; z) in xi = (z/(z-1))^(1/2),
//      expanded as P(xi) = xi (1 - xi^2)^(-1/2) F; alphabet {-1, 1} in xi.

#include <string>
#include <vector>

#include "hypred/gpl.hpp"
#include "hypred/hyper.hpp"
#include "hypred/letter_system.hpp"

namespace hypred {

template <class C>
struct ExpansionT {
  /// coeffs[k]: coefficient of eps^k.
  std::vector<PolyLogExprT<C>> coeffs;
  /// "z" for class (a), "xi" for class (b).
  std::string var{"z"};
  bool half_integer = false;
  /// How the expanded function relates to F.
  std::string normalization{"F"};
};

using Expansion = ExpansionT<Rat>;
using SymExpansion = ExpansionT<MPoly>;

Expansion epsilon_expand(const HyperFn& f, int eps_order);
SymExpansion epsilon_expand(const SymHyperFn& f, int eps_order);

/// Compares gpl_series of every coefficient with the matching eps layer of the
/// hypergeometric series (re-expanded in xi for class (b)).
VerifyOutcome verify_expansion(const HyperFn& f, const Expansion& e, int z_order);
VerifyOutcome verify_expansion(const SymHyperFn& f, const SymExpansion& e, int z_order);

/// Coefficient of x^(n-j) in prod (x + r_i).
template <class C>
C elementary_symmetric(const std::vector<C>& r, int j) {
  if (j < 0 || j > static_cast<int>(r.size())) throw Error(ErrorKind::InvalidArgument, "index out of range");
  std::vector<C> e(r.size() + 1, C(0));
  e[0] = C(1);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * r[i];
  return e[j];
}

/// The letter system used for `f`, with the index of the component that equals
/// the expanded function. Exposed for inspection and tests.
template <class C>
struct ExpansionSystem {
  LetterSystemT<C> system;
  int target = 0;
  bool half_integer = false;
};
ExpansionSystem<Rat> expansion_system(const HyperFn& f);
ExpansionSystem<MPoly> expansion_system(const SymHyperFn& f);

std::string to_string(const Expansion& e);
std::string to_string(const SymExpansion& e);

}  // namespace hypred
