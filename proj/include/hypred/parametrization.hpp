#pragma once

// Factorization of the hypergeometric operator, triangular first-order systems
// for the Gauss and 3F2 families, and the rational-parametrization conditions.

#include <optional>
#include <string>
#include <vector>

#include "hypred/letter_system.hpp"
#include "hypred/poly.hpp"
#include "hypred/series.hpp"

namespace hypred {

/// lhs[i](z) * d/dz layer_i = sum_k eps^k sum_j rhs[i][k][j](z) * layer_j.
struct TriangularSystem {
  std::vector<std::string> layers;
  std::vector<Poly<Rat>> lhs;
  std::vector<std::vector<std::vector<Poly<Rat>>>> rhs;
  /// Named constants computed during assembly.
  std::vector<std::pair<std::string, Rat>> constants;
  bool triangular = true;

  Poly<Rat> coeff(int i, int k, int j) const;
  int eps_degree() const;
};

/// lhs_i L_i' - sum eps^k rhs L_j for each layer; zero series when the layer
/// series solve the system.
std::vector<BiSeries<Rat>> system_residual(const TriangularSystem& s, const std::vector<BiSeries<Rat>>& layers);

/// Partial fractions of every coefficient over the rational roots of lhs_i;
/// UnsupportedClass if some coefficient is not a sum of simple poles.
LetterSystem to_letter_system(const TriangularSystem& s, const std::string& var = "z");

/// Rational roots of a polynomial, each listed once.
std::vector<Rat> rational_roots(const Poly<Rat>& p);

/// (omega, rho = (theta + beta) omega) for
/// 2F1(p1/q + a1 eps, p2/q + a2 eps; 1 - r/q + c eps; z).
/// NotTriangular unless (beta - p1/q)(beta - p2/q) - beta (beta + r/q)/z vanishes.
TriangularSystem gauss_triangular_system(int p1, int p2, int r, int q, const Rat& a1, const Rat& a2, const Rat& c,
                                         const Rat& beta);

/// beta = -r/q = p1/q = p2/q.
bool gauss_lemma_iv(int p1, int p2, int r, int q);

struct FactorizationReport {
  /// "R1=R2", "R1=0", "R2=0" or "none" (factorizes, no known rational parametrization).
  std::string tag;
  Rat r1, r2, beta;
  std::vector<Rat> beta_candidates;
  /// h(z) = z^z_exponent (z - 1)^zm1_exponent.
  Rat z_exponent, zm1_exponent;
  std::string parametrization;
  /// Set for the Gauss shape (two uppers, one lower).
  std::optional<bool> gauss_lemma_iv;
};

/// Solves the factorization conditions for parameter sets with at most two
/// uppers off 0 and two lowers off 1 (eps parts ignored). NoFactorization if no
/// beta exists.
FactorizationReport factorization_conditions(const std::vector<EpsLin>& upper, const std::vector<EpsLin>& lower);

struct ThreeF2Report {
  TriangularSystem system;
  bool rational_parametrization = false;
  /// h(z) = z^((p+r)/q) (z - 1)^(-p/q).
  Rat z_exponent, zm1_exponent;
};

/// Layers (omega, theta omega, (theta + r/q) theta omega) for
/// 3F2(r/q + a1 eps, a2 eps, a3 eps; 1 + r/q + b1 eps, 1 - p/q + b2 eps; z).
ThreeF2Report three_f2_system(int r, int p, int q, const Rat& a1, const Rat& a2, const Rat& a3, const Rat& b1,
                              const Rat& b2);

struct F3Report {
  bool pass = false;
  int s1 = 0, s2 = 0;
  /// h1(x): sign exponent s1/q, x^(p/q), (x - 1)^(-(s1 + p)/q); h2 likewise in y.
  Rat h1_sign, h1_x, h1_xm1;
  Rat h2_sign, h2_y, h2_ym1;
  /// H(x, y): sign (s1 + s2)/q, x^((s2 + p)/q), y^((s1 + p)/q), (xy - x - y)^(-(s1 + s2 + p)/q).
  Rat H_sign, H_x, H_y, H_xy;
  /// "integer", "first" (one fractional upper, lower with the same fraction),
  /// "second" (one fractional upper, integer lower) or "none".
  std::string form;
  /// The lower parameter 1 - p/q is a non-positive integer.
  bool nonpositive_lower = false;
};

F3Report f3_parametrization_check(int p1, int p2, int r1, int r2, int p, int q);

}  // namespace hypred
