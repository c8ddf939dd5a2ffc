#pragma once

// One-fold Mellin-Barnes integrals
//   (1/2 pi i) int dt (kappa z)^t Gamma(-t) prod Gamma(A+t) Gamma(C-t) / Gamma(B+t) Gamma(D-t)
// and their residue sums over hypergeometric functions.

#include <string>
#include <vector>

#include "hypred/counting.hpp"
#include "hypred/hyper.hpp"
#include "hypred/linear_form.hpp"

namespace hypred {

/// Unevaluated product of Gamma functions of linear forms, with free-form
/// factors (powers, constants) kept for display.
struct GammaProduct {
  std::vector<LinearForm> num;
  std::vector<LinearForm> den;
  std::vector<std::string> extra;

  std::string to_string() const;
};

struct MBRepr {
  Rat kappa{1};
  std::string var{"z"};
  std::vector<LinearForm> a, b, c, d;
  GammaProduct prefactor;
};

/// dim A + dim D - dim B - dim C == 1.
bool check_dim(const MBRepr& m);

/// Builds an MBRepr; InvalidArgument if the dimension condition fails.
MBRepr make_mb(Rat kappa, std::vector<LinearForm> a, std::vector<LinearForm> b, std::vector<LinearForm> c,
               std::vector<LinearForm> d, std::string var = "z");

/// p+1Fp with linear-form parameters.
struct FormHyper {
  std::vector<LinearForm> upper;
  std::vector<LinearForm> lower;
  Rat kappa{1};
  std::string var{"z"};

  /// Numeric parameters; n defaults to 4 - 2 eps.
  HyperFn bind(const Bindings& b) const;
  std::string to_string() const;
  /// Same parameter multisets and argument.
  bool same_as(const FormHyper& o) const;
};

struct HyperTerm {
  GammaProduct coefficient;
  LinearForm power;  // the term carries z^power
  FormHyper fn;
};

struct HyperSum {
  std::vector<HyperTerm> terms;
};

/// Closes the contour to the right: one term from the poles of Gamma(-t) and
/// one per Gamma(C_k - t). DegeneratePoles if two pole families can collide.
HyperSum mb_to_hyper(const MBRepr& m);

/// Gamma(arg + t_coeff * t), t_coeff in {-2, -1, 1, 2}.
struct GammaArg {
  LinearForm arg;
  int t_coeff;
};

/// Integrand as written: (base * var)^t times Gamma ratios.
struct RawMB {
  Rat base{1};
  std::string var{"z"};
  std::vector<GammaArg> num, den;
  GammaProduct prefactor;
};

/// Substitutes t_old = sign * t + shift. With sign = -1 the variable is
/// inverted and must be renamed by the caller via `new_var`.
RawMB change_variable(const RawMB& raw, int sign, const LinearForm& shift, const std::string& new_var);

/// Splits Gamma(X +- 2t) by the duplication formula, locates the Gamma(-t)
/// kernel and sorts the remaining factors into A, B, C, D.
MBRepr normalize(const RawMB& raw);

struct MasterCount {
  int count = 0;
  std::vector<int> per_term;
  std::vector<ExceptionalReport> reports;
  std::vector<HyperFn> bound_terms;
};

/// Applies the basis count to every term; CriterionViolation if they differ.
MasterCount count_master_integrals(const HyperSum& h, const Bindings& b);

/// sum(sigma) - (n/2) q, where q + 1 = sigma_list.size().
LinearForm dressed_propagator_shift(const std::vector<LinearForm>& sigma_list);

namespace presets {

/// Raw integrand of the one-loop vertex with massless dressed line; symbols
/// n, j1, j2, sigma.
RawMB c3_raw();
MBRepr c3();
HyperSum c3_printed();

/// Symbols n, sigma1, sigma2, rho.
MBRepr c1();
HyperSum c1_printed();

/// Two-loop sunset; symbols n, rho, sigma, alpha, beta.
RawMB v1200_raw();
MBRepr v1200();
HyperSum v1200_printed();

/// Looks up "c3", "c1" or "v1200".
MBRepr by_name(const std::string& name);
HyperSum printed_by_name(const std::string& name);

}  // namespace presets

}  // namespace hypred
