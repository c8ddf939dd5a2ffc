#pragma once

// Differential reduction of p+1Fp with integer-shifted parameters.
//
// Functions whose parameters differ by integers span one module over Q(eps)(z)
// generated by F, theta F, ..., theta^p F, where theta^{p+1} F is eliminated
// with the ODE of F. A contiguous step (raise an upper, lower a lower) is an
// explicit first-order operator; the opposite directions are matrix inverses.
// When the basis and target share an upper parameter equal to 1, the ODE
// factors as theta o (...), the module is generated by F, ..., theta^{p-1} F
// and the constant function 1, and the last slot carries an algebraic tail.

#include <optional>
#include <vector>

#include "hypred/hyper.hpp"
#include "hypred/op_matrix.hpp"
#include "hypred/theta_op.hpp"

namespace hypred {

/// z prod(theta + A_i) - theta prod(theta + B_k - 1).
ThetaOp ode_operator(const HyperFn& f);

enum class Side { Upper, Lower };

struct Step {
  Side side;
  int index;
  int direction;  // +1 or -1
};

/// Relation module of one function. `unit_upper` is the index of the upper
/// parameter fixed at 1 in the inhomogeneous mode, or -1.
struct ReductionModule {
  HyperFn fn;
  int unit_upper = -1;

  int dimension() const { return fn.p() + 1; }
  bool inhomogeneous() const { return unit_upper >= 0; }
};

/// Reduces L F (plus an optional function term) to coordinates in the basis
/// column of `module`.
std::vector<RatFunc> reduce_operator(const ThetaOp& op, const ReductionModule& module);

/// Matrix M with basis_column(shifted) = M * basis_column(f).
OpMatrix step_matrix(const HyperFn& f, Side side, int index, int direction, int unit_upper = -1);

/// The function obtained by applying one step.
HyperFn apply_step(const HyperFn& f, const Step& step);

struct ReductionResult {
  HyperFn target;
  HyperFn basis;
  /// S * target = sum_j R_j theta^j basis + tail; polynomials in z over Q[eps].
  RatFunc s_poly;
  std::vector<RatFunc> r_polys;
  RatFunc algebraic_tail;
  /// Index of the upper parameter held at 1 (integer-upper mode), or -1.
  int unit_upper = -1;
};

/// Canonical shift path: uppers left to right, then lowers left to right.
std::vector<Step> canonical_path(const HyperFn& basis, const HyperFn& target);

ReductionResult reduce_to_basis(const HyperFn& target, const HyperFn& basis);
ReductionResult reduce_along(const HyperFn& target, const HyperFn& basis, const std::vector<Step>& path);

/// R_j / S followed by tail / S, in canonical form; equal for any two valid
/// reductions of the same target onto the same basis.
std::vector<RatFunc> normalized_ratios(const ReductionResult& r);

/// Drops upper/lower pairs that are identical (the Pochhammer ratios cancel).
HyperFn cancel_identical_pairs(const HyperFn& f);

/// Compares both sides of the reduction identity as exact truncated series.
VerifyOutcome verify_reduction(const ReductionResult& r, int z_order, int eps_order);

}  // namespace hypred
