#include "hypred/reduction.hpp"

#include <cstdlib>

#include "hypred/convert.hpp"
#include "hypred/error.hpp"

namespace hypred {

namespace {

ThetaOp product_of_shifts(const std::vector<EpsLin>& shifts, const Rat& offset) {
  ThetaOp out = ThetaOp::identity();
  for (const auto& s : shifts) out = out * ThetaOp::theta_plus(to_qeps(s + EpsLin(offset)));
  return out;
}

RatFunc kappa_z(const HyperFn& f) { return RatFunc(QEps(f.kappa)) * z_var(); }

struct Relation {
  ThetaOp op;      // op F = rhs
  RatFunc rhs{0};  // constant function term (inhomogeneous mode)
};

Relation relation_of(const ReductionModule& m) {
  if (!m.inhomogeneous()) return {ode_operator(m.fn), RatFunc(0)};
  std::vector<EpsLin> rest;
  for (int i = 0; i < static_cast<int>(m.fn.upper.size()); ++i)
    if (i != m.unit_upper) rest.push_back(m.fn.upper[i]);
  Relation r;
  r.op = product_of_shifts(m.fn.lower, Rat(-1)) - kappa_z(m.fn) * product_of_shifts(rest, Rat(0));
  QEps c(1);
  for (const auto& b : m.fn.lower) c = c * to_qeps(b + EpsLin(Rat(-1)));
  r.rhs = RatFunc(c);
  return r;
}

bool integer_gap(const EpsLin& a, const EpsLin& b) { return (a - b).is_integer(); }

long gap(const EpsLin& to, const EpsLin& from) { return to_long((to - from).const_part); }

// Reorders `target` so that each entry differs from the entry of `basis` at the
// same position by an integer.
std::vector<EpsLin> align(const std::vector<EpsLin>& basis, const std::vector<EpsLin>& target) {
  bool positional = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!integer_gap(target[i], basis[i])) positional = false;
  if (positional) return target;
  std::vector<EpsLin> out(basis.size());
  std::vector<bool> used(target.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int best = -1;
    long best_gap = 0;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (used[j] || !integer_gap(target[j], basis[i])) continue;
      long g = std::labs(gap(target[j], basis[i]));
      if (best < 0 || g < best_gap) best = static_cast<int>(j), best_gap = g;
    }
    if (best < 0)
      throw Error(ErrorKind::NotIntegerShift, "parameter " + to_string(basis[i]) + " has no integer-shifted partner");
    used[best] = true;
    out[i] = target[best];
  }
  return out;
}

// Clears denominators of the row and returns S and the numerators.
void clear_denominators(const std::vector<RatFunc>& row, RatFunc& s, std::vector<RatFunc>& nums) {
  Poly<QEps> den(QEps(1));
  for (const auto& e : row) {
    if (e.zero()) continue;
    den = (den * e.den()).exact_div(gcd(den, e.den()));
  }
  std::vector<Poly<QEps>> polys;
  polys.push_back(den);
  for (const auto& e : row) polys.push_back(e.zero() ? Poly<QEps>() : e.num() * den.exact_div(e.den()));
  // Make coefficients polynomial in eps, then remove the common content.
  Poly<Rat> eps_den(Rat(1));
  for (const auto& p : polys)
    for (const auto& c : p.coeffs()) eps_den = (eps_den * c.den()).exact_div(gcd(eps_den, c.den()));
  Poly<Rat> content;
  for (auto& p : polys) {
    p = p * QEps(eps_den);
    for (const auto& c : p.coeffs()) content = gcd(content, c.num());
  }
  Int lcm_den(1), gcd_num(0);
  for (auto& p : polys) {
    p = p * QEps(Frac<Rat>(Poly<Rat>(Rat(1)), content));
    for (const auto& c : p.coeffs())
      for (const auto& r : c.num().coeffs()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r.get_den_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), r.get_num_mpz_t());
      }
  }
  Rat scale(lcm_den, gcd_num);
  scale.canonicalize();
  // Sign convention: the leading eps coefficient of the leading z term of S is positive.
  if (polys[0].lead().num().lead() < 0) scale = -scale;
  for (auto& p : polys) p = p * QEps(scale);
  s = RatFunc(polys[0]);
  nums.clear();
  for (std::size_t i = 1; i < polys.size(); ++i) nums.push_back(RatFunc(polys[i]));
}

}  // namespace

ThetaOp ode_operator(const HyperFn& f) {
  return kappa_z(f) * product_of_shifts(f.upper, Rat(0)) -
         ThetaOp::theta() * product_of_shifts(f.lower, Rat(-1));
}

std::vector<RatFunc> reduce_operator(const ThetaOp& op, const ReductionModule& module) {
  const Relation rel = relation_of(module);
  const int ord = rel.op.degree();
  const RatFunc lead_inv = RatFunc(1) / rel.op.coeff(ord);
  ThetaOp rest = op;
  RatFunc tail(0);
  std::vector<ThetaOp> shifted{rel.op};
  for (int d = rest.degree(); d >= ord; --d) {
    const RatFunc c = rest.coeff(d);
    if (c.zero()) continue;
    const int s = d - ord;
    while (static_cast<int>(shifted.size()) <= s) shifted.push_back(ThetaOp::theta() * shifted.back());
    const RatFunc q = c * lead_inv;
    rest = rest - q * shifted[s];
    if (s == 0) tail += q * rel.rhs;
  }
  std::vector<RatFunc> out(module.dimension());
  for (int j = 0; j < ord; ++j) out[j] = rest.coeff(j);
  if (module.inhomogeneous()) out.back() = tail;
  return out;
}

HyperFn apply_step(const HyperFn& f, const Step& step) {
  HyperFn g = f;
  auto& v = step.side == Side::Upper ? g.upper : g.lower;
  if (step.index < 0 || step.index >= static_cast<int>(v.size()))
    throw Error(ErrorKind::InvalidArgument, "step index out of range");
  v[step.index] = v[step.index] + EpsLin(Rat(step.direction));
  return g;
}

OpMatrix step_matrix(const HyperFn& f, Side side, int index, int direction, int unit_upper) {
  if (side == Side::Upper && index == unit_upper)
    throw Error(ErrorKind::InvalidArgument, "the unit upper parameter cannot be shifted in integer-upper mode");
  const bool forward = (side == Side::Upper) == (direction > 0);
  if (!forward) {
    HyperFn g = apply_step(f, {side, index, direction});
    return inverse(step_matrix(g, side, index, -direction, unit_upper));
  }
  const EpsLin s = side == Side::Upper ? f.upper[index] : f.lower[index] + EpsLin(Rat(-1));
  if (s == EpsLin())
    throw Error(ErrorKind::SingularStep, "contiguous step divides by a parameter that vanishes identically");
  const QEps sq = to_qeps(s);
  const ThetaOp op = RatFunc(QEps(1) / sq) * ThetaOp::theta_plus(sq);
  ReductionModule m{f, unit_upper};
  const int dim = m.dimension();
  const int rows = m.inhomogeneous() ? dim - 1 : dim;
  OpMatrix out(dim, dim);
  ThetaOp power = op;
  for (int j = 0; j < rows; ++j) {
    std::vector<RatFunc> r = reduce_operator(power, m);
    for (int k = 0; k < dim; ++k) out(j, k) = r[k];
    power = ThetaOp::theta() * power;
  }
  if (m.inhomogeneous()) {
    for (int k = 0; k < dim; ++k) out(dim - 1, k) = RatFunc(k == dim - 1 ? 1 : 0);
  }
  return out;
}

HyperFn cancel_identical_pairs(const HyperFn& f) {
  std::vector<EpsLin> up = f.upper, low;
  for (const auto& b : f.lower) {
    auto it = std::find(up.begin(), up.end(), b);
    if (it != up.end())
      up.erase(it);
    else
      low.push_back(b);
  }
  return HyperFn(up, low, f.kappa, f.var);
}

namespace {

struct Aligned {
  HyperFn target;
  HyperFn basis;
};

Aligned prepare(const HyperFn& target, const HyperFn& basis) {
  if (target.kappa != basis.kappa)
    throw Error(ErrorKind::InvalidArgument, "target and basis have different arguments");
  HyperFn t = target, b = basis;
  if (t.p() != b.p()) {
    t = cancel_identical_pairs(t);
    b = cancel_identical_pairs(b);
  }
  if (t.p() != b.p()) throw Error(ErrorKind::NotIntegerShift, "target and basis have different orders");
  t.upper = align(b.upper, t.upper);
  t.lower = align(b.lower, t.lower);
  return {t, b};
}

int unit_index(const HyperFn& basis, const HyperFn& target) {
  for (int i = 0; i < static_cast<int>(basis.upper.size()); ++i)
    if (basis.upper[i] == EpsLin(Rat(1)) && target.upper[i] == EpsLin(Rat(1))) return i;
  return -1;
}

}  // namespace

std::vector<Step> canonical_path(const HyperFn& basis, const HyperFn& target) {
  std::vector<Step> path;
  for (int i = 0; i < static_cast<int>(basis.upper.size()); ++i) {
    long g = gap(target.upper[i], basis.upper[i]);
    for (long k = 0; k < std::labs(g); ++k) path.push_back({Side::Upper, i, g > 0 ? 1 : -1});
  }
  for (int i = 0; i < static_cast<int>(basis.lower.size()); ++i) {
    long g = gap(target.lower[i], basis.lower[i]);
    for (long k = 0; k < std::labs(g); ++k) path.push_back({Side::Lower, i, g > 0 ? 1 : -1});
  }
  return path;
}

ReductionResult reduce_to_basis(const HyperFn& target, const HyperFn& basis) {
  Aligned a = prepare(target, basis);
  return reduce_along(a.target, a.basis, canonical_path(a.basis, a.target));
}

ReductionResult reduce_along(const HyperFn& target, const HyperFn& basis, const std::vector<Step>& path) {
  Aligned a = prepare(target, basis);
  HyperFn cur = a.basis;
  for (const auto& st : path) cur = apply_step(cur, st);
  if (cur.upper != a.target.upper || cur.lower != a.target.lower)
    throw Error(ErrorKind::InvalidArgument, "shift path does not end at the target");
  const int unit = unit_index(a.basis, a.target);
  ReductionModule m{a.basis, unit};
  OpMatrix acc = identity_matrix(m.dimension());
  cur = a.basis;
  for (const auto& st : path) {
    OpMatrix step = step_matrix(cur, st.side, st.index, st.direction, unit);
    acc = (step * acc).eval();
    cur = apply_step(cur, st);
  }
  std::vector<RatFunc> row(m.dimension());
  for (int k = 0; k < m.dimension(); ++k) row[k] = acc(0, k);
  ReductionResult r;
  r.target = target;
  r.basis = basis;
  r.unit_upper = unit;
  std::vector<RatFunc> nums;
  clear_denominators(row, r.s_poly, nums);
  if (unit >= 0) {
    r.algebraic_tail = nums.back();
    nums.pop_back();
  }
  r.r_polys = nums;
  return r;
}

std::vector<RatFunc> normalized_ratios(const ReductionResult& r) {
  std::vector<RatFunc> out;
  for (const auto& c : r.r_polys) out.push_back(c / r.s_poly);
  out.push_back(r.algebraic_tail / r.s_poly);
  return out;
}

VerifyOutcome verify_reduction(const ReductionResult& r, int z_order, int eps_order) {
  auto poly_series = [&](const RatFunc& c) {
    if (!c.is_polynomial()) throw Error(ErrorKind::InvalidArgument, "reduction coefficient is not polynomial");
    return z_series(c.num() * (QEps(1) / c.den().lead()), z_order, eps_order);
  };
  BiSeries<Rat> lhs = poly_series(r.s_poly) * series_of_hyper(r.target, z_order, eps_order);
  BiSeries<Rat> base = series_of_hyper(r.basis, z_order, eps_order);
  BiSeries<Rat> rhs = poly_series(r.algebraic_tail);
  for (const auto& c : r.r_polys) {
    rhs = rhs + poly_series(c) * base;
    base = base.theta();
  }
  VerifyOutcome out;
  out.mismatch = first_mismatch(lhs, rhs);
  out.pass = !out.mismatch;
  return out;
}

}  // namespace hypred
