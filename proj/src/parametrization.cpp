#include "hypred/parametrization.hpp"

#include <cstdlib>
#include <numeric>

#include "hypred/frac.hpp"

namespace hypred {

namespace {

Poly<Rat> lin(const Rat& c0, const Rat& c1) { return Poly<Rat>(std::vector<Rat>{c0, c1}); }

TriangularSystem shape(std::vector<std::string> names, std::vector<Poly<Rat>> lhs, int eps_orders) {
  TriangularSystem s;
  const std::size_t n = names.size();
  s.layers = std::move(names);
  s.lhs = std::move(lhs);
  s.rhs.assign(n, std::vector<std::vector<Poly<Rat>>>(eps_orders + 1, std::vector<Poly<Rat>>(n)));
  return s;
}

BiSeries<Rat> times_poly(const Poly<Rat>& p, const BiSeries<Rat>& s) {
  BiSeries<Rat> out(s.z_order(), s.eps_order());
  for (int i = 0; i <= p.degree(); ++i) {
    if (is_zero(p[i])) continue;
    for (int j = 0; j + i <= s.z_order(); ++j)
      for (int k = 0; k <= s.eps_order(); ++k) out.at(j + i, k) += p[i] * s.at(j, k);
  }
  return out;
}

BiSeries<Rat> eps_shift(const BiSeries<Rat>& s, int k) {
  BiSeries<Rat> out(s.z_order(), s.eps_order());
  for (int j = 0; j <= s.z_order(); ++j)
    for (int e = 0; e + k <= s.eps_order(); ++e) out.at(j, e + k) = s.at(j, e);
  return out;
}

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(Int(n / d));
    }
  return out;
}

Rat frac_part(int x, int q) { return make_rat(((x % q) + q) % q, q); }

std::string exponent_text(const Rat& e) { return to_string(e); }

}  // namespace

Poly<Rat> TriangularSystem::coeff(int i, int k, int j) const {
  if (k < 0 || k >= static_cast<int>(rhs[i].size())) return Poly<Rat>();
  return rhs[i][k][j];
}

int TriangularSystem::eps_degree() const { return rhs.empty() ? 0 : static_cast<int>(rhs[0].size()) - 1; }

std::vector<BiSeries<Rat>> system_residual(const TriangularSystem& s, const std::vector<BiSeries<Rat>>& layers) {
  std::vector<BiSeries<Rat>> out;
  for (std::size_t i = 0; i < s.layers.size(); ++i) {
    BiSeries<Rat> r = times_poly(s.lhs[i], layers[i].theta().shift_down(1));
    for (int k = 0; k <= s.eps_degree(); ++k)
      for (std::size_t j = 0; j < s.layers.size(); ++j) {
        const Poly<Rat>& c = s.rhs[i][k][j];
        if (!c.zero()) r = r - eps_shift(times_poly(c, layers[j]), k);
      }
    out.push_back(r);
  }
  return out;
}

std::vector<Rat> rational_roots(const Poly<Rat>& p) {
  std::vector<Rat> roots;
  if (p.zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  const int v = p.valuation();
  if (v > 0) roots.push_back(Rat(0));
  Poly<Rat> q = p.shift_down(v);
  if (q.degree() <= 0) return roots;
  Int l(1);
  for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  const Rat a0 = q[0] * l, an = q.lead() * l;
  for (const auto& d : divisors(a0.get_num()))
    for (const auto& e : divisors(an.get_num()))
      for (int sgn : {1, -1}) {
        Rat x(Int(sgn * d), e);
        x.canonicalize();
        if (is_zero(q.eval(x)) && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  return roots;
}

LetterSystem to_letter_system(const TriangularSystem& s, const std::string& var) {
  const int n = static_cast<int>(s.layers.size());
  LetterSystem out(n, var);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= s.eps_degree(); ++k)
      for (int j = 0; j < n; ++j) {
        const Poly<Rat>& c = s.rhs[i][k][j];
        if (c.zero()) continue;
        Frac<Rat> f(c, s.lhs[i]);
        if (f.num().degree() >= f.den().degree())
          throw Error(ErrorKind::UnsupportedClass, "coefficient is not a sum of simple poles");
        const std::vector<Rat> roots = rational_roots(f.den());
        Poly<Rat> prod(Rat(1));
        for (const auto& r : roots) prod = prod * lin(-r, Rat(1));
        if (prod != f.den()) throw Error(ErrorKind::UnsupportedClass, "denominator has repeated or irrational roots");
        const Poly<Rat> dd = f.den().derivative();
        for (const auto& r : roots) out.add(r, k, i, j, Rat(f.num().eval(r) / dd.eval(r)));
      }
  return out;
}

TriangularSystem gauss_triangular_system(int p1, int p2, int r, int q, const Rat& a1, const Rat& a2, const Rat& c,
                                         const Rat& beta) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "q must be nonzero");
  const Rat P1 = make_rat(p1, q), P2 = make_rat(p2, q), R = make_rat(r, q);
  const Rat br1 = (beta - P1) * (beta - P2), br0 = beta * (beta + R);
  if (br1 != 0 || br0 != 0)
    throw Error(ErrorKind::NotTriangular, "omega coefficient " + to_string(br1) + " - (" + to_string(br0) +
                                              ")/z does not vanish for beta = " + to_string(beta));
  TriangularSystem s = shape({"omega", "rho"}, {lin(0, 1), Poly<Rat>(std::vector<Rat>{Rat(0), Rat(1), Rat(-1)})}, 2);
  s.rhs[0][0][0] = Poly<Rat>(Rat(-beta));
  s.rhs[0][0][1] = Poly<Rat>(Rat(1));
  s.rhs[1][0][1] = lin(beta + R, -(beta - P1 - P2));
  s.rhs[1][0][0] = lin(-br0, br1);
  s.rhs[1][1][1] = lin(-c, a1 + a2);
  s.rhs[1][1][0] = lin(c * beta, a1 * (P2 - beta) + a2 * (P1 - beta));
  s.rhs[1][2][0] = lin(0, a1 * a2);
  s.constants = {{"beta", beta}};
  return s;
}

bool gauss_lemma_iv(int p1, int p2, int r, int q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "q must be nonzero");
  return p1 == p2 && p1 == -r;
}

FactorizationReport factorization_conditions(const std::vector<EpsLin>& upper, const std::vector<EpsLin>& lower) {
  std::vector<Rat> a, bm1;
  for (const auto& x : upper)
    if (x.const_part != 0) a.push_back(x.const_part);
  for (const auto& x : lower)
    if (x.const_part != 1) bm1.push_back(Rat(x.const_part - 1));
  if (a.size() > 2 || bm1.size() > 2)
    throw Error(ErrorKind::InvalidArgument, "at most two uppers off 0 and two lowers off 1 are supported");
  while (a.size() < 2) a.push_back(Rat(0));
  while (bm1.size() < 2) bm1.push_back(Rat(0));

  struct Candidate {
    Rat beta, r1, r2;
    int rank;
  };
  std::vector<Candidate> cands;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a[i] == bm1[j]) {
        Candidate c{a[i], a[1 - i], bm1[1 - j], 3};
        if (c.r1 == c.r2)
          c.rank = 0;
        else if (c.r1 == 0)
          c.rank = 1;
        else if (c.r2 == 0)
          c.rank = 2;
        cands.push_back(c);
      }
  if (cands.empty()) throw Error(ErrorKind::NoFactorization, "no common root beta of the factorization conditions");
  const Candidate best = *std::min_element(cands.begin(), cands.end(),
                                           [](const Candidate& x, const Candidate& y) { return x.rank < y.rank; });
  FactorizationReport rep;
  static const char* tags[] = {"R1=R2", "R1=0", "R2=0", "none"};
  rep.tag = tags[best.rank];
  rep.beta = best.beta;
  rep.r1 = best.r1;
  rep.r2 = best.r2;
  for (const auto& c : cands)
    if (std::find(rep.beta_candidates.begin(), rep.beta_candidates.end(), c.beta) == rep.beta_candidates.end())
      rep.beta_candidates.push_back(c.beta);
  rep.z_exponent = -rep.r2;
  rep.zm1_exponent = rep.r2 - rep.r1;
  switch (best.rank) {
    case 0:
      rep.parametrization = rep.r1 == 0 ? "none needed (h constant)" : "xi = z^(1/" + to_string(Rat(rep.r1.get_den())) + ")";
      break;
    case 1:
      rep.parametrization = "xi = (z/(z-1))^(1/" + to_string(Rat(rep.r2.get_den())) + ")";
      break;
    case 2:
      rep.parametrization = "xi = (1-z)^(1/" + to_string(Rat(rep.r1.get_den())) + ")";
      break;
    default:
      rep.parametrization = "none known";
  }
  if (upper.size() == 2 && lower.size() == 1)
    rep.gauss_lemma_iv = upper[0].const_part == upper[1].const_part &&
                         upper[0].const_part == Rat(lower[0].const_part - 1);
  return rep;
}

ThreeF2Report three_f2_system(int r, int p, int q, const Rat& a1, const Rat& a2, const Rat& a3, const Rat& b1,
                              const Rat& b2) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "q must be nonzero");
  if (a1 == 0 || a2 == 0 || a3 == 0) throw Error(ErrorKind::InvalidArgument, "a1, a2, a3 must be nonzero");
  const Rat R = make_rat(r, q), P = make_rat(p, q);
  const Rat d1 = -a1 * R, d2 = a1 * a2 + a1 * a3 + a2 * a3, d3 = b1 * (R + P), d4 = -b1 * b2;
  ThreeF2Report out;
  TriangularSystem& s = out.system;
  s = shape({"omega", "theta omega", "(theta + r/q) theta omega"},
            {lin(0, 1), lin(0, 1), Poly<Rat>(std::vector<Rat>{Rat(0), Rat(1), Rat(-1)})}, 3);
  s.rhs[0][0][1] = Poly<Rat>(Rat(1));
  s.rhs[1][0][2] = Poly<Rat>(Rat(1));
  s.rhs[1][0][1] = Poly<Rat>(Rat(-R));
  s.rhs[2][0][2] = Poly<Rat>(P);
  s.rhs[2][1][2] = lin(-(b1 + b2), a1 + a2 + a3);
  s.rhs[2][1][1] = lin(d3, d1);
  s.rhs[2][2][0] = lin(0, a2 * a3 * R);
  s.rhs[2][2][1] = lin(d4, d2);
  s.rhs[2][3][0] = lin(0, a1 * a2 * a3);
  s.constants = {{"delta1", d1}, {"delta2", d2}, {"delta3", d3}, {"delta4", d4}};
  s.triangular = p == 0;
  out.rational_parametrization = p == -r;
  out.z_exponent = make_rat(p + r, q);
  out.zm1_exponent = make_rat(-p, q);
  return out;
}

F3Report f3_parametrization_check(int p1, int p2, int r1, int r2, int p, int q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "q must be at least 1");
  F3Report rep;
  rep.pass = p1 * r1 == 0 && p2 * r2 == 0;
  rep.s1 = p1 + r1;
  rep.s2 = p2 + r2;
  rep.h1_sign = make_rat(rep.s1, q);
  rep.h1_x = make_rat(p, q);
  rep.h1_xm1 = make_rat(-(rep.s1 + p), q);
  rep.h2_sign = make_rat(rep.s2, q);
  rep.h2_y = make_rat(p, q);
  rep.h2_ym1 = make_rat(-(rep.s2 + p), q);
  rep.H_sign = make_rat(rep.s1 + rep.s2, q);
  rep.H_x = make_rat(rep.s2 + p, q);
  rep.H_y = make_rat(rep.s1 + p, q);
  rep.H_xy = make_rat(-(rep.s1 + rep.s2 + p), q);
  std::vector<Rat> fractional;
  for (int x : {p1, p2, r1, r2})
    if (frac_part(x, q) != 0) fractional.push_back(frac_part(x, q));
  const Rat lower = frac_part(-p, q);
  if (fractional.empty())
    rep.form = lower == 0 ? "integer" : "none";
  else if (fractional.size() == 1)
    rep.form = lower == fractional[0] ? "first" : (lower == 0 ? "second" : "none");
  else
    rep.form = "none";
  rep.nonpositive_lower = (q - p) % q == 0 && q - p <= 0;
  return rep;
}

}  // namespace hypred
