#include "hypred/mellin_barnes.hpp"

#include <algorithm>

#include "hypred/error.hpp"

namespace hypred {

namespace {

std::string gamma_list(const std::vector<LinearForm>& v) {
  std::string s;
  for (const auto& f : v) s += (s.empty() ? "" : "*") + ("Gamma(" + f.to_string() + ")");
  return s;
}

std::vector<LinearForm> sorted(std::vector<LinearForm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

LinearForm sym(const char* name) { return LinearForm::symbol(name); }
LinearForm half(const LinearForm& f) { return Rat(1, 2) * f; }

void append(std::vector<LinearForm>& dst, const std::vector<LinearForm>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

std::string GammaProduct::to_string() const {
  std::string s = num.empty() ? "1" : gamma_list(num);
  if (!den.empty()) s += "/(" + gamma_list(den) + ")";
  for (const auto& e : extra) s += "*" + e;
  return s;
}

bool check_dim(const MBRepr& m) {
  return static_cast<long>(m.a.size() + m.d.size()) - static_cast<long>(m.b.size() + m.c.size()) == 1;
}

MBRepr make_mb(Rat kappa, std::vector<LinearForm> a, std::vector<LinearForm> b, std::vector<LinearForm> c,
               std::vector<LinearForm> d, std::string var) {
  MBRepr m{std::move(kappa), std::move(var), std::move(a), std::move(b), std::move(c), std::move(d), {}};
  if (!check_dim(m)) throw Error(ErrorKind::InvalidArgument, "dim A + dim D - dim B - dim C must equal 1");
  return m;
}

HyperFn FormHyper::bind(const Bindings& b) const {
  std::vector<EpsLin> up, low;
  for (const auto& f : upper) up.push_back(f.to_epslin(b));
  for (const auto& f : lower) low.push_back(f.to_epslin(b));
  return HyperFn(up, low, kappa, var);
}

std::string FormHyper::to_string() const {
  std::string s = std::to_string(upper.size()) + "F" + std::to_string(lower.size()) + "[";
  for (std::size_t i = 0; i < upper.size(); ++i) s += (i ? ", " : "") + upper[i].to_string();
  s += "; ";
  for (std::size_t i = 0; i < lower.size(); ++i) s += (i ? ", " : "") + lower[i].to_string();
  s += "; ";
  if (kappa != 1) s += hypred::to_string(kappa) + "*";
  return s + var + "]";
}

bool FormHyper::same_as(const FormHyper& o) const {
  return kappa == o.kappa && sorted(upper) == sorted(o.upper) && sorted(lower) == sorted(o.lower);
}

HyperSum mb_to_hyper(const MBRepr& m) {
  if (!check_dim(m)) throw Error(ErrorKind::InvalidArgument, "dim A + dim D - dim B - dim C must equal 1");
  for (std::size_t k = 0; k < m.c.size(); ++k) {
    if (m.c[k].is_constant() && is_integer(m.c[k].constant()))
      throw Error(ErrorKind::DegeneratePoles, "poles of Gamma(" + m.c[k].to_string() + " - t) meet those of Gamma(-t)");
    for (std::size_t l = k + 1; l < m.c.size(); ++l) {
      LinearForm d = m.c[k] - m.c[l];
      if (d.is_constant() && is_integer(d.constant()))
        throw Error(ErrorKind::DegeneratePoles, "pole families of Gamma(" + m.c[k].to_string() + " - t) and Gamma(" +
                                                    m.c[l].to_string() + " - t) collide");
    }
  }
  // Each family picks up (-1)^m from the residue and from every Gamma(. - t).
  const bool flip = (1 + m.c.size() + m.d.size()) % 2 == 1;
  const Rat arg_kappa = flip ? Rat(-m.kappa) : m.kappa;

  HyperSum out;
  {
    HyperTerm t;
    t.fn.kappa = arg_kappa;
    t.fn.var = m.var;
    t.fn.upper = m.a;
    for (const auto& d : m.d) t.fn.upper.push_back(1 - d);
    t.fn.lower = m.b;
    for (const auto& c : m.c) t.fn.lower.push_back(1 - c);
    t.coefficient = m.prefactor;
    append(t.coefficient.num, m.a);
    append(t.coefficient.num, m.c);
    append(t.coefficient.den, m.b);
    append(t.coefficient.den, m.d);
    out.terms.push_back(t);
  }
  for (std::size_t k = 0; k < m.c.size(); ++k) {
    const LinearForm& ck = m.c[k];
    HyperTerm t;
    t.power = ck;
    t.fn.kappa = arg_kappa;
    t.fn.var = m.var;
    t.coefficient = m.prefactor;
    t.coefficient.num.push_back(-ck);
    t.fn.lower.push_back(1 + ck);
    for (const auto& a : m.a) {
      t.fn.upper.push_back(a + ck);
      t.coefficient.num.push_back(a + ck);
    }
    for (std::size_t l = 0; l < m.c.size(); ++l) {
      if (l == k) continue;
      t.fn.lower.push_back(1 - m.c[l] + ck);
      t.coefficient.num.push_back(m.c[l] - ck);
    }
    for (const auto& b : m.b) {
      t.fn.lower.push_back(b + ck);
      t.coefficient.den.push_back(b + ck);
    }
    for (const auto& d : m.d) {
      t.fn.upper.push_back(1 - d + ck);
      t.coefficient.den.push_back(d - ck);
    }
    if (m.kappa != 1) t.coefficient.extra.push_back("(" + hypred::to_string(m.kappa) + ")^(" + ck.to_string() + ")");
    out.terms.push_back(t);
  }
  return out;
}

RawMB change_variable(const RawMB& raw, int sign, const LinearForm& shift, const std::string& new_var) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "variable change sign must be +1 or -1");
  RawMB out = raw;
  auto move = [&](std::vector<GammaArg>& v) {
    for (auto& g : v) {
      g.arg = g.arg + Rat(g.t_coeff) * shift;
      g.t_coeff *= sign;
    }
  };
  move(out.num);
  move(out.den);
  if (!shift.is_constant() || shift.constant() != 0)
    out.prefactor.extra.push_back("(" + hypred::to_string(raw.base) + "*" + raw.var + ")^(" + shift.to_string() + ")");
  if (sign < 0) {
    out.base = Rat(1) / raw.base;
    out.var = new_var;
  }
  return out;
}

MBRepr normalize(const RawMB& raw) {
  RawMB r = raw;
  r.num.clear();
  r.den.clear();
  auto split = [&](const std::vector<GammaArg>& src, std::vector<GammaArg>& dst, bool numerator) {
    for (const auto& g : src) {
      if (g.t_coeff == 1 || g.t_coeff == -1) {
        dst.push_back(g);
        continue;
      }
      if (g.t_coeff != 2 && g.t_coeff != -2)
        throw Error(ErrorKind::InvalidArgument, "only t coefficients +-1 and +-2 are supported");
      const int s = g.t_coeff / 2;
      dst.push_back({half(g.arg), s});
      dst.push_back({half(g.arg + 1), s});
      // Gamma(X + 2st) = 2^(X + 2st - 1) / sqrt(pi) * Gamma(X/2 + st) Gamma((X+1)/2 + st)
      const bool up = (s > 0) == numerator;
      r.base = up ? Rat(r.base * 4) : Rat(r.base / 4);
      const std::string f = "2^(" + (g.arg - 1).to_string() + ")";
      r.prefactor.extra.push_back(numerator ? f + "/sqrt(pi)" : "sqrt(pi)/" + f);
    }
  };
  split(raw.num, r.num, true);
  split(raw.den, r.den, false);

  MBRepr m;
  m.kappa = r.base;
  m.var = r.var;
  m.prefactor = r.prefactor;
  bool kernel = false;
  for (const auto& g : r.num) {
    if (!kernel && g.t_coeff == -1 && g.arg == LinearForm()) {
      kernel = true;
      continue;
    }
    (g.t_coeff > 0 ? m.a : m.c).push_back(g.arg);
  }
  if (!kernel) throw Error(ErrorKind::InvalidArgument, "integrand has no Gamma(-t) factor");
  for (const auto& g : r.den) (g.t_coeff > 0 ? m.b : m.d).push_back(g.arg);
  if (!check_dim(m)) throw Error(ErrorKind::InvalidArgument, "dim A + dim D - dim B - dim C must equal 1");
  return m;
}

MasterCount count_master_integrals(const HyperSum& h, const Bindings& b) {
  MasterCount out;
  std::vector<EpsLin> powers;
  for (const auto& t : h.terms) {
    EpsLin p = t.power.to_epslin(b);
    for (const auto& q : powers)
      if ((p - q).is_integer())
        throw Error(ErrorKind::DegeneratePoles, "two terms have powers differing by an integer at this binding");
    powers.push_back(p);
    HyperFn f = t.fn.bind(b);
    out.bound_terms.push_back(f);
    out.reports.push_back(detect_exceptional(f));
    out.per_term.push_back(count_nontrivial_basis(f));
  }
  if (out.per_term.empty()) throw Error(ErrorKind::InvalidArgument, "empty hypergeometric sum");
  out.count = out.per_term.front();
  for (int c : out.per_term)
    if (c != out.count) {
      std::string s;
      for (int x : out.per_term) s += (s.empty() ? "" : ", ") + std::to_string(x);
      throw Error(ErrorKind::CriterionViolation, "terms disagree on the number of basis functions: " + s);
    }
  return out;
}

LinearForm dressed_propagator_shift(const std::vector<LinearForm>& sigma_list) {
  if (sigma_list.empty()) throw Error(ErrorKind::InvalidArgument, "at least one sigma is required");
  LinearForm s;
  for (const auto& x : sigma_list) s = s + x;
  const Rat q(static_cast<long>(sigma_list.size()) - 1);
  return s - Rat(q / 2) * sym("n");
}

namespace presets {

RawMB c3_raw() {
  const LinearForm n = sym("n"), j1 = sym("j1"), j2 = sym("j2"), s = sym("sigma"), j12 = j1 + j2;
  RawMB r;
  r.base = Rat(-1);
  r.var = "(p1-p2)^2/m^2";
  r.num = {{LinearForm(), -1}, {j12 + s - half(n), 1}, {j1, 1}, {j2, 1}, {half(n) - s, 1}};
  r.den = {{half(n), 1}, {j12, 2}};
  r.prefactor.den = {j1, j2};
  r.prefactor.extra = {"i^(1-n)", "pi^(n/2)", "(-m^2)^(" + (half(n) - s - j12).to_string() + ")"};
  return r;
}

MBRepr c3() { return normalize(c3_raw()); }

HyperSum c3_printed() {
  const LinearForm n = sym("n"), j1 = sym("j1"), j2 = sym("j2"), s = sym("sigma"), j12 = j1 + j2;
  HyperTerm t;
  t.fn = {{j12 + s - half(n), j1, j2, half(n) - s}, {half(n), half(j12), half(j12 + 1)}, Rat(1, 4), "(p1-p2)^2/m^2"};
  t.coefficient.num = {j12 + s - half(n), half(n) - s};
  t.coefficient.den = {j12, half(n)};
  return {{t}};
}

MBRepr c1() {
  const LinearForm n = sym("n"), s1 = sym("sigma1"), s2 = sym("sigma2"), rho = sym("rho");
  MBRepr m = make_mb(Rat(-1), {rho + s1 + s2 - half(n), s1, s2}, {half(n)}, {half(n) - s1 - s2}, {}, "(p1-p2)^2/m^2");
  m.prefactor.den = {rho, s1, s2};
  m.prefactor.extra = {"i^(1-n)", "pi^(n/2)", "(-m^2)^(" + (half(n) - rho - s1 - s2).to_string() + ")"};
  return m;
}

HyperSum c1_printed() {
  const LinearForm n = sym("n"), s1 = sym("sigma1"), s2 = sym("sigma2"), rho = sym("rho");
  const std::string var = "(p1-p2)^2/m^2";
  HyperTerm a, b;
  a.fn = {{rho + s1 + s2 - half(n), s1, s2}, {half(n), 1 + s1 + s2 - half(n)}, Rat(-1), var};
  a.coefficient.num = {rho + s1 + s2 - half(n), half(n) - s1 - s2};
  a.coefficient.den = {half(n), rho};
  b.power = half(n) - s1 - s2;
  b.fn = {{rho, half(n) - s1, half(n) - s2}, {n - s1 - s2, half(n) - s1 - s2 + 1}, Rat(-1), var};
  b.coefficient.num = {half(n) - s1, half(n) - s2, s1 + s2 - half(n)};
  b.coefficient.den = {n - s1 - s2, s1, s2};
  return {{a, b}};
}

namespace {
LinearForm v1200_a1() {
  return sym("alpha") + sym("beta") + sym("sigma") + sym("rho") - sym("n");
}
}  // namespace

RawMB v1200_raw() {
  const LinearForm n = sym("n"), rho = sym("rho"), s = sym("sigma"), al = sym("alpha"), be = sym("beta");
  RawMB r;
  r.base = Rat(1);
  r.var = "M^2/m^2";
  r.num = {{LinearForm(), -1},
           {half(n) - s, -1},
           {2 * n - Rat(2) * al - Rat(2) * be - Rat(2) * s - rho, -2},
           {v1200_a1(), 1},
           {al + s - half(n), 1}};
  r.den = {{n - al - s, -1}, {Rat(3, 2) * n - al - be - s - rho, -1}};
  r.prefactor.num = {half(n) - al};
  r.prefactor.den = {al, rho, s};
  r.prefactor.extra = {"[i^(1-n) pi^(n/2)]^2", "(-m^2)^(" + (n - al - be - s - rho).to_string() + ")"};
  return r;
}

MBRepr v1200() { return normalize(change_variable(v1200_raw(), -1, -v1200_a1(), "m^2/M^2")); }

HyperSum v1200_printed() {
  const LinearForm n = sym("n"), rho = sym("rho"), s = sym("sigma"), al = sym("alpha"), be = sym("beta");
  const std::string var = "m^2/M^2";
  HyperTerm a, b;
  a.power = half(n) - be - rho;
  a.fn = {{al, al + s - half(n), half(n - rho) - be, half(n + 1 - rho) - be},
          {half(n), n - be - rho, half(n) + 1 - be - rho},
          Rat(4),
          var};
  a.coefficient.num = {al, al + s - half(n), be + rho - half(n), n - Rat(2) * be - rho};
  a.coefficient.den = {rho, n - be - rho};
  b.fn = {{v1200_a1(), al + be + rho - half(n), half(rho), half(rho + 1)},
          {half(n), be + rho, 1 + be + rho - half(n)},
          Rat(4),
          var};
  b.coefficient.num = {v1200_a1(), al + be + rho - half(n), half(n) - be - rho};
  b.coefficient.den = {be + rho};
  return {{a, b}};
}

MBRepr by_name(const std::string& name) {
  if (name == "c3") return c3();
  if (name == "c1") return c1();
  if (name == "v1200") return v1200();
  throw Error(ErrorKind::InvalidArgument, "unknown preset " + name);
}

HyperSum printed_by_name(const std::string& name) {
  if (name == "c3") return c3_printed();
  if (name == "c1") return c1_printed();
  if (name == "v1200") return v1200_printed();
  throw Error(ErrorKind::InvalidArgument, "unknown preset " + name);
}

}  // namespace presets

}  // namespace hypred
