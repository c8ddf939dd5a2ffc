#include "hypred/expansion.hpp"

#include <algorithm>

namespace hypred {

namespace {

template <class C>
bool eps_only(const EpsLinT<C>& x) {
  return is_zero(x.const_part);
}

template <class C>
bool one_plus_eps(const EpsLinT<C>& x) {
  return x.const_part == 1;
}

template <class C>
HyperFnT<C> strip_identical(const HyperFnT<C>& f) {
  std::vector<EpsLinT<C>> up = f.upper, low;
  for (const auto& b : f.lower) {
    auto it = std::find(up.begin(), up.end(), b);
    if (it != up.end())
      up.erase(it);
    else
      low.push_back(b);
  }
  return HyperFnT<C>(up, low, f.kappa, f.var);
}

template <class C>
struct Built {
  LetterSystemT<C> sys;
  int target = 0;
  bool unit_gauge = true;  // false: component = (1 - kappa z) * function
};

// Appends the components of `inner` to `outer`, shifting indices.
template <class C>
int embed(LetterSystemT<C>& outer, const LetterSystemT<C>& inner) {
  const int off = outer.size;
  LetterSystemT<C> grown(off + inner.size, outer.var);
  for (const auto& [letter, per] : outer.coupling)
    for (int j = 0; j < static_cast<int>(per.size()); ++j)
      for (int r = 0; r < off; ++r)
        for (int c = 0; c < off; ++c) grown.add(letter, j, r, c, per[j][static_cast<std::size_t>(r) * off + c]);
  for (const auto& [letter, per] : inner.coupling)
    for (int j = 0; j < static_cast<int>(per.size()); ++j)
      for (int r = 0; r < inner.size; ++r)
        for (int c = 0; c < inner.size; ++c)
          grown.add(letter, j, off + r, off + c, per[j][static_cast<std::size_t>(r) * inner.size + c]);
  for (int i = 0; i < off; ++i) grown.boundary[i] = outer.boundary[i];
  for (int i = 0; i < inner.size; ++i) grown.boundary[off + i] = inner.boundary[i];
  outer = grown;
  return off;
}

// theta^i F for pF_{p-1}(a eps; 1 + b eps; kappa z).
template <class C>
Built<C> pfaff(const HyperFnT<C>& f, const Rat& pole) {
  const int p = static_cast<int>(f.upper.size());
  std::vector<C> a, b;
  for (const auto& x : f.upper) a.push_back(x.eps_part);
  for (const auto& x : f.lower) b.push_back(x.eps_part);
  Built<C> out{LetterSystemT<C>(p), 0, true};
  for (int i = 0; i + 1 < p; ++i) out.sys.add(Rat(0), 0, i, i + 1, C(1));
  for (int j = 1; j <= p; ++j) {
    const C eb = j <= p - 1 ? elementary_symmetric(b, j) : C(0);
    const C ea = elementary_symmetric(a, j);
    out.sys.add(Rat(0), j, p - 1, p - j, C(-eb));
    out.sys.add(pole, j, p - 1, p - j, C(eb - ea));
  }
  out.sys.set_boundary(0, 0, C(1));
  return out;
}

template <class C>
Built<C> build_integer_class(const HyperFnT<C>& f, const Rat& pole) {
  const HyperFnT<C> g = strip_identical(f);
  const bool pure = std::all_of(g.upper.begin(), g.upper.end(), eps_only<C>) &&
                    std::all_of(g.lower.begin(), g.lower.end(), one_plus_eps<C>);
  if (pure) return pfaff(g, pole);
  if (g.p() == 0 && g.upper[0].const_part == 1) {
    // 1F0(1 + a eps; kappa z) = (1 - kappa z)^(-1) psi, psi = (1 - kappa z)^(-a eps).
    Built<C> out{LetterSystemT<C>(1), 0, false};
    out.sys.add(pole, 1, 0, 0, C(-g.upper[0].eps_part));
    out.sys.set_boundary(0, 0, C(1));
    return out;
  }
  for (int i = 0; i < static_cast<int>(g.upper.size()); ++i) {
    if (!eps_only(g.upper[i]) || is_zero(g.upper[i].eps_part)) continue;
    for (int l = 0; l < g.p(); ++l) {
      if (!(g.lower[l] == g.upper[i] + EpsLinT<C>(Rat(1)))) continue;
      // (theta + x eps) F = x eps G, G the function without this pair.
      const C x = g.upper[i].eps_part;
      HyperFnT<C> rest = g;
      rest.upper.erase(rest.upper.begin() + i);
      rest.lower.erase(rest.lower.begin() + l);
      Built<C> inner = build_integer_class(rest, pole);
      Built<C> out{LetterSystemT<C>(1), 0, true};
      out.sys.add(Rat(0), 1, 0, 0, C(-x));
      out.sys.set_boundary(0, 0, C(1));
      const int off = embed(out.sys, inner.sys);
      const int t = off + inner.target;
      out.sys.add(Rat(0), 1, 0, t, x);
      if (!inner.unit_gauge) out.sys.add(pole, 1, 0, t, C(-x));  // 1/(z (1 - kappa z)) = 1/z - 1/(z - 1/kappa)
      return out;
    }
  }
  throw Error(ErrorKind::UnsupportedClass, "parameters fall outside the supported expansion classes");
}

template <class C>
bool half_integer_gauss(const HyperFnT<C>& f) {
  return f.p() == 1 && f.upper[0].const_part == Rat(1, 2) && f.upper[1].const_part == Rat(1, 2) &&
         f.lower[0].const_part == Rat(3, 2);
}

template <class C>
ExpansionSystem<C> build(const HyperFnT<C>& f) {
  if (is_zero(f.kappa)) throw Error(ErrorKind::InvalidArgument, "argument factor must be nonzero");
  if (half_integer_gauss(f)) {
    if (!is_zero(f.lower[0].eps_part))
      throw Error(ErrorKind::UnsupportedClass,
                  "half-integer Gauss case needs an eps-free lower parameter (3/2 + c eps with c = 0)");
    if (f.kappa != 1) throw Error(ErrorKind::UnsupportedClass, "half-integer Gauss case needs argument z");
    const C a1 = f.upper[0].eps_part, a2 = f.upper[1].eps_part;
    // Components P (0) and T (1) in xi.
    LetterSystemT<C> s(2, "xi");
    s.add(Rat(1), 0, 0, 1, C(-1));
    s.add(Rat(-1), 0, 0, 1, C(1));
    s.add(Rat(1), 1, 1, 1, C(a1 + a2));
    s.add(Rat(-1), 1, 1, 1, C(a1 + a2));
    s.add(Rat(1), 2, 1, 0, C(a1 * a2));
    s.add(Rat(-1), 2, 1, 0, C(-(a1 * a2)));
    s.set_boundary(1, 0, C(Rat(1, 2)));
    return {s, 0, true};
  }
  for (const auto& x : f.upper)
    if (!is_integer(x.const_part)) throw Error(ErrorKind::UnsupportedClass, "non-integer parameter outside the Gauss case");
  for (const auto& x : f.lower)
    if (!is_integer(x.const_part)) throw Error(ErrorKind::UnsupportedClass, "non-integer parameter outside the Gauss case");
  Built<C> b = build_integer_class(f, Rat(1) / f.kappa);
  if (!b.unit_gauge) throw Error(ErrorKind::UnsupportedClass, "eps^0 term is not a polylogarithm of weight 0");
  return {b.sys, b.target, false};
}

template <class C>
ExpansionT<C> expand(const HyperFnT<C>& f, int eps_order) {
  if (eps_order < 0) throw Error(ErrorKind::InvalidArgument, "negative eps order");
  ExpansionSystem<C> s = build(f);
  auto sol = s.system.solve(eps_order);
  ExpansionT<C> out;
  out.coeffs = sol[s.target];
  out.half_integer = s.half_integer;
  if (s.half_integer) {
    out.var = "xi";
    out.normalization = "xi*(1-xi^2)^(-1/2)*F, z = xi^2/(xi^2-1)";
  }
  return out;
}

// Coefficients of the eps^k layer of F re-expanded in xi and multiplied by
// xi (1 - xi^2)^(-1/2), up to xi^N.
template <class C>
std::vector<C> xi_layer(const std::vector<C>& w, int order) {
  // z(xi) = -sum_{i>=1} xi^(2i)
  std::vector<Rat> z(order + 1, Rat(0));
  for (int i = 2; i <= order; i += 2) z[i] = -1;
  std::vector<C> comp(order + 1, C(0));
  std::vector<Rat> power(order + 1, Rat(0));
  power[0] = 1;
  for (int j = 0; 2 * j <= order && j < static_cast<int>(w.size()); ++j) {
    for (int m = 0; m <= order; ++m)
      if (!is_zero(power[m])) comp[m] = comp[m] + w[j] * power[m];
    std::vector<Rat> next(order + 1, Rat(0));
    for (int a = 0; a <= order; ++a) {
      if (is_zero(power[a])) continue;
      for (int b = 2; a + b <= order; b += 2) next[a + b] += power[a] * z[b];
    }
    power = next;
  }
  // xi (1 - xi^2)^(-1/2) = sum_i binom(2i, i) / 4^i xi^(2i+1)
  std::vector<Rat> g(order + 1, Rat(0));
  Rat c(1);
  for (int i = 0; 2 * i + 1 <= order; ++i) {
    g[2 * i + 1] = c;
    c = c * Rat(2 * i + 1, 2 * i + 2);
  }
  std::vector<C> out(order + 1, C(0));
  for (int a = 0; a <= order; ++a) {
    if (is_zero(comp[a])) continue;
    for (int b = 1; a + b <= order; b += 2) out[a + b] = out[a + b] + comp[a] * g[b];
  }
  return out;
}

template <class C>
VerifyOutcome verify(const HyperFnT<C>& f, const ExpansionT<C>& e, int z_order) {
  const int K = static_cast<int>(e.coeffs.size()) - 1;
  VerifyOutcome out;
  if (K < 0) return out;
  BiSeries<C> s = series_of_hyper(f, z_order, K);
  for (int k = 0; k <= K; ++k) {
    std::vector<C> want = s.eps_layer(k);
    if (e.half_integer) want = xi_layer(want, z_order);
    std::vector<C> got = gpl_series(e.coeffs[k], z_order);
    for (int j = 0; j <= z_order; ++j)
      if (!(want[j] == got[j])) {
        // Report the lowest z order first across all eps layers.
        if (!out.mismatch || j < out.mismatch->z_order) out.mismatch = Mismatch{j, k};
        break;
      }
  }
  out.pass = !out.mismatch;
  return out;
}

template <class C>
std::string render(const ExpansionT<C>& e) {
  std::string s;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k)
    s += "eps^" + std::to_string(k) + ": " + to_string(e.coeffs[k]) + "\n";
  return s;
}

}  // namespace

Expansion epsilon_expand(const HyperFn& f, int eps_order) { return expand(f, eps_order); }
SymExpansion epsilon_expand(const SymHyperFn& f, int eps_order) { return expand(f, eps_order); }
VerifyOutcome verify_expansion(const HyperFn& f, const Expansion& e, int z_order) { return verify(f, e, z_order); }
VerifyOutcome verify_expansion(const SymHyperFn& f, const SymExpansion& e, int z_order) {
  return verify(f, e, z_order);
}
ExpansionSystem<Rat> expansion_system(const HyperFn& f) { return build(f); }
ExpansionSystem<MPoly> expansion_system(const SymHyperFn& f) { return build(f); }
std::string to_string(const Expansion& e) { return render(e); }
std::string to_string(const SymExpansion& e) { return render(e); }

}  // namespace hypred
