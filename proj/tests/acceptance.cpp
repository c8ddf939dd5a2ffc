// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hypred/expansion.hpp"
#include "hypred/mellin_barnes.hpp"
#include "hypred/parametrization.hpp"
#include "hypred/reduction.hpp"

using namespace hypred;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rat rnd_rat(std::mt19937& g, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo * max_den, hi * max_den), den(1, max_den);
  return make_rat(num(g), den(g));
}

// Rational with denominator 2..max_den that is not an integer.
Rat rnd_fraction(std::mt19937& g, int lo, int hi, int max_den) {
  for (;;) {
    std::uniform_int_distribution<int> den(2, max_den);
    const int d = den(g);
    std::uniform_int_distribution<int> num(lo * d, hi * d);
    Rat r = make_rat(num(g), d);
    if (!is_integer(r)) return r;
  }
}

Rat rnd_eps(std::mt19937& g, bool allow_zero) {
  for (;;) {
    Rat r = rnd_rat(g, -3, 3, 2);
    if (allow_zero || r != 0) return r;
  }
}

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 1. The ODE annihilates the term-by-term series.
Outcome criterion_ode(double& elapsed) {
  const auto t0 = Clock::now();
  std::mt19937 g(101);
  Outcome o;
  int done = 0;
  for (int i = 0; i < 50; ++i) {
    const int p = 1 + i % 3;
    HyperFn f;
    for (int k = 0; k <= p; ++k) f.upper.push_back({rnd_rat(g, -3, 3, 5), rnd_eps(g, true)});
    for (int k = 0; k < p; ++k) {
      Rat c = rnd_rat(g, -3, 3, 5);
      if (is_integer(c) && c <= 0) c += make_rat(1, 2) - c;  // keep clear of the pole
      f.lower.push_back({c, rnd_eps(g, true)});
    }
    f.kappa = (i % 5 == 0) ? rnd_rat(g, -2, 2, 3) : Rat(1);
    if (f.kappa == 0) f.kappa = -1;
    const auto s = series_of_hyper(f, 30, 4);
    o.require(ode_operator(f).apply(s).zero(), "ODE residual nonzero for " + to_string(f));
    ++done;
  }
  elapsed = seconds_since(t0);
  o.require(elapsed < 60, "runtime above 60 s");
  o.detail = o.pass ? std::to_string(done) + " instances, N=30, K=4" : o.detail;
  return o;
}

HyperFn random_generic(std::mt19937& g, int p) {
  for (;;) {
    HyperFn f;
    for (int k = 0; k <= p; ++k) f.upper.push_back({rnd_fraction(g, -2, 2, 5), rnd_eps(g, false)});
    for (int k = 0; k < p; ++k) f.lower.push_back({rnd_fraction(g, -2, 2, 5), rnd_eps(g, false)});
    if (!detect_exceptional(f).exceptional()) return f;
  }
}

// Random unit-step path of length 1..4 from the basis.
std::vector<Step> random_path(std::mt19937& g, const HyperFn& f) {
  std::uniform_int_distribution<int> len(1, 4);
  const int n = len(g);
  const int slots = static_cast<int>(f.upper.size() + f.lower.size());
  std::vector<Step> path;
  for (int i = 0; i < n; ++i) {
    const int s = static_cast<int>(g() % slots);
    const int dir = (g() % 2) ? 1 : -1;
    if (s < static_cast<int>(f.upper.size()))
      path.push_back({Side::Upper, s, dir});
    else
      path.push_back({Side::Lower, s - static_cast<int>(f.upper.size()), dir});
  }
  return path;
}

// 2. Reduction identities and path independence.
Outcome criterion_reduction(double& elapsed) {
  const auto t0 = Clock::now();
  std::mt19937 g(202);
  Outcome o;
  int verified = 0, pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const HyperFn basis = random_generic(g, 1 + i % 2);
    HyperFn target = basis;
    for (const auto& st : random_path(g, basis)) target = apply_step(target, st);
    if (target == basis) target = apply_step(target, {Side::Upper, 0, 1});
    try {
      ReductionResult r = reduce_to_basis(target, basis);
      VerifyOutcome v = verify_reduction(r, 30, 4);
      o.require(v.pass, "identity fails for " + to_string(target) + " on " + to_string(basis));
      ++verified;
    } catch (const Error& e) {
      o.require(false, std::string("reduction threw: ") + e.what());
    }
  }
  for (int i = 0; i < 20; ++i) {
    const HyperFn basis = random_generic(g, 1 + i % 2);
    std::vector<Step> path;
    while (path.size() < 2) path = random_path(g, basis);
    HyperFn target = basis;
    for (const auto& st : path) target = apply_step(target, st);
    std::vector<Step> other = path;
    std::reverse(other.begin(), other.end());
    if (other.front().side == path.front().side && other.front().index == path.front().index)
      std::rotate(other.begin(), other.begin() + 1, other.end());
    try {
      auto a = normalized_ratios(reduce_along(target, basis, path));
      auto b = normalized_ratios(reduce_along(target, basis, other));
      o.require(a == b, "paths disagree for " + to_string(target));
      ++pairs;
    } catch (const Error& e) {
      o.require(false, std::string("path reduction threw: ") + e.what());
    }
  }
  elapsed = seconds_since(t0);
  o.require(elapsed < 300, "runtime above 5 min");
  if (o.pass) o.detail = std::to_string(verified) + " shifts verified at N=30, K=4; " + std::to_string(pairs) + " path pairs";
  return o;
}

MBRepr substitute(const MBRepr& m, const std::string& name, const LinearForm& value) {
  MBRepr r = m;
  for (auto* l : {&r.a, &r.b, &r.c, &r.d})
    for (auto& f : *l) f = f.substitute(name, value);
  return r;
}

LinearForm dressed(int s1, int s2) { return dressed_propagator_shift({LinearForm(s1), LinearForm(s2)}); }

// 3. Master integral counts.
Outcome criterion_counts() {
  Outcome o;
  auto count = [&](const MBRepr& m, const Bindings& b) { return count_master_integrals(mb_to_hyper(m), b).count; };
  try {
    const int c3 = count(presets::c3(), {{"j1", 1}, {"j2", 1}, {"sigma", 1}});
    o.require(c3 == 2, "C3 gives L=" + std::to_string(c3));
    MBRepr generic = substitute(substitute(presets::c1(), "sigma1", dressed(1, 1)), "sigma2", dressed(2, 1));
    const int c1g = count(generic, {{"rho", 1}});
    o.require(c1g == 2, "C1 generic gives L=" + std::to_string(c1g));
    const int c1a = count(substitute(presets::c1(), "sigma2", dressed(1, 1)), {{"sigma1", 1}, {"rho", 1}});
    o.require(c1a == 1, "C1 with integer sigma1 gives L=" + std::to_string(c1a));
    const int c1b = count(substitute(presets::c1(), "sigma1", dressed(1, 1)), {{"sigma2", 2}, {"rho", 1}});
    o.require(c1b == 1, "C1 with integer sigma2 gives L=" + std::to_string(c1b));
    const int v = count(presets::v1200(), {{"rho", 1}, {"sigma", 1}, {"alpha", 1}, {"beta", 1}});
    o.require(v == 2, "V1200 gives L=" + std::to_string(v));
    if (o.pass) o.detail = "C3 L=2, C1 L=2 / L=1, V1200 L=2";
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  return o;
}

// 4. MB conversion against the printed parameter lists.
Outcome criterion_mb() {
  Outcome o;
  for (const std::string name : {"v1200", "c1", "c3"}) {
    const HyperSum got = mb_to_hyper(presets::by_name(name));
    const HyperSum want = presets::printed_by_name(name);
    const std::size_t q = name == "c3" ? 1 : 2;
    o.require(got.terms.size() == q && want.terms.size() == q, name + ": term count " + std::to_string(got.terms.size()));
    if (got.terms.size() != want.terms.size()) continue;
    std::vector<bool> used(want.terms.size(), false);
    for (const auto& t : got.terms) {
      bool found = false;
      for (std::size_t j = 0; j < want.terms.size() && !found; ++j)
        if (!used[j] && t.fn.same_as(want.terms[j].fn) && t.power == want.terms[j].power) found = used[j] = true;
      o.require(found, name + ": no printed match for " + t.fn.to_string());
    }
  }
  const HyperSum c3 = mb_to_hyper(presets::c3());
  o.require(c3.terms.size() == 1 && c3.terms[0].fn.upper.size() == 4 && c3.terms[0].fn.lower.size() == 3,
            "C3 is not a single 4F3");
  if (o.pass) o.detail = "V1200 q=2, C1 q=2, C3 single 4F3";
  return o;
}

// 5. eps-expansions.
Outcome criterion_expansion(double& elapsed) {
  const auto t0 = Clock::now();
  Outcome o;
  const MPoly a = MPoly::symbol("a"), b = MPoly::symbol("b"), c = MPoly::symbol("c");
  SymHyperFn f({SymEpsLin(0, a), SymEpsLin(0, b)}, {SymEpsLin(1, c)});
  SymExpansion e = epsilon_expand(f, 4);
  o.require(verify_expansion(f, e, 30).pass, "2F1(a eps, b eps; 1 + c eps) fails verification");
  // Layer eps^2 against ab Li2(z) = ab sum z^k / k^2.
  const auto layer = gpl_series(e.coeffs[2], 30);
  for (int k = 1; k <= 30; ++k) o.require(layer[k] == a * b * Rat(make_rat(1, k * k)), "eps^2 layer differs from ab Li2");
  o.require(layer[0].zero(), "eps^2 layer has a constant");
  o.require(e.coeffs[2].terms().size() == 1 && e.coeffs[2].coeff({0, 1}) == -(a * b),
            "eps^2 layer is not -ab G(0,1; z)");
  HyperFn h({EpsLin(1), EpsLin(0, 1)}, {EpsLin(1, 1)});
  Expansion eh = epsilon_expand(h, 4);
  o.require(verify_expansion(h, eh, 30).pass, "2F1(1, eps; 1 + eps) fails verification");
  elapsed = seconds_since(t0);
  o.require(elapsed < 30, "runtime above 30 s");
  if (o.pass) o.detail = "both functions verified to K=4, N=30; eps^2 layer = ab Li2(z)";
  return o;
}

std::vector<std::string> symbols_of(const MBRepr& m) {
  std::set<std::string> s;
  for (const auto* l : {&m.a, &m.b, &m.c, &m.d})
    for (const auto& f : *l)
      for (const auto& [name, v] : f.coeffs())
        if (name != "n") s.insert(name);
  return {s.begin(), s.end()};
}

// 6. Criterion (i): all terms of a diagram agree on L.
Outcome criterion_i() {
  Outcome o;
  int cases = 0;
  for (const std::string name : {"c3", "c1", "v1200"}) {
    const MBRepr m = presets::by_name(name);
    const HyperSum h = mb_to_hyper(m);
    const auto syms = symbols_of(m);
    std::vector<int> v(syms.size(), 1);
    for (;;) {
      Bindings b;
      std::string where = name;
      for (std::size_t i = 0; i < syms.size(); ++i) {
        b[syms[i]] = v[i];
        where += " " + syms[i] + "=" + std::to_string(v[i]);
      }
      try {
        count_master_integrals(h, b);
      } catch (const Error& e) {
        o.require(false, where + ": " + e.what());
      }
      ++cases;
      std::size_t i = 0;
      while (i < v.size() && ++v[i] > 3) v[i++] = 1;
      if (i == v.size()) break;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " bindings over C3, C1, V1200";
  return o;
}

// 7. Parametrization classifiers.
Outcome criterion_classifiers() {
  Outcome o;
  int gauss = 0, f2 = 0, f3 = 0;
  for (int q = 1; q <= 5; ++q)
    for (int p1 = -4; p1 <= 4; ++p1)
      for (int p2 = -4; p2 <= 4; ++p2)
        for (int r = -4; r <= 4; ++r) {
          const bool want = p1 == p2 && p1 == -r;
          o.require(gauss_lemma_iv(p1, p2, r, q) == want, "Lemma IV misclassifies a tuple");
          ++gauss;
        }
  // The accepted family yields a triangular system solved by the series oracle.
  for (int q = 2; q <= 5; ++q)
    for (int p = 1; p < q; ++p) {
      const Rat a1 = make_rat(1, 3), a2 = make_rat(-2, 5), c = make_rat(3, 7), beta = make_rat(p, q);
      try {
        TriangularSystem s = gauss_triangular_system(p, p, -p, q, a1, a2, c, beta);
        HyperFn f({EpsLin(beta, a1), EpsLin(beta, a2)}, {EpsLin(Rat(1 + beta), c)});
        auto w = series_of_hyper(f, 20, 3);
        auto rho = w.theta() + BiSeries<Rat>::constant(20, EpsPoly<Rat>(3, beta)) * w;
        for (const auto& res : system_residual(s, {w, rho})) o.require(res.zero(), "Gauss system residual nonzero");
        auto rep = factorization_conditions(f.upper, f.lower);
        o.require(rep.gauss_lemma_iv && *rep.gauss_lemma_iv, "factorization report rejects an accepted tuple");
      } catch (const Error& e) {
        o.require(false, std::string("accepted family threw: ") + e.what());
      }
    }
  for (int q = 1; q <= 4; ++q)
    for (int p = -4; p <= 4; ++p)
      for (int r = -4; r <= 4; ++r) {
        ThreeF2Report rep = three_f2_system(r, p, q, make_rat(1, 2), Rat(2), make_rat(-1, 3), make_rat(3, 4), Rat(1));
        o.require(rep.rational_parametrization == (p == -r), "3F2 classifier misclassifies a tuple");
        ++f2;
      }
  for (int q = 1; q <= 3; ++q)
    for (int p = -2; p <= 2; ++p)
      for (int p1 = -2; p1 <= 2; ++p1)
        for (int p2 = -2; p2 <= 2; ++p2)
          for (int r1 = -2; r1 <= 2; ++r1)
            for (int r2 = -2; r2 <= 2; ++r2) {
              const bool want = p1 * r1 == 0 && p2 * r2 == 0;
              o.require(f3_parametrization_check(p1, p2, r1, r2, p, q).pass == want, "F3 checker misclassifies a tuple");
              ++f3;
            }
  if (o.pass)
    o.detail = std::to_string(gauss) + " Gauss, " + std::to_string(f2) + " 3F2, " + std::to_string(f3) + " F3 tuples";
  return o;
}

// 8. Negative controls.
Outcome criterion_negative() {
  Outcome o;
  int controls = 0;
  const HyperFn basis({EpsLin(make_rat(1, 2), 1), EpsLin(make_rat(1, 3), 2)}, {EpsLin(make_rat(3, 4), -1)});
  const HyperFn target({EpsLin(make_rat(5, 2), 1), EpsLin(make_rat(-2, 3), 2)}, {EpsLin(make_rat(7, 4), -1)});
  const ReductionResult good = reduce_to_basis(target, basis);
  for (int j = 0; j < 2; ++j)
    for (int m = 0; m <= 5; ++m) {
      ReductionResult bad = good;
      std::vector<QEps> cs(m + 1, QEps(0));
      cs[m] = QEps(make_rat(1, 7));
      bad.r_polys[j] = bad.r_polys[j] + RatFunc(Poly<QEps>(cs));
      // theta^j F starts at z^1 for j >= 1.
      const int want_z = m + (j > 0 ? 1 : 0);
      VerifyOutcome v = verify_reduction(bad, 30, 4);
      o.require(!v.pass && v.mismatch && v.mismatch->z_order == want_z && v.mismatch->eps_order == 0,
                "corrupted R" + std::to_string(j) + " at z^" + std::to_string(m) + " not located at z^" +
                    std::to_string(want_z));
      ++controls;
    }
  const HyperFn h({EpsLin(1), EpsLin(0, 1)}, {EpsLin(1, 1)});
  const Expansion e = epsilon_expand(h, 4);
  const std::vector<GplWord> words{{1}, {0, 1}, {1, 1}, {0, 0, 1}, {1, 0, 1}};
  for (int k = 1; k <= 4; ++k)
    for (const auto& w : words) {
      Expansion bad = e;
      bad.coeffs[k] = bad.coeffs[k] + PolyLogExpr::word(w, make_rat(2, 5));
      VerifyOutcome v = verify_expansion(h, bad, 30);
      // Each nonzero letter contributes one power of z; zeros only divide by t.
      const int want_z = static_cast<int>(std::count_if(w.begin(), w.end(), [](const Rat& l) { return l != 0; }));
      o.require(!v.pass && v.mismatch && v.mismatch->z_order == want_z && v.mismatch->eps_order == k,
                "corrupted eps^" + std::to_string(k) + " layer not located");
      ++controls;
    }
  auto singular = [&](const HyperFn& t, const HyperFn& b) {
    try {
      reduce_to_basis(t, b);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::SingularStep;
    }
    return false;
  };
  o.require(singular(HyperFn({EpsLin(1), EpsLin(make_rat(1, 3), 1)}, {EpsLin(make_rat(1, 2), 1)}),
                     HyperFn({EpsLin(0), EpsLin(make_rat(1, 3), 1)}, {EpsLin(make_rat(1, 2), 1)})),
            "raising a zero upper parameter did not raise SingularStep");
  // Upper equal to lower: the step leaves a reducible pair.
  o.require(singular(HyperFn({EpsLin(make_rat(1, 3), 1), EpsLin(make_rat(1, 5))}, {EpsLin(make_rat(4, 3), 1)}),
                     HyperFn({EpsLin(make_rat(1, 3), 1), EpsLin(make_rat(1, 5))}, {EpsLin(make_rat(1, 3), 1)})),
            "leaving an equal upper/lower pair did not raise SingularStep");
  o.require(singular(HyperFn({EpsLin(make_rat(2, 7), 2), EpsLin(make_rat(1, 5)), EpsLin(make_rat(1, 2), -1)},
                             {EpsLin(make_rat(9, 7), 2), EpsLin(make_rat(3, 4), 1)}),
                     HyperFn({EpsLin(make_rat(2, 7), 2), EpsLin(make_rat(1, 5)), EpsLin(make_rat(1, 2), -1)},
                             {EpsLin(make_rat(2, 7), 2), EpsLin(make_rat(3, 4), 1)})),
            "3F2 with an equal pair did not raise SingularStep");
  controls += 3;
  if (o.pass) o.detail = std::to_string(controls) + " controls located at the lowest affected order";
  return o;
}

}  // namespace

int main() {
  struct Row {
    int id;
    std::string name;
    std::function<Outcome(double&)> run;
  };
  const std::vector<Row> rows{
      {1, "ODE annihilation", criterion_ode},
      {2, "reduction identities", criterion_reduction},
      {3, "master counts", [](double&) { return criterion_counts(); }},
      {4, "MB conversion fidelity", [](double&) { return criterion_mb(); }},
      {5, "eps-expansion", criterion_expansion},
      {6, "criterion (i) on presets", [](double&) { return criterion_i(); }},
      {7, "parametrization classifiers", [](double&) { return criterion_classifiers(); }},
      {8, "negative controls", [](double&) { return criterion_negative(); }},
  };
  bool all = true;
  for (const auto& row : rows) {
    const auto t0 = Clock::now();
    double timed = 0;
    Outcome o;
    try {
      o = row.run(timed);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("%s criterion %d %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", row.id, row.name.c_str(), o.detail.c_str(),
                fmt_time(seconds_since(t0)).c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
