#include "doctest.h"

#include "hypred/expansion.hpp"
#include "hypred/parametrization.hpp"

using namespace hypred;

namespace {

EpsLin E(const Rat& c, const Rat& e = Rat(0)) { return EpsLin(c, e); }

bool all_zero(const std::vector<BiSeries<Rat>>& v) {
  for (const auto& s : v)
    if (!s.zero()) return false;
  return true;
}

// omega and (theta + beta) omega from the series oracle.
std::vector<BiSeries<Rat>> gauss_layers(int p1, int p2, int r, int q, Rat a1, Rat a2, Rat c, Rat beta, int N, int K) {
  HyperFn f({E(make_rat(p1, q), a1), E(make_rat(p2, q), a2)}, {E(Rat(1 - make_rat(r, q)), c)});
  auto w = series_of_hyper(f, N, K);
  return {w, w.theta() + BiSeries<Rat>::constant(N, EpsPoly<Rat>(K, beta)) * w};
}

}  // namespace

TEST_CASE("Gauss systems are triangular exactly in the stated cases") {
  CHECK_NOTHROW(gauss_triangular_system(0, 0, 3, 5, Rat(1), Rat(2), Rat(3), Rat(0)));
  CHECK_NOTHROW(gauss_triangular_system(0, 4, 3, 5, Rat(1), Rat(2), Rat(3), Rat(0)));
  CHECK_NOTHROW(gauss_triangular_system(2, 7, -2, 3, Rat(1), Rat(2), Rat(3), make_rat(2, 3)));
  try {
    gauss_triangular_system(1, 2, 0, 3, Rat(1), Rat(2), Rat(3), Rat(0));
    FAIL("expected NotTriangular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTriangular);
  }
}

TEST_CASE("Gauss system is solved by the series oracle") {
  struct Case {
    int p1, p2, r, q;
    Rat beta;
  };
  for (const Case& c : {Case{0, 0, 0, 1, Rat(0)}, Case{0, 3, 1, 2, Rat(0)}, Case{1, 1, -1, 2, make_rat(1, 2)},
                        Case{2, 5, -2, 3, make_rat(2, 3)}}) {
    const Rat a1 = make_rat(2, 3), a2 = make_rat(-1, 2), cc = make_rat(1, 5);
    auto sys = gauss_triangular_system(c.p1, c.p2, c.r, c.q, a1, a2, cc, c.beta);
    CHECK(all_zero(system_residual(sys, gauss_layers(c.p1, c.p2, c.r, c.q, a1, a2, cc, c.beta, 16, 3))));
    // A wrong beta in the layer data breaks the identity.
    CHECK_FALSE(all_zero(system_residual(sys, gauss_layers(c.p1, c.p2, c.r, c.q, a1, a2, cc, c.beta + 1, 16, 3))));
  }
}

TEST_CASE("solving the integer Gauss system reproduces the direct expansion") {
  const Rat a1(2), a2 = make_rat(-1, 3), c = make_rat(3, 4);
  LetterSystem ls = to_letter_system(gauss_triangular_system(0, 0, 0, 1, a1, a2, c, Rat(0)));
  ls.set_boundary(0, 0, Rat(1));
  auto sol = ls.solve(4);
  HyperFn f({E(0, a1), E(0, a2)}, {E(1, c)});
  Expansion direct = epsilon_expand(f, 4);
  for (int k = 0; k <= 4; ++k) CHECK(sol[0][k] == direct.coeffs[k]);
  // rho = theta omega as series.
  auto w = series_of_hyper(f, 12, 4).theta();
  for (int k = 0; k <= 4; ++k) {
    auto s = gpl_series(sol[1][k], 12);
    for (int j = 0; j <= 12; ++j) CHECK(s[j] == w.at(j, k));
  }
}

TEST_CASE("Lemma IV condition") {
  CHECK(gauss_lemma_iv(1, 1, -1, 2));
  CHECK(gauss_lemma_iv(2, 2, -2, 3));
  CHECK_FALSE(gauss_lemma_iv(1, 2, -1, 2));
  CHECK_FALSE(gauss_lemma_iv(1, 1, 1, 2));
  CHECK_FALSE(gauss_lemma_iv(0, 1, 0, 2));
}

TEST_CASE("factorization conditions") {
  auto integer = factorization_conditions({E(0, 1), E(0, 2), E(0, 3)}, {E(1, 1), E(1, 1)});
  CHECK(integer.tag == "R1=R2");
  CHECK(integer.beta == 0);
  CHECK(integer.r1 == 0);
  CHECK(integer.r2 == 0);

  // B1 = 1 + A1 gives beta = A1.
  auto shifted = factorization_conditions({E(make_rat(1, 3)), E(make_rat(2, 5)), E(0, 1)},
                                          {E(make_rat(4, 3)), E(make_rat(7, 5))});
  CHECK(shifted.beta_candidates.size() == 2);
  CHECK(shifted.tag == "R1=R2");

  auto gauss = factorization_conditions({E(make_rat(1, 2), 1), E(make_rat(1, 2), 2)}, {E(make_rat(3, 2))});
  CHECK(gauss.beta == make_rat(1, 2));
  CHECK(gauss.tag == "R2=0");
  REQUIRE(gauss.gauss_lemma_iv);
  CHECK(*gauss.gauss_lemma_iv);
  CHECK(gauss.z_exponent == 0);
  CHECK(gauss.zm1_exponent == make_rat(-1, 2));

  auto off = factorization_conditions({E(make_rat(1, 2)), E(Rat(1))}, {E(make_rat(3, 2))});
  REQUIRE(off.gauss_lemma_iv);
  CHECK_FALSE(*off.gauss_lemma_iv);

  CHECK_THROWS_AS(factorization_conditions({E(make_rat(1, 3)), E(make_rat(1, 5))}, {E(make_rat(1, 7))}), Error);
}

TEST_CASE("3F2 system and parametrization") {
  const Rat a1 = make_rat(1, 2), a2(2), a3 = make_rat(-1, 3), b1 = make_rat(3, 4), b2(1);
  struct Case {
    int r, p, q;
    bool rational;
  };
  for (const Case& c : {Case{1, -1, 2, true}, Case{1, 1, 2, false}, Case{0, 0, 1, true}, Case{2, -1, 3, false}}) {
    ThreeF2Report rep = three_f2_system(c.r, c.p, c.q, a1, a2, a3, b1, b2);
    CHECK(rep.rational_parametrization == c.rational);
    const Rat R = make_rat(c.r, c.q);
    HyperFn f({E(R, a1), E(0, a2), E(0, a3)}, {E(Rat(1 + R), b1), E(Rat(1 - make_rat(c.p, c.q)), b2)});
    const int N = 14, K = 4;
    auto w = series_of_hyper(f, N, K);
    auto t = w.theta();
    auto l2 = t.theta() + BiSeries<Rat>::constant(N, EpsPoly<Rat>(K, R)) * t;
    CHECK(all_zero(system_residual(rep.system, {w, t, l2})));
  }
  ThreeF2Report integer = three_f2_system(0, 0, 1, a1, a2, a3, b1, b2);
  CHECK(integer.z_exponent == 0);
  CHECK(integer.zm1_exponent == 0);
  CHECK_THROWS_AS(three_f2_system(1, -1, 2, Rat(0), a2, a3, b1, b2), Error);
}

TEST_CASE("F3 admissibility") {
  auto ok = f3_parametrization_check(1, 0, 0, 1, 0, 2);
  CHECK(ok.pass);
  CHECK(ok.s1 == 1);
  CHECK(ok.s2 == 1);
  CHECK_FALSE(f3_parametrization_check(1, 0, 1, 0, 0, 2).pass);
  auto zero = f3_parametrization_check(0, 0, 0, 0, 0, 1);
  CHECK(zero.pass);
  CHECK(zero.form == "integer");
  CHECK(zero.h1_x == 0);
  CHECK(zero.H_xy == 0);
  auto first = f3_parametrization_check(1, 0, 0, 0, -1, 2);
  CHECK(first.form == "first");
  auto second = f3_parametrization_check(1, 0, 0, 0, 0, 2);
  CHECK(second.form == "second");
  CHECK(f3_parametrization_check(0, 0, 0, 0, 2, 1).nonpositive_lower);
}
