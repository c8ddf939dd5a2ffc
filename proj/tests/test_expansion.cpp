#include "doctest.h"

#include "hypred/expansion.hpp"

using namespace hypred;

namespace {
EpsLin P(long c, long e = 0, long d = 1) { return EpsLin(make_rat(c, d), make_rat(e)); }
SymEpsLin S(long c, const char* sym) { return SymEpsLin(Rat(c), MPoly::symbol(sym)); }
}  // namespace

TEST_CASE("elementary symmetric polynomials") {
  std::vector<Rat> r{Rat(1), Rat(2), Rat(3)};
  CHECK(elementary_symmetric(r, 0) == 1);
  CHECK(elementary_symmetric(r, 1) == 6);
  CHECK(elementary_symmetric(r, 2) == 11);
  CHECK(elementary_symmetric(r, 3) == 6);
}

TEST_CASE("polylogarithm series") {
  auto g1 = gpl_series(PolyLogExpr::word({Rat(1)}), 8);
  for (int j = 1; j <= 8; ++j) CHECK(g1[j] == Rat(-1, j));
  auto g01 = gpl_series(PolyLogExpr::word({Rat(0), Rat(1)}), 8);
  for (int j = 1; j <= 8; ++j) CHECK(g01[j] == Rat(-1, j * j));
  auto empty = gpl_series(PolyLogExpr(), 5);
  for (const auto& c : empty) CHECK(c == 0);
  CHECK_THROWS_AS(PolyLogExpr::word({Rat(1), Rat(0)}), Error);
}

TEST_CASE("shuffle products agree with series products") {
  std::vector<GplWord> words{{Rat(1)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(1), Rat(0), Rat(-1)}, {Rat(0), Rat(0), Rat(1)}};
  const int N = 14;
  for (const auto& a : words)
    for (const auto& b : words) {
      if (a.size() + b.size() > 5) continue;
      PolyLogExpr x = PolyLogExpr::word(a, Rat(2)) + PolyLogExpr::constant(Rat(1));
      PolyLogExpr y = PolyLogExpr::word(b, Rat(-3, 2));
      auto sx = gpl_series(x, N), sy = gpl_series(y, N), sp = gpl_series(x * y, N);
      for (int m = 0; m <= N; ++m) {
        Rat acc(0);
        for (int i = 0; i <= m; ++i) acc += sx[i] * sy[m - i];
        CHECK(sp[m] == acc);
      }
    }
}

TEST_CASE("shuffle products of emitted coefficients agree with series products") {
  std::vector<PolyLogExpr> emitted;
  for (const HyperFn& f : {HyperFn({EpsLin(1), EpsLin(0, 1)}, {EpsLin(1, 1)}),
                           HyperFn({EpsLin(0, 2), EpsLin(0, -3)}, {EpsLin(1, 5)}),
                           HyperFn({EpsLin(0, 1), EpsLin(0, 1), EpsLin(0, 2)}, {EpsLin(1, -1), EpsLin(1, 3)}, Rat(-2))}) {
    Expansion e = epsilon_expand(f, 3);
    for (const auto& c : e.coeffs)
      if (!c.zero() && c.weight() <= 3) emitted.push_back(c);
  }
  REQUIRE(emitted.size() >= 8);
  const int N = 12;
  for (std::size_t i = 0; i < emitted.size(); ++i)
    for (std::size_t j = i; j < emitted.size(); ++j) {
      if (emitted[i].var() != emitted[j].var()) continue;
      auto sx = gpl_series(emitted[i], N), sy = gpl_series(emitted[j], N), sp = gpl_series(emitted[i] * emitted[j], N);
      for (int m = 0; m <= N; ++m) {
        Rat acc(0);
        for (int k = 0; k <= m; ++k) acc += sx[k] * sy[m - k];
        CHECK(sp[m] == acc);
      }
    }
}

TEST_CASE("2F1(a eps, b eps; 1 + c eps) expansion") {
  SymHyperFn f({S(0, "a"), S(0, "b")}, {S(1, "c")});
  SymExpansion e = epsilon_expand(f, 4);
  CHECK(e.coeffs[0] == SymPolyLogExpr::constant(MPoly(1)));
  CHECK(e.coeffs[1].zero());
  // ab Li2(z) = -ab G(0,1; z)
  MPoly ab = MPoly::symbol("a") * MPoly::symbol("b");
  CHECK(e.coeffs[2] == SymPolyLogExpr::word({Rat(0), Rat(1)}, -ab));
  for (int k = 0; k <= 4; ++k) {
    CHECK(e.coeffs[k].weight() <= k);
    if (k >= 2) CHECK(e.coeffs[k].min_weight() == k);
    CHECK(is_zero(e.coeffs[k].constant_term()) == (k > 0));
  }
  CHECK(verify_expansion(f, e, 30).pass);
}

TEST_CASE("2F1(1, eps; 1 + eps) expansion") {
  HyperFn f({P(1), P(0, 1)}, {P(1, 1)});
  Expansion e = epsilon_expand(f, 4);
  CHECK(e.coeffs[1] == PolyLogExpr::word({Rat(1)}, Rat(-1)));
  CHECK(e.coeffs[2] == PolyLogExpr::word({Rat(0), Rat(1)}, Rat(1)));
  CHECK(e.coeffs[3] == PolyLogExpr::word({Rat(0), Rat(0), Rat(1)}, Rat(-1)));
  CHECK(verify_expansion(f, e, 30).pass);
  // eps^k coefficient of z^j is (-1)^(k+1) / j^k.
  auto s = gpl_series(e.coeffs[4], 6);
  for (int j = 1; j <= 6; ++j) CHECK(s[j] == Rat(-1, j * j * j * j));
}

TEST_CASE("wrapped and rescaled integer cases") {
  for (auto f : {HyperFn({P(0, 1), P(0, 2), P(0, -1)}, {P(1, 3), P(1, 5)}),
                 HyperFn({P(1, 1), P(0, 2)}, {P(1, 2)}),
                 HyperFn({P(0, 1), P(0, 1)}, {P(1, 1)}, make_rat(-1)),
                 HyperFn({P(1), P(0, 1), P(0, 2)}, {P(1, 1), P(1, 2)}, make_rat(1, 2))}) {
    CAPTURE(to_string(f));
    Expansion e = epsilon_expand(f, 3);
    CHECK(verify_expansion(f, e, 20).pass);
  }
}

TEST_CASE("half-integer Gauss case in xi") {
  HyperFn f({P(1, 1, 2), P(1, -2, 2)}, {P(3, 0, 2)});
  Expansion e = epsilon_expand(f, 3);
  CHECK(e.var == "xi");
  // P_0 = artanh(xi) = (G(-1; xi) - G(1; xi)) / 2
  CHECK(e.coeffs[0] == PolyLogExpr::word({Rat(-1)}, Rat(1, 2)) + PolyLogExpr::word({Rat(1)}, Rat(-1, 2)));
  for (int k = 0; k <= 3; ++k) CHECK(e.coeffs[k].weight() == k + 1);
  CHECK(verify_expansion(f, e, 30).pass);
  CHECK_THROWS_AS(epsilon_expand(HyperFn({P(1, 1, 2), P(1, -2, 2)}, {P(3, 1, 2)}), 2), Error);
}

TEST_CASE("unsupported classes and negative controls") {
  CHECK_THROWS_AS(epsilon_expand(HyperFn({P(1, 1, 3), P(0, 1)}, {P(1, 1)}), 2), Error);
  CHECK_THROWS_AS(epsilon_expand(HyperFn({P(2), P(0, 1)}, {P(1, 1)}), 2), Error);
  HyperFn f({P(1), P(0, 1)}, {P(1, 1)});
  Expansion e = epsilon_expand(f, 3);
  e.coeffs[2].add({Rat(0), Rat(0), Rat(1)}, Rat(1, 5));
  auto v = verify_expansion(f, e, 30);
  CHECK_FALSE(v.pass);
  REQUIRE(v.mismatch);
  CHECK(v.mismatch->z_order == 1);
  CHECK(v.mismatch->eps_order == 2);
}
