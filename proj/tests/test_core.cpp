#include "doctest.h"

#include "hypred/convert.hpp"
#include "hypred/hyper.hpp"
#include "hypred/reduction.hpp"
#include "hypred/theta_op.hpp"

using namespace hypred;

namespace {
EpsLin P(long c, long e = 0, long d = 1) { return EpsLin(make_rat(c, d), make_rat(e)); }
}  // namespace

TEST_CASE("theta composition commutes past coefficients") {
  // theta o z = z + z theta
  ThetaOp lhs = ThetaOp::theta() * ThetaOp(z_var());
  ThetaOp rhs(std::vector<RatFunc>{z_var(), z_var()});
  CHECK(lhs == rhs);
  // theta o 1/(1-z) = z/(1-z)^2 + theta/(1-z)
  RatFunc g = RatFunc(1) / (RatFunc(1) - z_var());
  ThetaOp c = ThetaOp::theta() * ThetaOp(g);
  CHECK(c.coeff(1) == g);
  CHECK(c.coeff(0) == z_var() * g * g);
}

TEST_CASE("pochhammer symbols in eps") {
  auto p = pochhammer_eps(EpsLin(make_rat(1, 2), Rat(1)), 2, 3);
  CHECK(p[0] == make_rat(3, 4));
  CHECK(p[1] == 2);
  CHECK(p[2] == 1);
  CHECK(p[3] == 0);
  auto q = pochhammer_eps(EpsLin(Rat(0), Rat(5)), 3, 2);
  CHECK(q[0] == 0);
  CHECK(q[1] == 10);
  CHECK(q[2] == 75);
  CHECK_THROWS_AS(inv_pochhammer_eps(EpsLin(Rat(-1)), 3, 2), Error);
}

TEST_CASE("series of simple hypergeometric functions") {
  // 2F1(1,1;2;z) = -log(1-z)/z
  HyperFn f({P(1), P(1)}, {P(2)});
  auto s = series_of_hyper(f, 10, 1);
  for (int j = 0; j <= 10; ++j) {
    CHECK(s.at(j, 0) == make_rat(1, j + 1));
    CHECK(s.at(j, 1) == 0);
  }
  // 2F1(a eps, b eps; 1 + c eps; z): eps^2 coefficient of z^2 is a b / 4
  HyperFn g({P(0, 2), P(0, 3)}, {P(1, 7)});
  auto t = series_of_hyper(g, 4, 3);
  CHECK(t.at(2, 2) == make_rat(6, 4));
  CHECK(t.at(1, 2) == 6);
  CHECK_THROWS_AS(series_of_hyper(HyperFn({P(1), P(1)}, {P(0)}), 3, 1), Error);
}

TEST_CASE("hypergeometric ODE annihilates the series") {
  HyperFn f({P(1, 1, 2), P(1, -1), P(0, 2)}, {P(3, 1, 2), P(1, 3)}, make_rat(-1, 4));
  auto s = series_of_hyper(f, 12, 3);
  auto r = ode_operator(f).apply(s);
  CHECK(r.z_order() >= 10);
  CHECK(r.zero());
  HyperFn wrong = f;
  wrong.kappa = Rat(1);
  CHECK_FALSE(ode_operator(wrong).apply(s).zero());
}

TEST_CASE("rational function series") {
  RatFunc r = RatFunc(1) / (RatFunc(1) - z_var());
  auto h = z_series(r, 6, 1);
  CHECK(h.pole_order == 0);
  for (int j = 0; j <= 6; ++j) CHECK(h.series.at(j, 0) == 1);
}
