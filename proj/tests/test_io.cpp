#include <random>

#include "doctest.h"

#include "hypred/parse.hpp"
#include "hypred/serialize.hpp"

using namespace hypred;

namespace {

Rat random_rat(std::mt19937& g, int span = 7, int max_den = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  return make_rat(num(g), den(g));
}

HyperFn random_hyper(std::mt19937& g) {
  std::uniform_int_distribution<int> p(0, 3);
  HyperFn f;
  const int n = p(g);
  for (int i = 0; i <= n; ++i) f.upper.push_back({random_rat(g), random_rat(g)});
  for (int i = 0; i < n; ++i) f.lower.push_back({random_rat(g), random_rat(g)});
  f.kappa = random_rat(g);
  if (f.kappa == 0) f.kappa = 1;
  f.var = (g() % 2) ? "z" : "x";
  return f;
}

LinearForm random_form(std::mt19937& g) {
  static const char* names[] = {"n", "j1", "j2", "sigma", "rho"};
  LinearForm f(random_rat(g));
  for (const char* s : names)
    if (g() % 3 == 0) f = f + LinearForm::symbol(s, random_rat(g));
  return f;
}

}  // namespace

TEST_CASE("parses a pFq expression") {
  SymHyperFn f = parse_hyper("2F1[1/2+eps, -eps; 1+2*eps; z]");
  HyperFn want({EpsLin(make_rat(1, 2), 1), EpsLin(0, -1)}, {EpsLin(1, 2)});
  CHECK(to_numeric(f) == want);
  CHECK(f.var == "z");

  SymHyperFn s = parse_hyper("2F1[a*eps, b*eps; 1 + c*eps; -1/4*x]");
  CHECK(s.upper[0].eps_part == MPoly::symbol("a"));
  CHECK(s.lower[0].const_part == 1);
  CHECK(s.kappa == make_rat(-1, 4));
  CHECK(s.var == "x");
  CHECK_THROWS_AS(to_numeric(s), Error);

  SymHyperFn g = parse_hyper("1F0[ (1 + 3*eps)/2 ; ; 2*z ]  # comment");
  CHECK(g.upper[0].eps_part == make_rat(3, 2));
  CHECK(g.lower.empty());
}

TEST_CASE("arity and syntax errors carry positions and expected tokens") {
  try {
    parse_input("2F1[a; b; z]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
    CHECK(std::string(e.what()).find("arity") != std::string::npos);
  }
  try {
    parse_input("2F1[1, 2;\n   3; z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
    CHECK(e.expected() == std::vector<std::string>{"']'"});
    CHECK(e.found() == "end of input");
  }
  try {
    parse_input("3F2[1, 2, 3; 4 5; z]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 16);
    CHECK(e.expected() == std::vector<std::string>{"','", "';'"});
  }
  CHECK_THROWS_AS(parse_input("2F1[eps^2, 1; 1; z]"), ParseError);
  CHECK_THROWS_AS(parse_input("2F1[a, 1; 1; z]"), ParseError);
  CHECK_THROWS_AS(parse_input("2F1[1, 1; 1; eps]"), ParseError);
  CHECK_THROWS_AS(parse_input("2F1[1, 1/0; 1; z]"), ParseError);
  CHECK_THROWS_AS(parse_input("@c2"), ParseError);
  CHECK_THROWS_AS(parse_input("2F1[1, 1; 1; z] extra"), ParseError);
  CHECK_THROWS_AS(parse_input("2F1[1, $; 1; z]"), ParseError);
  CHECK_THROWS_AS(parse_input("MB[n; ; ; j1; z]"), ParseError);
}

TEST_CASE("presets and MB expressions") {
  ParsedInput v = parse_input("@v1200");
  REQUIRE_FALSE(v.is_hyper());
  CHECK(v.preset == std::string("v1200"));
  CHECK(same_mb(v.mb(), presets::v1200()));
  MBRepr m = parse_mb("MB[1/2*n - j1, j2; sigma; ; ; -1/4*z]");
  CHECK(m.a.size() == 2);
  CHECK(m.a[0] == LinearForm::symbol("n", make_rat(1, 2)) - LinearForm::symbol("j1"));
  CHECK(m.kappa == make_rat(-1, 4));
  for (const char* name : {"c1", "c3", "v1200"}) {
    MBRepr p = presets::by_name(name);
    CHECK(same_mb(parse_mb(to_string(p)), p));
  }
}

TEST_CASE("grammar round-trip on random inputs") {
  std::mt19937 g(20241);
  for (int i = 0; i < 300; ++i) {
    HyperFn f = random_hyper(g);
    SymHyperFn back = parse_hyper(to_string(f));
    CHECK(to_numeric(back) == f);
    CHECK(back.var == f.var);
  }
  const MPoly a = MPoly::symbol("a"), b = MPoly::symbol("b");
  for (int i = 0; i < 100; ++i) {
    SymHyperFn f = to_symbolic(random_hyper(g));
    f.upper[0].eps_part = a * random_rat(g) + b * b * random_rat(g) + MPoly(random_rat(g));
    CHECK(parse_hyper(to_string(f)) == f);
  }
  for (int i = 0; i < 200; ++i) {
    MBRepr m;
    m.kappa = random_rat(g);
    if (m.kappa == 0) m.kappa = -1;
    const int na = 1 + g() % 3, nc = g() % 3, nd = g() % 2;
    const int nb = na + nd - nc - 1;
    if (nb < 0) continue;
    for (int k = 0; k < na; ++k) m.a.push_back(random_form(g));
    for (int k = 0; k < nb; ++k) m.b.push_back(random_form(g));
    for (int k = 0; k < nc; ++k) m.c.push_back(random_form(g));
    for (int k = 0; k < nd; ++k) m.d.push_back(random_form(g));
    CHECK(same_mb(parse_mb(to_string(m)), m));
  }
}

TEST_CASE("JSON records round-trip exactly") {
  std::mt19937 g(7);
  for (int i = 0; i < 100; ++i) {
    HyperFn f = random_hyper(g);
    Json j = encode(f);
    CHECK(to_numeric(decode_hyper(Json::parse(j.dump()))) == f);
  }
  CHECK(encode(make_rat(-3, 6)) == "-1/2");
  CHECK(encode(Rat(4)) == "4/1");
  CHECK_THROWS_AS(decode_rat(Json("3")), Error);
  CHECK_THROWS_AS(decode_rat(Json(0.5)), Error);

  HyperFn t({EpsLin(make_rat(3, 2), 1), EpsLin(make_rat(1, 3), 2)}, {EpsLin(make_rat(7, 4), -1)});
  HyperFn b({EpsLin(make_rat(1, 2), 1), EpsLin(make_rat(1, 3), 2)}, {EpsLin(make_rat(3, 4), -1)});
  ReductionResult r = reduce_to_basis(t, b);
  const std::string line = encode(r).dump();
  CHECK(line == encode(reduce_to_basis(t, b)).dump());
  ReductionResult back = decode_reduction(Json::parse(line));
  CHECK(back.target == r.target);
  CHECK(back.s_poly == r.s_poly);
  CHECK(back.r_polys == r.r_polys);
  CHECK(verify_reduction(back, 10, 2).pass);

  PolyLogExpr e = PolyLogExpr::word({0, 1}, make_rat(-2, 3)) + PolyLogExpr::word({1}, Rat(5)) +
                  PolyLogExpr::constant(make_rat(1, 7));
  PolyLogExpr e2 = decode_polylog(Json::parse(encode(e).dump()));
  CHECK(e2.terms() == e.terms());
  CHECK(e2.constant_term() == e.constant_term());
  SymPolyLogExpr s = SymPolyLogExpr::word({1, 1}, MPoly::symbol("a") * MPoly::symbol("b"));
  CHECK(decode_sym_polylog(Json::parse(encode(s).dump())).terms() == s.terms());
}
