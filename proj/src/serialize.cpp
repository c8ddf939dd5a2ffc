#include "hypred/serialize.hpp"

#include "hypred/parse.hpp"

namespace hypred {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, "malformed record: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class F>
Json encode_poly(const Poly<F>& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(encode(c));
  return a;
}

std::string eps_poly_text(const Poly<Rat>& p) {
  if (p.zero()) return "0";
  std::string s;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    std::string mag = to_string(Rat(abs(c)));
    std::string mono = k == 0 ? mag : (abs(c) == 1 ? "" : mag + "*") + "eps" + (k > 1 ? "^" + std::to_string(k) : "");
    s += s.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    s += mono;
  }
  return s;
}

std::string qeps_text(const QEps& x) {
  if (x.is_polynomial()) return eps_poly_text(x.num());
  return "(" + eps_poly_text(x.num()) + ")/(" + eps_poly_text(x.den()) + ")";
}

std::string z_poly_text(const Poly<QEps>& p) {
  if (p.zero()) return "0";
  std::string s;
  for (int k = 0; k <= p.degree(); ++k) {
    const QEps& c = p.coeffs()[k];
    if (c.zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string ct = qeps_text(c);
    const bool simple = c.is_constant();
    if (k == 0)
      s += simple ? ct : "(" + ct + ")";
    else
      s += (simple && c.constant() == 1 ? "" : (simple ? ct : "(" + ct + ")") + "*") + "z" +
           (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

template <class C>
Json encode_polylog(const PolyLogExprT<C>& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json letters = Json::array();
    for (const auto& l : w) letters.push_back(encode(l));
    terms.push_back({{"coefficient", encode(c)}, {"letters", letters}});
  }
  return {{"var", e.var()}, {"constant", encode(e.constant_term())}, {"terms", terms}, {"text", to_string(e)}};
}

template <class C, class Dec>
PolyLogExprT<C> decode_polylog_with(const Json& j, Dec dec) {
  PolyLogExprT<C> e(field(j, "var").get<std::string>());
  e.add({}, dec(field(j, "constant")));
  for (const auto& t : field(j, "terms")) {
    GplWord w;
    for (const auto& l : field(t, "letters")) w.push_back(decode_rat(l));
    e.add(w, dec(field(t, "coefficient")));
  }
  return e;
}

template <class C>
Json encode_hyper(const HyperFnT<C>& f) {
  Json up = Json::array(), low = Json::array();
  for (const auto& a : f.upper) up.push_back(encode(a));
  for (const auto& b : f.lower) low.push_back(encode(b));
  return {{"text", to_string(f)}, {"upper", up}, {"lower", low}, {"kappa", encode(f.kappa)}, {"var", f.var}};
}

template <class C>
Json encode_expansion(const Json& fn, const ExpansionT<C>& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs) coeffs.push_back(encode(c));
  return {{"record", "expansion"},
          {"function", fn},
          {"order", static_cast<int>(e.coeffs.size()) - 1},
          {"var", e.var},
          {"half_integer", e.half_integer},
          {"normalization", e.normalization},
          {"coefficients", coeffs}};
}

Json encode_rat_list(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

Json encode_pairs(const std::vector<ParamPair>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back({{"upper", p.upper}, {"lower", p.lower}});
  return a;
}

}  // namespace

Json encode(const Rat& x) { return encode_rat(x); }

Rat decode_rat(const Json& j) {
  if (!j.is_string()) bad("rational must be a \"num/den\" string");
  const std::string s = j.get<std::string>();
  if (s.find('/') == std::string::npos) bad("rational '" + s + "' lacks a denominator");
  try {
    return parse_rat(s);
  } catch (const Error&) {
    bad("rational '" + s + "'");
  }
}

Json encode(const MPoly& p) {
  Json a = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (const auto& [s, e] : m) mono[s] = e;
    a.push_back({{"coefficient", encode(c)}, {"monomial", mono}});
  }
  return a;
}

MPoly decode_mpoly(const Json& j) {
  if (j.is_string()) return MPoly(decode_rat(j));
  if (!j.is_array()) bad("polynomial must be an array of terms");
  MPoly p;
  for (const auto& t : j) {
    MPoly term(decode_rat(field(t, "coefficient")));
    for (const auto& [s, e] : field(t, "monomial").items()) {
      if (!e.is_number_integer() || e.get<int>() <= 0) bad("monomial exponent");
      for (int i = 0; i < e.get<int>(); ++i) term *= MPoly::symbol(s);
    }
    p += term;
  }
  return p;
}

Json encode(const QEps& x) { return {{"num", encode_poly(x.num())}, {"den", encode_poly(x.den())}}; }

QEps decode_qeps(const Json& j) {
  std::vector<Rat> num, den;
  for (const auto& c : field(j, "num")) num.push_back(decode_rat(c));
  for (const auto& c : field(j, "den")) den.push_back(decode_rat(c));
  Poly<Rat> d(den);
  if (d.zero()) bad("zero denominator");
  return QEps(Poly<Rat>(num), d);
}

Json encode(const RatFunc& r) {
  return {{"num", encode_poly(r.num())}, {"den", encode_poly(r.den())}, {"text", to_string(r)}};
}

RatFunc decode_ratfunc(const Json& j) {
  std::vector<QEps> num, den;
  for (const auto& c : field(j, "num")) num.push_back(decode_qeps(c));
  for (const auto& c : field(j, "den")) den.push_back(decode_qeps(c));
  Poly<QEps> d(den);
  if (d.zero()) bad("zero denominator");
  return RatFunc(Poly<QEps>(num), d);
}

std::string to_string(const RatFunc& r) {
  if (r.is_polynomial()) {
    const QEps& d = r.den().lead();
    if (d.is_constant() && d.constant() == 1) return z_poly_text(r.num());
  }
  return "(" + z_poly_text(r.num()) + ")/(" + z_poly_text(r.den()) + ")";
}

Json encode(const EpsLin& x) { return {{"const", encode(x.const_part)}, {"eps", encode(x.eps_part)}}; }
Json encode(const SymEpsLin& x) {
  if (x.eps_part.is_constant()) return encode(to_numeric(x));
  return {{"const", encode(x.const_part)}, {"eps", encode(x.eps_part)}};
}

Json encode(const HyperFn& f) { return encode_hyper(f); }
Json encode(const SymHyperFn& f) { return encode_hyper(f); }

SymHyperFn decode_hyper(const Json& j) {
  SymHyperFn f;
  for (const auto& a : field(j, "upper")) f.upper.push_back({decode_rat(field(a, "const")), decode_mpoly(field(a, "eps"))});
  for (const auto& b : field(j, "lower")) f.lower.push_back({decode_rat(field(b, "const")), decode_mpoly(field(b, "eps"))});
  if (f.upper.size() != f.lower.size() + 1) bad("parameter counts");
  f.kappa = decode_rat(field(j, "kappa"));
  f.var = field(j, "var").get<std::string>();
  return f;
}

Json encode(const LinearForm& f) {
  Json c = Json::object();
  for (const auto& [s, v] : f.coeffs()) c[s] = encode(v);
  return {{"text", f.to_string()}, {"constant", encode(f.constant())}, {"coefficients", c}};
}

Json encode(const MBRepr& m) {
  auto list = [](const std::vector<LinearForm>& l) {
    Json a = Json::array();
    for (const auto& f : l) a.push_back(encode(f));
    return a;
  };
  return {{"text", to_string(m)}, {"kappa", encode(m.kappa)}, {"var", m.var}, {"A", list(m.a)},
          {"B", list(m.b)},       {"C", list(m.c)},            {"D", list(m.d)}};
}

Json encode(const FormHyper& f) {
  Json up = Json::array(), low = Json::array();
  for (const auto& a : f.upper) up.push_back(encode(a));
  for (const auto& b : f.lower) low.push_back(encode(b));
  return {{"text", f.to_string()}, {"upper", up}, {"lower", low}, {"kappa", encode(f.kappa)}, {"var", f.var}};
}

Json encode(const HyperSum& h) {
  Json terms = Json::array();
  for (const auto& t : h.terms)
    terms.push_back({{"coefficient", t.coefficient.to_string()}, {"power", encode(t.power)}, {"function", encode(t.fn)}});
  return terms;
}

Json encode(const PolyLogExpr& e) { return encode_polylog(e); }
Json encode(const SymPolyLogExpr& e) { return encode_polylog(e); }
PolyLogExpr decode_polylog(const Json& j) { return decode_polylog_with<Rat>(j, decode_rat); }
SymPolyLogExpr decode_sym_polylog(const Json& j) { return decode_polylog_with<MPoly>(j, decode_mpoly); }

Json encode(const VerifyOutcome& v) {
  Json m = nullptr;
  if (v.mismatch) m = {{"z_order", v.mismatch->z_order}, {"eps_order", v.mismatch->eps_order}};
  return {{"pass", v.pass}, {"mismatch", m}};
}

Json encode(const ReductionResult& r) {
  Json rs = Json::array();
  for (const auto& x : r.r_polys) rs.push_back(encode(x));
  return {{"record", "reduction"},  {"target", encode(r.target)}, {"basis", encode(r.basis)},
          {"unit_upper", r.unit_upper}, {"s", encode(r.s_poly)},     {"r", rs},
          {"tail", encode(r.algebraic_tail)}};
}

ReductionResult decode_reduction(const Json& j) {
  ReductionResult r;
  r.target = to_numeric(decode_hyper(field(j, "target")));
  r.basis = to_numeric(decode_hyper(field(j, "basis")));
  r.unit_upper = field(j, "unit_upper").get<int>();
  r.s_poly = decode_ratfunc(field(j, "s"));
  for (const auto& x : field(j, "r")) r.r_polys.push_back(decode_ratfunc(x));
  r.algebraic_tail = decode_ratfunc(field(j, "tail"));
  if (static_cast<int>(r.r_polys.size()) != r.basis.p() + 1) bad("number of r coefficients");
  return r;
}

Json encode(const HyperFn& f, const Expansion& e) { return encode_expansion(encode(f), e); }
Json encode(const SymHyperFn& f, const SymExpansion& e) { return encode_expansion(encode(f), e); }

Json encode(const TriangularSystem& s) {
  Json rhs = Json::array();
  for (const auto& by_k : s.rhs) {
    Json row_k = Json::array();
    for (const auto& by_j : by_k) {
      Json row = Json::array();
      for (const auto& p : by_j) row.push_back(encode_poly(p));
      row_k.push_back(row);
    }
    rhs.push_back(row_k);
  }
  Json lhs = Json::array();
  for (const auto& p : s.lhs) lhs.push_back(encode_poly(p));
  Json consts = Json::object();
  for (const auto& [n, v] : s.constants) consts[n] = encode(v);
  return {{"layers", s.layers}, {"triangular", s.triangular}, {"constants", consts}, {"lhs", lhs}, {"rhs", rhs}};
}

Json encode(const FactorizationReport& r) {
  Json j = {{"tag", r.tag},
            {"beta", encode(r.beta)},
            {"beta_candidates", encode_rat_list(r.beta_candidates)},
            {"R1", encode(r.r1)},
            {"R2", encode(r.r2)},
            {"h_z_exponent", encode(r.z_exponent)},
            {"h_zm1_exponent", encode(r.zm1_exponent)},
            {"parametrization", r.parametrization}};
  j["gauss_lemma_iv"] = r.gauss_lemma_iv ? Json(*r.gauss_lemma_iv) : Json(nullptr);
  return j;
}

Json encode(const ThreeF2Report& r) {
  return {{"rational_parametrization", r.rational_parametrization},
          {"h_z_exponent", encode(r.z_exponent)},
          {"h_zm1_exponent", encode(r.zm1_exponent)},
          {"system", encode(r.system)}};
}

Json encode(const F3Report& r) {
  return {{"pass", r.pass},
          {"s1", r.s1},
          {"s2", r.s2},
          {"form", r.form},
          {"nonpositive_lower", r.nonpositive_lower},
          {"h1", {{"sign", encode(r.h1_sign)}, {"x", encode(r.h1_x)}, {"x-1", encode(r.h1_xm1)}}},
          {"h2", {{"sign", encode(r.h2_sign)}, {"y", encode(r.h2_y)}, {"y-1", encode(r.h2_ym1)}}},
          {"H", {{"sign", encode(r.H_sign)}, {"x", encode(r.H_x)}, {"y", encode(r.H_y)}, {"xy-x-y", encode(r.H_xy)}}}};
}

Json encode(const ExceptionalReport& r) {
  Json j = {{"integer_uppers", r.integer_uppers},
            {"integer_difference_pairs", encode_pairs(r.integer_difference_pairs)},
            {"equal_pairs", encode_pairs(r.equal_pairs)},
            {"matched_pairs", encode_pairs(r.matched_pairs)},
            {"unpaired_integer_uppers", r.unpaired_integer_uppers},
            {"overlap", r.overlap},
            {"exceptional", r.exceptional()}};
  return j;
}

}  // namespace hypred
