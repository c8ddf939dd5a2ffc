// hypred: command-line front end.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "hypred/parse.hpp"
#include "hypred/serialize.hpp"

using namespace hypred;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitExceptional = 4;
constexpr int kExitVerification = 5;
constexpr int kMaxZ = 200;
constexpr int kMaxEps = 8;
constexpr int kDefaultZ = 30;
constexpr int kVerifyEpsCap = 4;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
      return kExitParse;
    case ErrorKind::SingularStep:
    case ErrorKind::DegeneratePoles:
    case ErrorKind::CriterionViolation:
      return kExitExceptional;
    default:
      return kExitUnsupported;
  }
}

struct VerificationFailed {};

class Emitter {
 public:
  explicit Emitter(bool json) : json_(json) {}
  bool json() const { return json_; }

  void text(const std::string& s) {
    if (!json_) buf_ += s + "\n";
  }
  void record(const Json& j) {
    if (json_) buf_ += j.dump() + "\n";
  }
  const std::string& str() const { return buf_; }

 private:
  bool json_;
  std::string buf_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InputArg {
  std::string text;
  std::string file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("input", text, "expression in the input grammar");
    cmd->add_option("--file", file, "read the expression from a file");
  }
  std::string get() const {
    if (!file.empty()) return read_file(file);
    if (text.empty()) throw Error(ErrorKind::InvalidArgument, "no input expression given");
    return text;
  }
};

Json verification_json(const VerifyOutcome& v, int n, int k) {
  Json j = encode(v);
  j["N"] = n;
  j["K"] = k;
  return j;
}

std::string verification_text(const VerifyOutcome& v, int n, int k) {
  std::string s = "verification: " + std::string(v.pass ? "pass" : "FAIL") + " (N=" + std::to_string(n) +
                  ", K=" + std::to_string(k) + ")";
  if (v.mismatch)
    s += ", first mismatch at z^" + std::to_string(v.mismatch->z_order) + " eps^" +
         std::to_string(v.mismatch->eps_order);
  return s;
}

// Fractional parts: uppers in [0, 1), lowers in (0, 1]; an eps-free integer
// upper becomes 1.
HyperFn default_basis(const HyperFn& t) {
  HyperFn b = t;
  auto frac = [](const Rat& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rat(x - fl);
  };
  for (auto& a : b.upper) {
    a.const_part = frac(a.const_part);
    if (is_zero(a.eps_part) && is_zero(a.const_part)) a.const_part = 1;
  }
  for (auto& l : b.lower) {
    l.const_part = frac(l.const_part);
    if (is_zero(l.const_part)) l.const_part = 1;
  }
  return b;
}

void run_reduce(Emitter& out, const std::string& input, const std::string& basis_text, int n, int k, bool verify) {
  const HyperFn target = to_numeric(parse_hyper(input));
  const HyperFn basis = basis_text.empty() ? default_basis(target) : to_numeric(parse_hyper(basis_text));
  ReductionResult r = reduce_to_basis(target, basis);
  Json rec = encode(r);
  out.text("target: " + to_string(r.target));
  out.text("basis:  " + to_string(r.basis));
  out.text("S*F_target = sum_j R_j theta^j F_basis" + std::string(r.unit_upper >= 0 ? " + tail" : ""));
  out.text("S = " + to_string(r.s_poly));
  for (std::size_t j = 0; j < r.r_polys.size(); ++j) out.text("R" + std::to_string(j) + " = " + to_string(r.r_polys[j]));
  if (r.unit_upper >= 0) out.text("tail = " + to_string(r.algebraic_tail));
  bool ok = true;
  if (verify) {
    const int kv = std::min(k, kVerifyEpsCap);
    VerifyOutcome v = verify_reduction(r, n, kv);
    rec["verification"] = verification_json(v, n, kv);
    out.text(verification_text(v, n, kv));
    ok = v.pass;
  }
  out.record(rec);
  if (!ok) throw VerificationFailed{};
}

template <class F>
void report_basis(Emitter& out, const F& f) {
  const ExceptionalReport rep = detect_exceptional(f);
  const int l = count_nontrivial_basis(f);
  out.text("function: " + to_string(f));
  out.text("L = " + std::to_string(l));
  out.text(std::string("exceptional: ") + (rep.exceptional() ? "yes" : "no"));
  out.record({{"record", "basis_count"}, {"function", encode(f)}, {"L", l}, {"report", encode(rep)}});
}

void run_count_basis(Emitter& out, const std::string& input) {
  const SymHyperFn f = parse_hyper(input);
  bool numeric = true;
  for (const auto& x : f.upper) numeric = numeric && x.eps_part.is_constant();
  for (const auto& x : f.lower) numeric = numeric && x.eps_part.is_constant();
  if (numeric)
    report_basis(out, to_numeric(f));
  else
    report_basis(out, f);
}

void emit_sum(Emitter& out, const MBRepr& m, const HyperSum& h) {
  out.text("MB: " + to_string(m));
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    const auto& t = h.terms[i];
    out.text("term " + std::to_string(i + 1) + ": " + t.coefficient.to_string() + " * z^(" + t.power.to_string() +
             ") * " + t.fn.to_string());
  }
  out.record({{"record", "mb"}, {"mb", encode(m)}, {"terms", encode(h)}, {"q", h.terms.size()}});
}

MBRepr substitute(const MBRepr& m, const std::string& name, const LinearForm& value) {
  MBRepr r = m;
  for (auto* l : {&r.a, &r.b, &r.c, &r.d})
    for (auto& f : *l) f = f.substitute(name, value);
  return r;
}

void run_count_masters(Emitter& out, const std::string& input, const std::vector<std::string>& binds,
                       const std::map<std::string, std::string>& named) {
  MBRepr m = parse_mb(input);
  Bindings b;
  auto bind_one = [&](const std::string& name, const std::string& value) {
    if (name.empty()) throw Error(ErrorKind::InvalidArgument, "binding without a name");
    if (value.find(',') == std::string::npos) {
      b[name] = parse_rat(value);
      return;
    }
    // Dressed propagator: name is replaced by sum(sigma_i) - (n/2) q.
    std::vector<LinearForm> sigmas;
    std::stringstream ss(value);
    for (std::string item; std::getline(ss, item, ',');) sigmas.push_back(LinearForm(parse_rat(item)));
    m = substitute(m, name, dressed_propagator_shift(sigmas));
  };
  for (const auto& s : binds) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "binding '" + s + "' is not name=value");
    bind_one(s.substr(0, eq), s.substr(eq + 1));
  }
  for (const auto& [name, value] : named)
    if (!value.empty()) bind_one(name, value);
  const HyperSum h = mb_to_hyper(m);
  const MasterCount c = count_master_integrals(h, b);
  Json terms = Json::array();
  for (std::size_t i = 0; i < c.bound_terms.size(); ++i) {
    out.text("term " + std::to_string(i + 1) + ": " + to_string(c.bound_terms[i]) + "  L = " +
             std::to_string(c.per_term[i]));
    terms.push_back({{"function", encode(c.bound_terms[i])}, {"L", c.per_term[i]}, {"report", encode(c.reports[i])}});
  }
  out.text("L=" + std::to_string(c.count));
  Json bj = Json::object();
  for (const auto& [k, v] : b) bj[k] = encode(v);
  out.record({{"record", "master_count"}, {"mb", encode(m)}, {"bindings", bj}, {"L", c.count}, {"terms", terms}});
}

template <class F, class E>
void emit_expansion(Emitter& out, const F& f, const E& e, int n, int k, bool verify) {
  Json rec = encode(f, e);
  out.text("function: " + to_string(f));
  if (e.half_integer) out.text("expanded: " + e.normalization);
  for (std::size_t j = 0; j < e.coeffs.size(); ++j)
    out.text("eps^" + std::to_string(j) + ": " + to_string(e.coeffs[j]));
  bool ok = true;
  if (verify) {
    const int kv = std::min(k, kVerifyEpsCap);
    E head = e;
    head.coeffs.resize(kv + 1);
    VerifyOutcome v = verify_expansion(f, head, n);
    rec["verification"] = verification_json(v, n, kv);
    out.text(verification_text(v, n, kv));
    ok = v.pass;
  }
  out.record(rec);
  if (!ok) throw VerificationFailed{};
}

void run_expand(Emitter& out, const std::string& input, int n, int k, bool verify) {
  const SymHyperFn f = parse_hyper(input);
  bool numeric = true;
  for (const auto* l : {&f.upper, &f.lower})
    for (const auto& x : *l) numeric = numeric && x.eps_part.is_constant();
  if (numeric) {
    const HyperFn g = to_numeric(f);
    emit_expansion(out, g, epsilon_expand(g, k), n, k, verify);
  } else {
    emit_expansion(out, f, epsilon_expand(f, k), n, k, verify);
  }
}

std::vector<int> int_list(const std::string& s, std::size_t count, const char* what) {
  std::vector<int> v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(static_cast<int>(to_long(parse_rat(item))));
  if (v.size() != count)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs " + std::to_string(count) + " integers");
  return v;
}

std::vector<Rat> rat_list(const std::string& s, std::size_t count, const char* what) {
  std::vector<Rat> v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_rat(item));
  if (v.size() != count)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs " + std::to_string(count) + " rationals");
  return v;
}

struct ParamArgs {
  std::string gauss, three_f2, f3, eps;
  std::string beta;
};

void run_check_parametrization(Emitter& out, const std::string& input, const ParamArgs& a) {
  if (!a.gauss.empty()) {
    auto v = int_list(a.gauss, 4, "--gauss p1,p2,r,q");
    const bool lemma = gauss_lemma_iv(v[0], v[1], v[2], v[3]);
    out.text(std::string("Gauss lemma IV: ") + (lemma ? "accepted" : "rejected"));
    Json rec = {{"record", "gauss"}, {"p1", v[0]}, {"p2", v[1]}, {"r", v[2]}, {"q", v[3]}, {"lemma_iv", lemma}};
    if (!a.beta.empty()) {
      auto e = a.eps.empty() ? std::vector<Rat>{1, 1, 1} : rat_list(a.eps, 3, "--eps a1,a2,c");
      TriangularSystem s = gauss_triangular_system(v[0], v[1], v[2], v[3], e[0], e[1], e[2], parse_rat(a.beta));
      out.text("triangular system for beta = " + a.beta + ": yes");
      rec["system"] = encode(s);
    }
    out.record(rec);
    return;
  }
  if (!a.three_f2.empty()) {
    auto v = int_list(a.three_f2, 3, "--three-f2 r,p,q");
    auto e = a.eps.empty() ? std::vector<Rat>{1, 1, 1, 1, 1} : rat_list(a.eps, 5, "--eps a1,a2,a3,b1,b2");
    ThreeF2Report r = three_f2_system(v[0], v[1], v[2], e[0], e[1], e[2], e[3], e[4]);
    out.text(std::string("rational parametrization: ") + (r.rational_parametrization ? "yes" : "no"));
    out.text("h(z) = z^(" + to_string(r.z_exponent) + ") (z-1)^(" + to_string(r.zm1_exponent) + ")");
    out.text(std::string("triangular at eps^0: ") + (r.system.triangular ? "yes" : "no"));
    Json rec = encode(r);
    rec["record"] = "three_f2";
    out.record(rec);
    return;
  }
  if (!a.f3.empty()) {
    auto v = int_list(a.f3, 6, "--f3 p1,p2,r1,r2,p,q");
    F3Report r = f3_parametrization_check(v[0], v[1], v[2], v[3], v[4], v[5]);
    out.text(std::string("F3 parametrization: ") + (r.pass ? "accepted" : "rejected") + " (form " + r.form + ")");
    if (r.nonpositive_lower) out.text("warning: lower parameter is a non-positive integer");
    Json rec = encode(r);
    rec["record"] = "f3";
    out.record(rec);
    return;
  }
  const HyperFn f = to_numeric(parse_hyper(input));
  FactorizationReport r = factorization_conditions(f.upper, f.lower);
  out.text("function: " + to_string(f));
  out.text("beta = " + to_string(r.beta) + ", R1 = " + to_string(r.r1) + ", R2 = " + to_string(r.r2));
  out.text("case: " + r.tag);
  out.text("h(z) = z^(" + to_string(r.z_exponent) + ") (z-1)^(" + to_string(r.zm1_exponent) + ")");
  if (!r.parametrization.empty()) out.text("parametrization: " + r.parametrization);
  if (r.gauss_lemma_iv) out.text(std::string("Gauss lemma IV: ") + (*r.gauss_lemma_iv ? "accepted" : "rejected"));
  Json rec = encode(r);
  rec["record"] = "factorization";
  rec["function"] = encode(f);
  out.record(rec);
}

// Re-checks every record of a saved JSONL file.
void run_verify_file(Emitter& out, const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  bool all = true;
  int line_no = 0, checked = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(line_no, static_cast<int>(e.byte), {"JSON record"}, "malformed JSON");
    }
    const std::string kind = j.value("record", "");
    VerifyOutcome v;
    int k_used = kVerifyEpsCap;
    if (kind == "reduction") {
      const ReductionResult r = decode_reduction(j);
      v = verify_reduction(r, n, kVerifyEpsCap);
    } else if (kind == "expansion") {
      const SymHyperFn f = decode_hyper(j.at("function"));
      const int order = std::min<int>(j.at("coefficients").size() - 1, kMaxEps);
      k_used = order;
      bool numeric = true;
      for (const auto* l : {&f.upper, &f.lower})
        for (const auto& x : *l) numeric = numeric && x.eps_part.is_constant();
      if (numeric) {
        Expansion e;
        for (int k = 0; k <= order; ++k) e.coeffs.push_back(decode_polylog(j.at("coefficients")[k]));
        e.var = j.at("var").get<std::string>();
        e.half_integer = j.at("half_integer").get<bool>();
        v = verify_expansion(to_numeric(f), e, n);
      } else {
        SymExpansion e;
        for (int k = 0; k <= order; ++k) e.coeffs.push_back(decode_sym_polylog(j.at("coefficients")[k]));
        e.var = j.at("var").get<std::string>();
        e.half_integer = j.at("half_integer").get<bool>();
        v = verify_expansion(f, e, n);
      }
    } else {
      continue;
    }
    ++checked;
    all = all && v.pass;
    out.text("line " + std::to_string(line_no) + " (" + kind + "): " + verification_text(v, n, k_used));
    out.record({{"record", "verify"}, {"line", line_no}, {"kind", kind}, {"verification", encode(v)}});
  }
  if (checked == 0) throw Error(ErrorKind::InvalidArgument, "no verifiable records in '" + path + "'");
  if (!all) throw VerificationFailed{};
}

struct SuiteCheck {
  std::string name;
  std::function<bool()> run;
};

std::vector<SuiteCheck> suite(int n) {
  std::vector<SuiteCheck> s;
  const auto P = [](long a, long b, long e = 0) { return EpsLin(make_rat(a, b), Rat(e)); };
  s.push_back({"ode 3F2", [=] {
                 HyperFn f({P(1, 3, 1), P(1, 2, -2), P(2, 1, 1)}, {P(5, 4, 1), P(1, 7, 3)});
                 auto w = series_of_hyper(f, n, 3);
                 return ode_operator(f).apply(w).zero();
               }});
  s.push_back({"reduction 2F1", [=] {
                 HyperFn b({P(1, 2, 1), P(1, 3, 2)}, {P(3, 4, -1)});
                 HyperFn t({P(5, 2, 1), P(-2, 3, 2)}, {P(7, 4, -1)});
                 return verify_reduction(reduce_to_basis(t, b), n, 3).pass;
               }});
  s.push_back({"reduction 3F2 unit upper", [=] {
                 HyperFn b({P(1, 1), P(1, 2, 1), P(1, 3, 1)}, {P(3, 2, 2), P(5, 3, 1)});
                 HyperFn t({P(1, 1), P(3, 2, 1), P(-2, 3, 1)}, {P(5, 2, 2), P(2, 3, 1)});
                 return verify_reduction(reduce_to_basis(t, b), n, 3).pass;
               }});
  s.push_back({"expansion 2F1(a eps, b eps; 1 + c eps)", [=] {
                 HyperFn f({P(0, 1, 2), P(0, 1, -3)}, {P(1, 1, 5)});
                 return verify_expansion(f, epsilon_expand(f, 4), n).pass;
               }});
  s.push_back({"expansion 2F1(1, eps; 1 + eps)", [=] {
                 HyperFn f({P(1, 1), P(0, 1, 1)}, {P(1, 1, 1)});
                 return verify_expansion(f, epsilon_expand(f, 4), n).pass;
               }});
  s.push_back({"expansion half-integer", [=] {
                 HyperFn f({P(1, 2, 1), P(1, 2, -1)}, {P(3, 2)});
                 return verify_expansion(f, epsilon_expand(f, 3), n).pass;
               }});
  s.push_back({"masters c3", [] {
                 Bindings b{{"j1", 1}, {"j2", 1}, {"sigma", 1}};
                 return count_master_integrals(mb_to_hyper(presets::c3()), b).count == 2;
               }});
  s.push_back({"masters c1", [] {
                 MBRepr m = substitute(presets::c1(), "sigma2", dressed_propagator_shift({LinearForm(1), LinearForm(1)}));
                 return count_master_integrals(mb_to_hyper(m), {{"sigma1", 1}, {"rho", 1}}).count == 1;
               }});
  s.push_back({"masters v1200", [] {
                 Bindings b{{"rho", 1}, {"sigma", 1}, {"alpha", 1}, {"beta", 1}};
                 return count_master_integrals(mb_to_hyper(presets::v1200()), b).count == 2;
               }});
  return s;
}

void run_verify_suite(Emitter& out, int n, int jobs) {
  const auto checks = suite(n);
  std::vector<int> result(checks.size(), 0);
  std::vector<std::string> note(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) {
      try {
        result[i] = checks[i].run() ? 1 : 0;
      } catch (const std::exception& e) {
        note[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  bool all = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    all = all && result[i];
    out.text((result[i] ? "PASS " : "FAIL ") + checks[i].name + (note[i].empty() ? "" : " (" + note[i] + ")"));
    out.record({{"record", "suite"}, {"check", checks[i].name}, {"pass", result[i] == 1}, {"note", note[i]}});
  }
  if (!all) throw VerificationFailed{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential reduction, Mellin-Barnes conversion and eps-expansion of hypergeometric functions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  if (const char* env = std::getenv("HYPRED_FORMAT")) format = env;
  if (format.empty()) format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format (env HYPRED_FORMAT)")->check(CLI::IsMember({"text", "jsonl"}));
  app.add_option("--out", out_path, "also write the output to this file");

  int n = kDefaultZ;
  int k = 4;
  bool no_verify = false;
  auto orders = [&](CLI::App* c, bool with_k) {
    c->add_option("-N,--z-order", n, "series order in z for verification")->check(CLI::Range(1, kMaxZ));
    if (with_k) c->add_option("-K,--order", k, "order in eps")->check(CLI::Range(0, kMaxEps));
  };

  InputArg input;
  std::string basis;
  auto* reduce = app.add_subcommand("reduce", "express a shifted function through a basis function");
  input.add_to(reduce);
  reduce->add_option("--basis", basis, "basis function (default: fractional parts of the target)");
  orders(reduce, true);
  reduce->add_flag("--no-verify", no_verify, "skip the series check");

  auto* count_basis = app.add_subcommand("count-basis", "number of non-trivial basis functions");
  input.add_to(count_basis);

  auto* mb = app.add_subcommand("mb", "hypergeometric form of a Mellin-Barnes integral");
  input.add_to(mb);

  std::vector<std::string> binds;
  std::map<std::string, std::string> named;
  auto* masters = app.add_subcommand("count-masters", "master integral count of a Mellin-Barnes integral");
  input.add_to(masters);
  masters->add_option("--bind", binds, "name=value, or name=v1,v2,... for a dressed propagator");
  for (const char* s : {"n", "j1", "j2", "sigma", "sigma1", "sigma2", "rho", "alpha", "beta"})
    masters->add_option(std::string("--") + s, named[s], std::string("value of ") + s);

  auto* expand = app.add_subcommand("expand", "eps-expansion in polylogarithms");
  input.add_to(expand);
  orders(expand, true);
  expand->add_flag("--no-verify", no_verify, "skip the series check");

  ParamArgs pargs;
  auto* param = app.add_subcommand("check-parametrization", "factorization and rational parametrization checks");
  input.add_to(param);
  param->add_option("--gauss", pargs.gauss, "p1,p2,r,q");
  param->add_option("--beta", pargs.beta, "beta for the Gauss triangular system");
  param->add_option("--three-f2", pargs.three_f2, "r,p,q");
  param->add_option("--f3", pargs.f3, "p1,p2,r1,r2,p,q");
  param->add_option("--eps", pargs.eps, "eps coefficients of the parameters");

  std::string verify_file;
  bool run_suite = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* verify = app.add_subcommand("verify", "re-check saved results or run the built-in suite");
  verify->add_option("file", verify_file, "JSONL file written with --format jsonl");
  verify->add_flag("--suite", run_suite, "run the built-in checks");
  verify->add_option("-j,--jobs", jobs, "worker threads for --suite")->check(CLI::Range(1, 256));
  orders(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  Emitter out(format == "jsonl");
  int code = 0;
  try {
    if (*reduce)
      run_reduce(out, input.get(), basis, n, k, !no_verify);
    else if (*count_basis)
      run_count_basis(out, input.get());
    else if (*mb) {
      MBRepr m = parse_mb(input.get());
      emit_sum(out, m, mb_to_hyper(m));
    } else if (*masters)
      run_count_masters(out, input.get(), binds, named);
    else if (*expand)
      run_expand(out, input.get(), n, k, !no_verify);
    else if (*param)
      run_check_parametrization(out, pargs.gauss.empty() && pargs.three_f2.empty() && pargs.f3.empty() ? input.get() : "",
                                pargs);
    else if (*verify) {
      if (run_suite)
        run_verify_suite(out, n, jobs);
      else if (!verify_file.empty())
        run_verify_file(out, verify_file, n);
      else
        throw Error(ErrorKind::InvalidArgument, "verify needs a file or --suite");
    }
  } catch (const VerificationFailed&) {
    code = kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = exit_code(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed record: " << e.what() << "\n";
    code = kExitParse;
  }
  std::cout << out.str();
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return code ? code : kExitParse;
    }
    f << out.str();
  }
  return code;
}
