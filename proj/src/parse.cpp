#include "hypred/parse.hpp"

#include <algorithm>
#include <cctype>

namespace hypred {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

std::string describe(int line, int column, const std::vector<std::string>& expected, const std::string& found,
                     const std::string& detail) {
  std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  if (!detail.empty()) s += detail + "; ";
  s += "expected " + (expected.size() > 1 ? "one of " : std::string()) + join(expected) + ", found " + found;
  return s;
}

struct Token {
  enum Kind { Int, Ident, Punct, End } kind;
  std::string text;
  int line;
  int col;
  std::size_t offset;

  std::string show() const { return kind == End ? "end of input" : "'" + text + "'"; }
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Int, text.substr(i, j - i), line, col, i});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), line, col, i});
      advance(j - i);
    } else if (std::string("[]();,+-*/^@").find(c) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, c), line, col, i});
      advance(1);
    } else {
      throw ParseError(line, col, {"number", "identifier", "operator"}, "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::End, "", line, col, text.size()});
  return out;
}

struct Located {
  MPoly value;
  Token at;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text), toks_(tokenize(text)) {}

  ParsedInput input() {
    ParsedInput r = top();
    expect_end();
    return r;
  }

 private:
  const std::string& text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  bool punct_at(std::size_t k, char c) const {
    return k < toks_.size() && toks_[k].kind == Token::Punct && toks_[k].text[0] == c;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_punct(char c) const { return peek().kind == Token::Punct && peek().text[0] == c; }

  [[noreturn]] void fail(const Token& t, std::vector<std::string> expected, const std::string& detail = "") const {
    throw ParseError(t.line, t.col, std::move(expected), t.show(), detail);
  }

  void expect(char c) {
    if (!at_punct(c)) fail(peek(), {"'" + std::string(1, c) + "'"});
    next();
  }

  void expect_end() {
    if (peek().kind != Token::End) fail(peek(), {"end of input"});
  }

  ParsedInput top() {
    const Token& t = peek();
    if (at_punct('@')) return preset();
    if (t.kind == Token::Ident && t.text == "MB") return {mb(), std::nullopt};
    if (t.kind == Token::Int) return {hyper(), std::nullopt};
    fail(t, {"pFq header", "'MB'", "'@'"});
  }

  ParsedInput preset() {
    next();
    const Token t = peek();
    if (t.kind != Token::Ident) fail(t, {"preset name"});
    next();
    static const std::vector<std::string> names{"c1", "c3", "v1200"};
    for (const auto& n : names)
      if (n == t.text) return {presets::by_name(n), n};
    fail(t, {"'c1'", "'c3'", "'v1200'"}, "unknown preset");
  }

  // pFq[...]
  SymHyperFn hyper() {
    const Token p_tok = next();
    const Token f_tok = peek();
    if (f_tok.kind != Token::Ident || f_tok.text.size() < 2 || f_tok.text[0] != 'F' ||
        !std::all_of(f_tok.text.begin() + 1, f_tok.text.end(), [](char c) { return std::isdigit(c); }))
      fail(f_tok, {"'F' followed by the lower count"});
    next();
    const long p = std::stol(p_tok.text);
    const long q = std::stol(f_tok.text.substr(1));
    const Token open = peek();
    expect('[');
    std::vector<Located> up = list(';');
    expect(';');
    std::vector<Located> low = list(';');
    expect(';');
    auto [kappa, var] = argument();
    expect(']');
    if (p != q + 1)
      throw ParseError(p_tok.line, p_tok.col, {"p = q + 1"}, "'" + p_tok.text + f_tok.text + "'",
                       "only p+1Fp functions are supported");
    if (static_cast<long>(up.size()) != p || static_cast<long>(low.size()) != q)
      throw ParseError(open.line, open.col, {std::to_string(p) + " upper and " + std::to_string(q) + " lower parameters"},
                       std::to_string(up.size()) + " upper and " + std::to_string(low.size()) + " lower",
                       "arity mismatch");
    SymHyperFn f;
    for (const auto& x : up) f.upper.push_back(parameter(x));
    for (const auto& x : low) f.lower.push_back(parameter(x));
    f.kappa = kappa;
    f.var = var;
    return f;
  }

  // MB[A; B; C; D; kappa*var]
  MBRepr mb() {
    const Token head = next();
    expect('[');
    std::vector<LinearForm> lists[4];
    for (auto& l : lists) {
      for (const auto& x : list(';')) l.push_back(linear_form(x));
      expect(';');
    }
    auto [kappa, var] = argument();
    expect(']');
    try {
      return make_mb(kappa, lists[0], lists[1], lists[2], lists[3], var);
    } catch (const Error& e) {
      throw ParseError(head.line, head.col, {"dim A + dim D - dim B - dim C = 1"}, "other dimensions", e.what());
    }
  }

  // Comma-separated expressions, possibly empty; stops before `stop`.
  std::vector<Located> list(char stop) {
    std::vector<Located> out;
    if (at_punct(stop)) return out;
    for (;;) {
      const Token at = peek();
      out.push_back({expr(), at});
      if (at_punct(',')) {
        next();
        continue;
      }
      if (!at_punct(stop)) fail(peek(), {"','", "'" + std::string(1, stop) + "'"});
      return out;
    }
  }

  // [-][R[/S]*]variable, the variable running verbatim up to the closing ']'.
  std::pair<Rat, std::string> argument() {
    Rat kappa(1);
    if (at_punct('-')) {
      next();
      kappa = -1;
    }
    std::size_t k = pos_;
    if (toks_[k].kind == Token::Int) {
      std::size_t e = k + 1;
      if (punct_at(e, '/') && e + 1 < toks_.size() && toks_[e + 1].kind == Token::Int) e += 2;
      if (punct_at(e, '*')) {
        Rat r = parse_rat(toks_[k].text);
        if (e == k + 3) {
          const Rat d = parse_rat(toks_[k + 2].text);
          if (d == 0) fail(toks_[k + 2], {"nonzero denominator"});
          r /= d;
        }
        if (r == 0) fail(toks_[k], {"nonzero kappa"});
        kappa *= r;
        pos_ = e + 1;
      }
    }
    const Token start = peek();
    int depth = 0;
    while (peek().kind != Token::End && !(depth == 0 && at_punct(']'))) {
      if (at_punct('(') || at_punct('[')) ++depth;
      if (at_punct(')') || at_punct(']')) --depth;
      if (depth < 0) fail(peek(), {"variable"}, "unbalanced parentheses");
      next();
    }
    std::string var;
    for (char c : text_.substr(start.offset, peek().offset - start.offset))
      if (!std::isspace(static_cast<unsigned char>(c))) var += c;
    if (var.empty() || depth != 0) fail(start, {"variable"});
    if (var == "eps") fail(start, {"variable other than eps"});
    return {kappa, var};
  }

  EpsLinT<MPoly> parameter(const Located& x) {
    Rat c(0);
    MPoly e;
    for (const auto& [m, coeff] : x.value.terms()) {
      int eps_power = 0;
      MPoly::Monomial rest;
      for (const auto& [s, k] : m) {
        if (s == "eps")
          eps_power = k;
        else
          rest.push_back({s, k});
      }
      if (eps_power > 1) fail(x.at, {"parameter linear in eps"}, "eps^" + std::to_string(eps_power) + " term");
      if (eps_power == 0) {
        if (!rest.empty()) fail(x.at, {"rational constant part"}, "symbol in the eps^0 part");
        c += coeff;
      } else {
        MPoly term(coeff);
        for (const auto& [s, k] : rest)
          for (int i = 0; i < k; ++i) term *= MPoly::symbol(s);
        e += term;
      }
    }
    return {c, e};
  }

  LinearForm linear_form(const Located& x) {
    LinearForm f;
    for (const auto& [m, coeff] : x.value.terms()) {
      if (m.empty())
        f = f + LinearForm(coeff);
      else if (m.size() == 1 && m[0].second == 1 && m[0].first != "eps")
        f = f + LinearForm::symbol(m[0].first, coeff);
      else
        fail(x.at, {"linear form"}, "non-linear term");
    }
    return f;
  }

  MPoly expr() {
    bool neg = false;
    if (at_punct('+') || at_punct('-')) neg = next().text == "-";
    MPoly acc = term();
    if (neg) acc = -acc;
    while (at_punct('+') || at_punct('-')) {
      const bool minus = next().text == "-";
      MPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = power();
    while (at_punct('*') || at_punct('/')) {
      const bool div = next().text == "/";
      const Token at = peek();
      MPoly f = power();
      if (div) {
        if (!f.is_constant() || f.zero()) fail(at, {"nonzero rational divisor"});
        acc = acc / f.constant();
      } else {
        acc = acc * f;
      }
    }
    return acc;
  }

  MPoly power() {
    MPoly base = primary();
    if (!at_punct('^')) return base;
    next();
    const Token e = peek();
    if (e.kind != Token::Int || e.text.size() > 3) fail(e, {"small non-negative integer exponent"});
    next();
    MPoly r(1);
    for (int i = 0; i < std::stoi(e.text); ++i) r = r * base;
    return r;
  }

  MPoly primary() {
    const Token t = peek();
    if (t.kind == Token::Int) {
      next();
      return MPoly(parse_rat(t.text));
    }
    if (t.kind == Token::Ident) {
      next();
      return MPoly::symbol(t.text);
    }
    if (at_punct('(')) {
      next();
      MPoly e = expr();
      expect(')');
      return e;
    }
    if (at_punct('-')) {
      next();
      return -primary();
    }
    fail(t, {"number", "identifier", "'('"});
  }
};

std::string render_list(const std::vector<LinearForm>& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? ", " : "") + l[i].to_string();
  return s;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, const std::string& found,
                       const std::string& detail)
    : Error(ErrorKind::ParseError, describe(line, column, expected, found, detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(found) {}

ParsedInput parse_input(const std::string& text) { return Parser(text).input(); }

SymHyperFn parse_hyper(const std::string& text) {
  ParsedInput p = parse_input(text);
  if (!p.is_hyper()) throw ParseError(1, 1, {"pFq expression"}, "Mellin-Barnes expression");
  return p.hyper();
}

MBRepr parse_mb(const std::string& text) {
  ParsedInput p = parse_input(text);
  if (p.is_hyper()) throw ParseError(1, 1, {"Mellin-Barnes expression"}, "pFq expression");
  return p.mb();
}

HyperFn to_numeric(const SymHyperFn& f) {
  HyperFn r;
  for (const auto& a : f.upper) r.upper.push_back(to_numeric(a));
  for (const auto& b : f.lower) r.lower.push_back(to_numeric(b));
  r.kappa = f.kappa;
  r.var = f.var;
  return r;
}

SymHyperFn to_symbolic(const HyperFn& f) {
  SymHyperFn r;
  for (const auto& a : f.upper) r.upper.push_back(to_symbolic(a));
  for (const auto& b : f.lower) r.lower.push_back(to_symbolic(b));
  r.kappa = f.kappa;
  r.var = f.var;
  return r;
}

std::string to_string(const MBRepr& m) {
  std::string s = "MB[" + render_list(m.a) + "; " + render_list(m.b) + "; " + render_list(m.c) + "; " +
                  render_list(m.d) + "; ";
  if (m.kappa != 1) s += to_string(m.kappa) + "*";
  return s + m.var + "]";
}

bool same_mb(const MBRepr& a, const MBRepr& b) {
  return a.kappa == b.kappa && a.var == b.var && a.a == b.a && a.b == b.b && a.c == b.c && a.d == b.d;
}

}  // namespace hypred
