#include "hypred/gpl.hpp"

namespace hypred {

namespace {

std::string coeff_text(const Rat& c) { return to_string(c); }
std::string coeff_text(const MPoly& c) {
  if (c.is_constant()) return to_string(c.constant());
  return "(" + c.to_string() + ")";
}
bool negative(const Rat& c) { return c < 0; }
bool negative(const MPoly& c) { return c.is_constant() && c.constant() < 0; }

template <class C>
std::string render(const PolyLogExprT<C>& e) {
  std::string s;
  auto emit = [&](const C& c, const std::string& body) {
    const bool neg = negative(c);
    const C a = neg ? C(-c) : c;
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    if (body.empty())
      s += coeff_text(a);
    else if (a == C(1))
      s += body;
    else
      s += coeff_text(a) + "*" + body;
  };
  if (!is_zero(e.constant_term())) emit(e.constant_term(), "");
  for (const auto& [w, c] : e.terms()) {
    std::string body = "G(";
    for (std::size_t i = 0; i < w.size(); ++i) body += (i ? "," : "") + to_string(w[i]);
    emit(c, body + "; " + e.var() + ")");
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string to_string(const PolyLogExpr& e) { return render(e); }
std::string to_string(const SymPolyLogExpr& e) { return render(e); }

}  // namespace hypred
