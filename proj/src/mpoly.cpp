#include "hypred/mpoly.hpp"

#include <set>

namespace hypred {

MPoly::Monomial MPoly::mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

Rat MPoly::eval(const std::map<std::string, Rat>& values) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [sym, e] : m) {
      auto it = values.find(sym);
      if (it == values.end()) throw Error(ErrorKind::InvalidArgument, "unbound symbol '" + sym + "'");
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

std::vector<std::string> MPoly::symbols() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, e] : m) s.insert(sym);
  return {s.begin(), s.end()};
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    const bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (const auto& [sym, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += sym;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += hypred::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += hypred::to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace hypred
