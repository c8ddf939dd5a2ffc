#pragma once

// Goncharov polylogarithms G(a_1, ..., a_k; x) = int_0^x dt/(t - a_1) G(a_2, ..., a_k; t)
// with G(;x) = 1. Only words whose last letter is nonzero are representable,
// so every G vanishes at x = 0. With this convention G(1; x) = log(1 - x) and
// Li2(x) = -G(0, 1; x).

#include <map>
#include <string>
#include <vector>

#include "hypred/error.hpp"
#include "hypred/mpoly.hpp"
#include "hypred/rational.hpp"

namespace hypred {

using GplWord = std::vector<Rat>;

template <class C>
class PolyLogExprT {
 public:
  PolyLogExprT() = default;
  explicit PolyLogExprT(std::string var) : var_(std::move(var)) {}
  static PolyLogExprT constant(const C& c, std::string var = "z") {
    PolyLogExprT e(std::move(var));
    e.constant_ = c;
    return e;
  }
  static PolyLogExprT word(const GplWord& w, const C& c = C(1), std::string var = "z") {
    PolyLogExprT e(std::move(var));
    e.add(w, c);
    return e;
  }

  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }
  const C& constant_term() const { return constant_; }
  const std::map<GplWord, C>& terms() const { return terms_; }
  bool zero() const { return is_zero(constant_) && terms_.empty(); }
  C coeff(const GplWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Longest word length (0 for a constant).
  int weight() const {
    int w = 0;
    for (const auto& [word, c] : terms_) w = std::max(w, static_cast<int>(word.size()));
    return w;
  }
  int min_weight() const {
    int w = is_zero(constant_) ? -1 : 0;
    for (const auto& [word, c] : terms_)
      if (w < 0 || static_cast<int>(word.size()) < w) w = static_cast<int>(word.size());
    return w < 0 ? 0 : w;
  }

  void add(const GplWord& w, const C& c) {
    if (is_zero(c)) return;
    if (w.empty()) {
      constant_ = constant_ + c;
      return;
    }
    if (is_zero(w.back())) throw Error(ErrorKind::InvalidArgument, "polylogarithm word ends in 0");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  friend PolyLogExprT operator+(PolyLogExprT a, const PolyLogExprT& b) {
    a.constant_ = a.constant_ + b.constant_;
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
  }
  friend PolyLogExprT operator-(const PolyLogExprT& a) { return C(-1) * a; }
  friend PolyLogExprT operator-(const PolyLogExprT& a, const PolyLogExprT& b) { return a + (-b); }
  friend PolyLogExprT operator*(const C& s, const PolyLogExprT& a) {
    PolyLogExprT r(a.var_);
    if (is_zero(s)) return r;
    r.constant_ = s * a.constant_;
    for (const auto& [w, c] : a.terms_) r.add(w, s * c);
    return r;
  }
  /// Shuffle product.
  friend PolyLogExprT operator*(const PolyLogExprT& a, const PolyLogExprT& b) {
    PolyLogExprT r(a.var_);
    r.constant_ = a.constant_ * b.constant_;
    for (const auto& [w, c] : b.terms_) r.add(w, a.constant_ * c);
    for (const auto& [w, c] : a.terms_) r.add(w, b.constant_ * c);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_)
        for (const auto& w : shuffle(wa, wb)) r.add(w, ca * cb);
    return r;
  }
  friend bool operator==(const PolyLogExprT& a, const PolyLogExprT& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyLogExprT& a, const PolyLogExprT& b) { return !(a == b); }

  /// G(a, w; x) for every word w, i.e. int_0^x dt/(t - a) applied to a
  /// constant-free expression or one whose constant is absorbed as G(a; x).
  PolyLogExprT integrate(const Rat& a) const {
    if (is_zero(a) && !is_zero(constant_))
      throw Error(ErrorKind::UncancelledPole, "dt/t integration of an integrand that is nonzero at 0");
    PolyLogExprT r(var_);
    if (!is_zero(constant_)) r.add({a}, constant_);
    for (const auto& [w, c] : terms_) {
      GplWord v{a};
      v.insert(v.end(), w.begin(), w.end());
      r.add(v, c);
    }
    return r;
  }

  /// All interleavings of two words, with multiplicity.
  static std::vector<GplWord> shuffle(const GplWord& a, const GplWord& b) {
    if (a.empty()) return {b};
    if (b.empty()) return {a};
    std::vector<GplWord> out;
    for (auto w : shuffle(GplWord(a.begin() + 1, a.end()), b)) {
      w.insert(w.begin(), a.front());
      out.push_back(std::move(w));
    }
    for (auto w : shuffle(a, GplWord(b.begin() + 1, b.end()))) {
      w.insert(w.begin(), b.front());
      out.push_back(std::move(w));
    }
    return out;
  }

 private:
  std::string var_{"z"};
  C constant_{0};
  std::map<GplWord, C> terms_;
};

using PolyLogExpr = PolyLogExprT<Rat>;
using SymPolyLogExpr = PolyLogExprT<MPoly>;

/// Taylor coefficients x^0..x^N of a polylogarithm expression.
template <class C>
std::vector<C> gpl_series(const PolyLogExprT<C>& e, int order) {
  std::map<GplWord, std::vector<Rat>> memo;
  // Series of G(w; x) with rational coefficients, built from the innermost letter out.
  auto word_series = [&](const GplWord& w, auto&& self) -> const std::vector<Rat>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::vector<Rat> inner(order + 1, Rat(0));
    if (w.size() == 1)
      inner[0] = 1;
    else
      inner = self(GplWord(w.begin() + 1, w.end()), self);
    const Rat& a = w.front();
    std::vector<Rat> out(order + 1, Rat(0));
    if (is_zero(a)) {
      for (int m = 1; m <= order; ++m) out[m] = inner[m] / m;
    } else {
      // inner(t) / (t - a) = -sum_i t^i / a^(i+1) * inner(t); then integrate.
      const Rat inv = Rat(1) / a;
      std::vector<Rat> h(order + 1, Rat(0));
      for (int m = 0; m < order; ++m) {
        Rat acc(0), pw = inv;
        for (int i = 0; i <= m; ++i) {
          acc += inner[m - i] * pw;
          pw *= inv;
        }
        h[m] = -acc;
      }
      for (int m = 0; m < order; ++m) out[m + 1] = h[m] / (m + 1);
    }
    return memo.emplace(w, std::move(out)).first->second;
  };
  std::vector<C> out(order + 1, C(0));
  out[0] = e.constant_term();
  for (const auto& [w, c] : e.terms()) {
    const auto& s = word_series(w, word_series);
    for (int m = 0; m <= order; ++m)
      if (!is_zero(s[m])) out[m] = out[m] + c * s[m];
  }
  return out;
}

std::string to_string(const PolyLogExpr& e);
std::string to_string(const SymPolyLogExpr& e);

}  // namespace hypred
