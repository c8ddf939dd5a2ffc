#include "hypred/linear_form.hpp"

#include "hypred/error.hpp"

namespace hypred {

namespace {
void add_term(std::map<std::string, Rat>& m, const std::string& k, const Rat& v) {
  Rat s = m.count(k) ? Rat(m[k] + v) : v;
  if (s == 0)
    m.erase(k);
  else
    m[k] = s;
}
}  // namespace

LinearForm LinearForm::symbol(const std::string& name, const Rat& coeff) {
  LinearForm f;
  if (coeff != 0) f.c_[name] = coeff;
  return f;
}

Rat LinearForm::coeff(const std::string& name) const {
  auto it = c_.find(name);
  return it == c_.end() ? Rat(0) : it->second;
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  LinearForm r = a;
  r.const_ += b.const_;
  for (const auto& [k, v] : b.c_) add_term(r.c_, k, v);
  return r;
}

LinearForm operator-(const LinearForm& a) { return Rat(-1) * a; }
LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + (-b); }

LinearForm operator*(const Rat& s, const LinearForm& a) {
  if (s == 0) return LinearForm();
  LinearForm r = a;
  r.const_ *= s;
  for (auto& [k, v] : r.c_) v *= s;
  return r;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  if (a.c_ != b.c_) return a.c_ < b.c_;
  return a.const_ < b.const_;
}

LinearForm LinearForm::substitute(const std::string& name, const LinearForm& value) const {
  Rat k = coeff(name);
  if (k == 0) return *this;
  LinearForm r = *this;
  r.c_.erase(name);
  return r + k * value;
}

Rat LinearForm::evaluate(const Bindings& b) const {
  Rat v = const_;
  for (const auto& [k, c] : c_) {
    auto it = b.find(k);
    if (it == b.end()) throw Error(ErrorKind::InvalidArgument, "unbound symbol " + k);
    v += c * it->second;
  }
  return v;
}

EpsLin LinearForm::to_epslin(const Bindings& b) const {
  EpsLin v(const_);
  for (const auto& [k, c] : c_) {
    auto it = b.find(k);
    if (it != b.end())
      v = v + EpsLin(Rat(c * it->second));
    else if (k == "n")
      v = v + EpsLin(Rat(4 * c), Rat(-2 * c));
    else
      throw Error(ErrorKind::InvalidArgument, "unbound symbol " + k);
  }
  return v;
}

std::string LinearForm::to_string() const {
  std::string s;
  for (const auto& [k, c] : c_) {
    Rat a = abs(c);
    s += c < 0 ? "-" : (s.empty() ? "" : "+");
    if (a != 1) s += hypred::to_string(a) + "*";
    s += k;
  }
  if (const_ != 0 || s.empty()) {
    if (const_ < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    s += hypred::to_string(Rat(abs(const_)));
  }
  return s;
}

}  // namespace hypred
