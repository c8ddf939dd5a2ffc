#include "hypred/theta_op.hpp"

#include <algorithm>

namespace hypred {

namespace {

Rat binomial(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

}  // namespace

RatFunc theta_power(const RatFunc& c, int k) {
  RatFunc r = c;
  for (int i = 0; i < k && !r.zero(); ++i) r = r.theta();
  return r;
}

ThetaOp operator+(const ThetaOp& a, const ThetaOp& b) {
  std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return ThetaOp(std::move(c));
}

ThetaOp operator-(const ThetaOp& a, const ThetaOp& b) {
  std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return ThetaOp(std::move(c));
}

ThetaOp operator*(const RatFunc& c, const ThetaOp& a) {
  std::vector<RatFunc> out = a.c_;
  for (auto& x : out) x = c * x;
  return ThetaOp(std::move(out));
}

ThetaOp operator*(const ThetaOp& a, const ThetaOp& b) {
  if (a.zero() || b.zero()) return ThetaOp();
  const int da = a.degree(), db = b.degree();
  // thetas[m][i] = theta^i(b_m)
  std::vector<std::vector<RatFunc>> thetas(db + 1);
  for (int m = 0; m <= db; ++m) {
    thetas[m].push_back(b.c_[m]);
    for (int i = 1; i <= da; ++i) thetas[m].push_back(thetas[m].back().zero() ? RatFunc() : thetas[m].back().theta());
  }
  std::vector<RatFunc> out(da + db + 1);
  for (int k = 0; k <= da; ++k) {
    if (a.c_[k].zero()) continue;
    for (int m = 0; m <= db; ++m)
      for (int i = 0; i <= k; ++i) {
        const RatFunc& t = thetas[m][i];
        if (t.zero()) continue;
        out[k - i + m] += RatFunc(QEps(binomial(k, i))) * a.c_[k] * t;
      }
  }
  return ThetaOp(std::move(out));
}

BiSeries<Rat> ThetaOp::apply(const BiSeries<Rat>& s) const {
  const int n = s.z_order(), k = s.eps_order();
  if (zero()) return BiSeries<Rat>(n, k);
  std::vector<LaurentHead> heads;
  int max_pole = 0;
  for (const auto& c : c_) {
    heads.push_back(c.zero() ? LaurentHead{BiSeries<Rat>(n, k), 0} : z_series(c, n, k));
    max_pole = std::max(max_pole, heads.back().pole_order);
  }
  BiSeries<Rat> acc(n, k);
  BiSeries<Rat> power = s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].zero()) acc = acc + (heads[i].series * power).shift_up(max_pole - heads[i].pole_order);
    power = power.theta();
  }
  return acc.shift_down(max_pole);
}

std::string ThetaOp::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + std::to_string(c_[k].num().degree()) + "/" + std::to_string(c_[k].den().degree()) + "]";
    if (k > 0) out += "*theta^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace hypred
