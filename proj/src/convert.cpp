#include "hypred/convert.hpp"

namespace hypred {

EpsPoly<Rat> eps_series(const QEps& x, int eps_order) {
  if (is_zero(x.den()[0])) throw Error(ErrorKind::PoleAtEpsZero, "coefficient has a pole at eps = 0");
  EpsPoly<Rat> num(eps_order), den(eps_order);
  for (int k = 0; k <= eps_order; ++k) {
    num[k] = x.num()[k];
    den[k] = x.den()[k];
  }
  return num * den.inverse();
}

BiSeries<Rat> z_series(const Poly<QEps>& p, int z_order, int eps_order) {
  BiSeries<Rat> out(z_order, eps_order);
  for (int j = 0; j <= std::min(z_order, p.degree()); ++j)
    if (!p[j].zero()) out.set(j, eps_series(p[j], eps_order));
  return out;
}

BiSeries<Rat> inverse(const BiSeries<Rat>& s) {
  const int n = s.z_order(), k = s.eps_order();
  const EpsPoly<Rat> inv0 = s.coeff(0).inverse();
  BiSeries<Rat> r(n, k);
  r.set(0, inv0);
  for (int j = 1; j <= n; ++j) {
    EpsPoly<Rat> acc(k);
    for (int i = 1; i <= j; ++i) acc = acc + s.coeff(i) * r.coeff(j - i);
    r.set(j, -(acc * inv0));
  }
  return r;
}

LaurentHead z_series(const RatFunc& r, int z_order, int eps_order) {
  const int m = r.den().valuation();
  const Poly<QEps> reduced = r.den().shift_down(m);
  BiSeries<Rat> num = z_series(r.num(), z_order, eps_order);
  BiSeries<Rat> den = z_series(reduced, z_order, eps_order);
  if (den.coeff(0).zero() || is_zero(den.at(0, 0)))
    throw Error(ErrorKind::PoleAtEpsZero, "denominator degenerates at eps = 0");
  return {num * inverse(den), m};
}

}  // namespace hypred
