#include "hypred/epslin.hpp"

namespace hypred {

EpsLin to_numeric(const SymEpsLin& x) {
  if (!x.eps_part.is_constant())
    throw Error(ErrorKind::InvalidArgument, "parameter has a symbolic eps coefficient: " + to_string(x));
  return {x.const_part, x.eps_part.constant()};
}

EpsLin bind(const SymEpsLin& x, const std::map<std::string, Rat>& values) {
  return {x.const_part, x.eps_part.eval(values)};
}

std::string to_string(const EpsLin& x) {
  if (is_zero(x.eps_part)) return to_string(x.const_part);
  std::string eps;
  if (x.eps_part == 1)
    eps = "eps";
  else if (x.eps_part == -1)
    eps = "-eps";
  else if (is_integer(x.eps_part))
    eps = to_string(x.eps_part) + "*eps";
  else
    eps = "(" + to_string(x.eps_part) + ")*eps";
  if (is_zero(x.const_part)) return eps;
  if (eps.front() == '-') return to_string(x.const_part) + eps;
  return to_string(x.const_part) + "+" + eps;
}

std::string to_string(const SymEpsLin& x) {
  if (x.eps_part.is_constant()) return to_string(to_numeric(x));
  const std::string eps = "(" + x.eps_part.to_string() + ")*eps";
  if (is_zero(x.const_part)) return eps;
  return to_string(x.const_part) + "+" + eps;
}

}  // namespace hypred
