#include "hypred/hyper.hpp"

namespace hypred {

namespace {

template <class C>
std::string render(const HyperFnT<C>& f) {
  std::string s = std::to_string(f.upper.size()) + "F" + std::to_string(f.lower.size()) + "[";
  for (std::size_t i = 0; i < f.upper.size(); ++i) s += (i ? ", " : "") + to_string(f.upper[i]);
  s += "; ";
  for (std::size_t i = 0; i < f.lower.size(); ++i) s += (i ? ", " : "") + to_string(f.lower[i]);
  s += "; ";
  if (f.kappa != 1) s += to_string(f.kappa) + "*";
  return s + f.var + "]";
}

}  // namespace

std::string to_string(const HyperFn& f) { return render(f); }
std::string to_string(const SymHyperFn& f) { return render(f); }

}  // namespace hypred
