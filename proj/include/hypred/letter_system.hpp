#pragma once

// First-order systems
//   d phi_i / dx = sum_letter sum_j eps^j sum_l M[letter][j](i, l) phi_l / (x - letter)
// solved order by order in eps by iterated integration from x = 0. At each
// order the eps^0 couplings must be acyclic, so that every component is an
// integral of components that are already known.

#include <map>
#include <string>
#include <vector>

#include "hypred/gpl.hpp"

namespace hypred {

template <class C>
struct LetterSystemT {
  int size = 0;
  std::string var{"z"};
  /// coupling[letter][j] is a size x size matrix, row-major.
  std::map<Rat, std::vector<std::vector<C>>> coupling;
  /// boundary[i][k]: value of the eps^k coefficient of phi_i at x = 0.
  std::vector<std::vector<C>> boundary;

  explicit LetterSystemT(int n = 0, std::string v = "z") : size(n), var(std::move(v)), boundary(n) {}

  void add(const Rat& letter, int eps_power, int row, int col, const C& value) {
    auto& per_order = coupling[letter];
    if (static_cast<int>(per_order.size()) <= eps_power)
      per_order.resize(eps_power + 1, std::vector<C>(static_cast<std::size_t>(size) * size, C(0)));
    auto& slot = per_order[eps_power][static_cast<std::size_t>(row) * size + col];
    slot = slot + value;
  }
  C at(const Rat& letter, int eps_power, int row, int col) const {
    auto it = coupling.find(letter);
    if (it == coupling.end() || static_cast<int>(it->second.size()) <= eps_power) return C(0);
    return it->second[eps_power][static_cast<std::size_t>(row) * size + col];
  }
  void set_boundary(int i, int k, const C& v) {
    if (static_cast<int>(boundary[i].size()) <= k) boundary[i].resize(k + 1, C(0));
    boundary[i][k] = v;
  }
  C boundary_value(int i, int k) const {
    return k < static_cast<int>(boundary[i].size()) ? boundary[i][k] : C(0);
  }
  int max_eps_power() const {
    int m = 0;
    for (const auto& [l, v] : coupling) m = std::max(m, static_cast<int>(v.size()) - 1);
    return m;
  }

  /// Components in an order compatible with the eps^0 couplings; NotTriangular
  /// if they contain a cycle (including a diagonal entry).
  std::vector<int> solve_order() const {
    std::vector<std::vector<int>> deps(size);
    for (int i = 0; i < size; ++i)
      for (int l = 0; l < size; ++l)
        for (const auto& [letter, v] : coupling)
          if (!is_zero(at(letter, 0, i, l))) {
            deps[i].push_back(l);
            break;
          }
    std::vector<int> state(size, 0), order;
    auto visit = [&](int i, auto&& self) -> void {
      if (state[i] == 2) return;
      if (state[i] == 1) throw Error(ErrorKind::NotTriangular, "eps^0 couplings form a cycle");
      state[i] = 1;
      for (int l : deps[i]) self(l, self);
      state[i] = 2;
      order.push_back(i);
    };
    for (int i = 0; i < size; ++i) visit(i, visit);
    return order;
  }

  /// result[i][k]: eps^k coefficient of phi_i, for k = 0..eps_order.
  std::vector<std::vector<PolyLogExprT<C>>> solve(int eps_order) const {
    const std::vector<int> order = solve_order();
    std::vector<std::vector<PolyLogExprT<C>>> sol(size, std::vector<PolyLogExprT<C>>(eps_order + 1, PolyLogExprT<C>(var)));
    for (int k = 0; k <= eps_order; ++k)
      for (int i : order) {
        PolyLogExprT<C> value = PolyLogExprT<C>::constant(boundary_value(i, k), var);
        for (const auto& [letter, per_order] : coupling) {
          PolyLogExprT<C> integrand(var);
          for (int j = 0; j <= k && j < static_cast<int>(per_order.size()); ++j)
            for (int l = 0; l < size; ++l) {
              const C& m = per_order[j][static_cast<std::size_t>(i) * size + l];
              if (!is_zero(m)) integrand = integrand + m * sol[l][k - j];
            }
          if (!integrand.zero()) value = value + integrand.integrate(letter);
        }
        sol[i][k] = value;
      }
    return sol;
  }
};

using LetterSystem = LetterSystemT<Rat>;

}  // namespace hypred
