#pragma once

// Dense matrices of exact rational functions. Storage and products come from
// Eigen; elimination is exact Gauss-Jordan (Eigen's decompositions pivot on
// magnitude, which has no meaning here).

#include <Eigen/Core>

#include "hypred/frac.hpp"

namespace Eigen {
template <>
struct NumTraits<hypred::RatFunc> : GenericNumTraits<hypred::RatFunc> {
  using Real = hypred::RatFunc;
  using NonInteger = hypred::RatFunc;
  using Nested = hypred::RatFunc;
  using Literal = hypred::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 400
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace hypred {

using OpMatrix = Eigen::Matrix<RatFunc, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact determinant by fraction-field elimination.
RatFunc determinant(const OpMatrix& m);

/// Exact inverse; SingularStep if the matrix is singular.
OpMatrix inverse(const OpMatrix& m);

inline OpMatrix identity_matrix(int n) { return OpMatrix::Identity(n, n); }

bool equal(const OpMatrix& a, const OpMatrix& b);

}  // namespace hypred
