#include "hypred/op_matrix.hpp"

#include <utility>

#include "hypred/error.hpp"

namespace hypred {

namespace {

// Row-reduces `a` in place, applying the same row operations to `b`.
// Returns the determinant of `a`.
RatFunc eliminate(OpMatrix& a, OpMatrix* b) {
  const Eigen::Index n = a.rows();
  RatFunc det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col).zero()) ++piv;
    if (piv == n) return RatFunc(0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      if (b) b->row(piv).swap(b->row(col));
      det = -det;
    }
    const RatFunc p = a(col, col);
    det *= p;
    const RatFunc inv = RatFunc(1) / p;
    for (Eigen::Index j = 0; j < n; ++j) a(col, j) = a(col, j) * inv;
    if (b)
      for (Eigen::Index j = 0; j < b->cols(); ++j) (*b)(col, j) = (*b)(col, j) * inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).zero()) continue;
      const RatFunc f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j)
        if (!a(col, j).zero()) a(r, j) = a(r, j) - f * a(col, j);
      if (b)
        for (Eigen::Index j = 0; j < b->cols(); ++j)
          if (!(*b)(col, j).zero()) (*b)(r, j) = (*b)(r, j) - f * (*b)(col, j);
    }
  }
  return det;
}

}  // namespace

RatFunc determinant(const OpMatrix& m) {
  OpMatrix a = m;
  return eliminate(a, nullptr);
}

OpMatrix inverse(const OpMatrix& m) {
  OpMatrix a = m;
  OpMatrix b = identity_matrix(static_cast<int>(m.rows()));
  if (eliminate(a, &b).zero()) throw Error(ErrorKind::SingularStep, "step matrix is singular");
  return b;
}

bool equal(const OpMatrix& a, const OpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace hypred
