#pragma once

// Fraction-free (Bareiss) elimination over an exact field. Pivoting takes the
// first nonzero entry of each column, so results are deterministic.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "qaff/errors.hpp"

namespace qaff {

template <typename S>
bool scalar_is_zero(const S& x) {
  if constexpr (requires { x.is_zero(); })
    return x.is_zero();
  else
    return x == S(0);
}

template <typename S>
struct Echelon {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Row echelon form by Bareiss elimination; rows below rank() are zero.
template <typename Derived>
Echelon<typename Derived::Scalar> bareiss(const Eigen::MatrixBase<Derived>& in) {
  using S = typename Derived::Scalar;
  Echelon<S> out{in, {}};
  auto& m = out.m;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  S prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && scalar_is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        S v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = prev == S(1) ? v : S(v / prev);
      }
      m(i, c) = S(0);
    }
    // Rows r+1.. left of c were already zero.
    prev = m(r, c);
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

/// Reduced row echelon form: pivots 1, zeros above and below.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& in) {
  using S = typename Derived::Scalar;
  Echelon<S> e = bareiss(in);
  auto& m = e.m;
  for (Eigen::Index k = e.rank() - 1; k >= 0; --k) {
    const Eigen::Index c = e.pivots[static_cast<std::size_t>(k)];
    const S inv = S(1) / m(k, c);
    for (Eigen::Index j = c; j < m.cols(); ++j)
      if (!scalar_is_zero(m(k, j))) m(k, j) = m(k, j) * inv;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (scalar_is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j)
        if (!scalar_is_zero(m(k, j))) m(i, j) -= f * m(k, j);
    }
  }
  return e;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return bareiss(m).rank();
}

/// The unique x with A x = b (A may have more rows than columns).
/// Throws NoSolution if the system is inconsistent or underdetermined.
template <typename DA, typename DB>
Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, 1> solve(const Eigen::MatrixBase<DA>& a,
                                                            const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  const Eigen::Index n = a.cols();
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  Echelon<S> e = rref(aug);
  if (e.rank() > 0 && e.pivots.back() == n) throw NoSolution("inconsistent linear system");
  if (e.rank() < n) throw NoSolution("underdetermined linear system");
  Eigen::Matrix<S, Eigen::Dynamic, 1> x(n);
  for (Eigen::Index k = 0; k < n; ++k) x(k) = e.m(k, n);
  return x;
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> inverse(
    const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  using M = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw NoSolution("inverse of a non-square matrix");
  bool diagonal = true;
  for (Eigen::Index j = 0; j < n && diagonal; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j && !scalar_is_zero(a(i, j))) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    M out = M::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (scalar_is_zero(a(i, i))) throw NoSolution("singular matrix");
      out(i, i) = S(1) / a(i, i);
    }
    return out;
  }
  M aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = M::Identity(n, n);
  Echelon<S> e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) throw NoSolution("singular matrix");
  return e.m.rightCols(n);
}

}  // namespace qaff
