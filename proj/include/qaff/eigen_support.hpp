#pragma once

// RatFunc as an Eigen scalar, plus the dense matrix vocabulary used by the
// representation code.

#include <string>
#include <vector>

#include <Eigen/Core>

#include "qaff/rational_function.hpp"

namespace Eigen {

template <>
struct NumTraits<qaff::RatFunc> : GenericNumTraits<qaff::RatFunc> {
  using Real = qaff::RatFunc;
  using NonInteger = qaff::RatFunc;
  using Literal = qaff::RatFunc;
  using Nested = qaff::RatFunc;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 100
  };

  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen

namespace qaff {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<RatFunc>;
using Vector = VectorX<RatFunc>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <typename Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

template <typename DA, typename DB>
bool equal(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      if (!(x(i, j) == y(i, j))) return false;
  return true;
}

inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }
inline Matrix zeros(Eigen::Index n) { return Matrix::Zero(n, n); }

/// Kronecker product x ⊗ y, basis order (i, j) -> i*dim(y) + j.
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  MatrixX<typename DA::Scalar> out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero())
        out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()).setZero();
      else
        out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  return out;
}

/// Entrywise map, e.g. substitution.
template <typename Derived, typename F>
MatrixX<typename Derived::Scalar> map_entries(const Eigen::MatrixBase<Derived>& m, F&& f) {
  MatrixX<typename Derived::Scalar> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = f(m(i, j));
  return out;
}

/// Commutator xy - yx.
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> commutator(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  return x * y - y * x;
}

/// Rows of canonical text, e.g. [["r","0"],["0","s"]].
std::vector<std::vector<std::string>> render(const Matrix& m);
std::string render_inline(const Matrix& m);

}  // namespace qaff
