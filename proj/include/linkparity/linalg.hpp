#ifndef LINKPARITY_LINALG_HPP
#define LINKPARITY_LINALG_HPP

#include <optional>
#include <type_traits>
#include <utility>

#include <Eigen/Core>

#include "linkparity/errors.hpp"
#include "linkparity/rational.hpp"

namespace linkparity {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

/// Unique(x) when engaged, Singular otherwise.
template <typename Scalar>
using SolveResult = std::optional<Vector<Scalar>>;

namespace detail {

/// Scales every row of `m` so that all entries are integers and returns the
/// product of the row multipliers. No-op for non-rational scalars.
template <typename Scalar>
Scalar clear_row_denominators(Matrix<Scalar>& m) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    Rational product = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Integer lcm = 1;
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
      }
      if (lcm != 1) {
        const Rational factor(lcm);
        m.row(i) *= factor;
        product *= factor;
      }
    }
    return product;
  } else {
    return Scalar(1);
  }
}

/// In-place Bareiss forward elimination on the first `n` columns of `m`
/// (extra columns are carried along). Entries must be integral for the
/// divisions to be exact. Returns the determinant of the leading n x n
/// block, which is zero exactly when elimination stalls.
template <typename Scalar>
Scalar bareiss_eliminate(Matrix<Scalar>& m, Eigen::Index n) {
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// For rational input each row is first scaled to integers, so every
/// intermediate entry is an integer minor of the scaled matrix.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar(1);
  Matrix<Scalar> work = a;
  const Scalar scale = detail::clear_row_denominators(work);
  return detail::bareiss_eliminate(work, work.rows()) / scale;
}

/// Solves a x = b exactly. Returns std::nullopt when a is singular.
template <typename DerivedA, typename DerivedB>
SolveResult<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>);
  static_assert(!Eigen::NumTraits<Scalar>::IsInteger, "solve needs a field scalar");
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DimensionError("solve with a non-square matrix");
  if (b.cols() != 1 || b.rows() != n) throw DimensionError("right-hand side length mismatch");

  Matrix<Scalar> work(n, n + 1);
  work.leftCols(n) = a;
  work.col(n) = b;
  detail::clear_row_denominators(work);
  if (n > 0 && detail::bareiss_eliminate(work, n) == Scalar(0)) return std::nullopt;

  Vector<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar acc = work(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= work(i, j) * x(j);
    x(i) = acc / work(i, i);
  }
  return x;
}

}  // namespace linkparity

#endif  // LINKPARITY_LINALG_HPP
