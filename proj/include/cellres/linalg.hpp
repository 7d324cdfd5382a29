#pragma once

// Exact dense linear algebra over Eigen matrices with an exact scalar
// (Integer or Rational). Nothing here ever rounds.

#include "cellres/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace cellres {

template <typename Scalar>
struct BareissResult {
  Eigen::Index rank = 0;
  int swap_sign = 1;
  Scalar last_pivot{1};
  std::vector<Eigen::Index> pivot_columns;
};

/// Fraction-free Gaussian elimination in place. After the call the first
/// `rank` rows are in echelon form; every division performed is exact in
/// any integral domain.
template <typename Scalar>
BareissResult<Scalar> bareiss_eliminate(MatrixX<Scalar>& m) {
  BareissResult<Scalar> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous{1};
  for (Eigen::Index col = 0; col < cols && out.rank < rows; ++col) {
    Eigen::Index pivot = out.rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != out.rank) {
      m.row(pivot).swap(m.row(out.rank));
      out.swap_sign = -out.swap_sign;
    }
    const Eigen::Index r = out.rank;
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / previous;
      }
      m(i, col) = 0;
    }
    previous = m(r, col);
    out.pivot_columns.push_back(col);
    ++out.rank;
  }
  out.last_pivot = previous;
  return out;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> work = m;
  return bareiss_eliminate(work).rank;
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(m.rows() == m.cols());
  if (m.rows() == 0) return Scalar{1};
  MatrixX<Scalar> work = m;
  const auto reduced = bareiss_eliminate(work);
  if (reduced.rank < m.rows()) return Scalar{0};
  return reduced.swap_sign > 0 ? reduced.last_pivot : Scalar(-reduced.last_pivot);
}

template <typename Derived>
int determinant_sign(const Eigen::MatrixBase<Derived>& m) {
  return sign_of(exact_determinant(m));
}

/// Solves the square system a x = b over a field; nullopt when singular.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_exact(MatrixX<Scalar> a, VectorX<Scalar> b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    a.row(pivot).swap(a.row(col));
    std::swap(b(pivot), b(col));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Scalar factor = a(i, col) / a(col, col);
      a.row(i) -= factor * a.row(col);
      b(i) -= factor * b(col);
    }
  }
  VectorX<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = b(i) / a(i, i);
  return x;
}

/// Coordinates of v in the column basis, or nullopt if v is outside the span.
template <typename Scalar>
std::optional<VectorX<Scalar>> coordinates_in_basis(const MatrixX<Scalar>& basis,
                                                    const VectorX<Scalar>& v) {
  if (basis.cols() == 0) {
    if (v.isZero()) return VectorX<Scalar>(0);
    return std::nullopt;
  }
  const MatrixX<Scalar> gram = basis.transpose() * basis;
  const VectorX<Scalar> rhs = basis.transpose() * v;
  auto x = solve_exact<Scalar>(gram, rhs);
  if (!x) return std::nullopt;
  if (basis * *x != v) return std::nullopt;
  return x;
}

/// Component of v orthogonal to the column span of `basis`.
template <typename Scalar>
VectorX<Scalar> project_orthogonal(const VectorX<Scalar>& v, const MatrixX<Scalar>& basis) {
  if (basis.cols() == 0) return v;
  const MatrixX<Scalar> gram = basis.transpose() * basis;
  const VectorX<Scalar> rhs = basis.transpose() * v;
  const auto x = solve_exact<Scalar>(gram, rhs);
  eigen_assert(x.has_value());
  return v - basis * *x;
}

/// Indices of a maximal affinely independent prefix-greedy subset of the
/// points (columns), in input order.
template <typename Scalar>
std::vector<Eigen::Index> affinely_independent_subset(const MatrixX<Scalar>& points) {
  std::vector<Eigen::Index> chosen;
  if (points.cols() == 0) return chosen;
  chosen.push_back(0);
  MatrixX<Scalar> diffs(points.rows(), 0);
  for (Eigen::Index j = 1; j < points.cols(); ++j) {
    MatrixX<Scalar> trial(points.rows(), diffs.cols() + 1);
    trial << diffs, points.col(j) - points.col(0);
    if (exact_rank(trial) == trial.cols()) {
      diffs = std::move(trial);
      chosen.push_back(j);
    }
  }
  return chosen;
}

template <typename Scalar>
Eigen::Index affine_dimension(const MatrixX<Scalar>& points) {
  return static_cast<Eigen::Index>(affinely_independent_subset(points).size()) - 1;
}

/// Basis (columns) of the linear span of the differences of the points.
template <typename Scalar>
MatrixX<Scalar> affine_span_basis(const MatrixX<Scalar>& points) {
  const auto chosen = affinely_independent_subset(points);
  MatrixX<Scalar> basis(points.rows(), chosen.empty() ? 0 : chosen.size() - 1);
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    basis.col(static_cast<Eigen::Index>(i - 1)) = points.col(chosen[i]) - points.col(chosen[0]);
  }
  return basis;
}

/// Sign of the determinant of the change of basis between two bases of the
/// same subspace: sgn det(B1^T B2), since B1 = B2 C gives B1^T B2 = C^T (B2^T B2).
template <typename Scalar>
int same_span_orientation(const MatrixX<Scalar>& b1, const MatrixX<Scalar>& b2) {
  if (b1.cols() == 0) return 1;
  return determinant_sign(MatrixX<Scalar>(b1.transpose() * b2));
}

}  // namespace cellres
