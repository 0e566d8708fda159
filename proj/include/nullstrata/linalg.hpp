#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nullstrata/scalar.hpp"

namespace nullstrata {

// Exact Gaussian elimination over any field-like Scalar (Rational in
// practice). Eigen's pivoting decompositions rely on magnitude thresholds and
// are not usable for exact types, hence these kernels.

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;          // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <typename Scalar>
Echelon<Scalar> row_reduce(MatrixX<Scalar> m) {
  Echelon<Scalar> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Eigen::Index rank(const MatrixX<Scalar>& m) {
  return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

/// Unique solution of a square system, or nullopt when singular.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_square(MatrixX<Scalar> a, VectorX<Scalar> b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      a.row(p).swap(a.row(c));
      std::swap(b[p], b[c]);
    }
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  VectorX<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar s = b[i];
    for (Eigen::Index j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

/// Some solution of a (possibly rectangular) consistent system, or nullopt.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_any(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = row_reduce(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const Eigen::Index c = ech.pivots[i];
    if (c == a.cols()) return std::nullopt;
    x[c] = ech.reduced(static_cast<Eigen::Index>(i), a.cols());
  }
  return x;
}

/// Basis (as columns) of the right null space.
template <typename Scalar>
MatrixX<Scalar> kernel(const MatrixX<Scalar>& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const Eigen::Index dim = m.cols() - static_cast<Eigen::Index>(ech.pivots.size());
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(m.cols(), dim);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      basis(ech.pivots[i], k) = -ech.reduced(static_cast<Eigen::Index>(i), free);
    }
    ++k;
  }
  return basis;
}

template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& m) {
  const Eigen::Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << m, MatrixX<Scalar>::Identity(n, n);
  const auto ech = row_reduce(aug);
  if (static_cast<Eigen::Index>(ech.pivots.size()) < n || ech.pivots.back() >= n) return std::nullopt;
  return MatrixX<Scalar>(ech.reduced.rightCols(n));
}

// Integer lattices.

/// Saturated basis (columns) of {z in Z^n : c z = 0} for an integer matrix c.
ZMat integer_kernel(const ZMat& c);

/// Elementary divisors (Smith normal form diagonal) of an integer matrix.
std::vector<Integer> elementary_divisors(ZMat m);

/// Canonical text key of the row space of m (its reduced echelon form).
std::string row_space_key(const RMat& m);

}  // namespace nullstrata
