#include "nullstrata/linalg.hpp"

#include <sstream>

namespace nullstrata {

namespace {

// Column operation on (cols a, b) of both m and u:
//   [a b] <- [a b] * [[x, -q], [y, p]]  with x*p0 + y*q0 = g, p = p0/g, q = q0/g
// so that entry (row, a) becomes g and (row, b) becomes 0. Unimodular.
void combine_columns(ZMat& m, ZMat& u, Eigen::Index row, Eigen::Index a, Eigen::Index b) {
  const Integer p0 = m(row, a);
  const Integer q0 = m(row, b);
  if (q0 == 0) return;
  // Extended Euclid.
  Integer old_r = p0, r = q0, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer quot = old_r / r;
    Integer tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  Integer g = old_r, x = old_s, y = old_t;
  if (g < 0) {
    g = -g;
    x = -x;
    y = -y;
  }
  const Integer p = p0 / g;
  const Integer q = q0 / g;
  auto apply = [&](ZMat& mat) {
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
      const Integer ca = mat(i, a);
      const Integer cb = mat(i, b);
      mat(i, a) = ca * x + cb * y;
      mat(i, b) = -ca * q + cb * p;
    }
  };
  apply(m);
  apply(u);
}

}  // namespace

ZMat integer_kernel(const ZMat& c) {
  const Eigen::Index n = c.cols();
  ZMat m = c;
  ZMat u = ZMat::Identity(n, n);
  Eigen::Index pivot = 0;
  for (Eigen::Index row = 0; row < m.rows() && pivot < n; ++row) {
    Eigen::Index first = -1;
    for (Eigen::Index j = pivot; j < n; ++j) {
      if (m(row, j) != 0) {
        first = j;
        break;
      }
    }
    if (first < 0) continue;
    if (first != pivot) {
      m.col(first).swap(m.col(pivot));
      u.col(first).swap(u.col(pivot));
    }
    for (Eigen::Index j = pivot + 1; j < n; ++j) combine_columns(m, u, row, pivot, j);
    ++pivot;
  }
  return u.rightCols(n - pivot);
}

std::vector<Integer> elementary_divisors(ZMat m) {
  std::vector<Integer> out;
  Eigen::Index t = 0;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pr < 0 || abs(m(i, j)) < abs(m(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    m.row(pr).swap(m.row(t));
    m.col(pc).swap(m.col(t));
    bool clean = true;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      const Integer f = m(i, t) / m(t, t);
      if (f != 0) m.row(i) -= m.row(t) * f;
      if (m(i, t) != 0) clean = false;
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      const Integer f = m(t, j) / m(t, t);
      if (f != 0) m.col(j) -= m.col(t) * f;
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility of the remaining block by the pivot.
    bool divides = true;
    for (Eigen::Index i = t + 1; i < rows && divides; ++i)
      for (Eigen::Index j = t + 1; j < cols && divides; ++j)
        if (m(i, j) % m(t, t) != 0) {
          m.row(t) += m.row(i);
          divides = false;
        }
    if (!divides) continue;
    out.push_back(abs(m(t, t)));
    ++t;
  }
  return out;
}

std::string row_space_key(const RMat& m) {
  const auto ech = row_reduce(m);
  std::ostringstream os;
  os << m.cols() << ':';
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << ech.reduced(static_cast<Eigen::Index>(i), j).str() << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace nullstrata
