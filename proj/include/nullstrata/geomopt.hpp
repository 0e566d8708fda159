#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nullstrata/group_state.hpp"
#include "nullstrata/linalg.hpp"
#include "nullstrata/repchar.hpp"

namespace nullstrata {

/// Minimal-norm point of a convex hull with its convex certificate.
template <typename Scalar>
struct MinNormResult {
  VectorX<Scalar> point;
  std::vector<std::size_t> support;    // indices into the input points
  std::vector<Scalar> coefficients;    // convex weights over `support`
  bool is_zero = false;
};

template <typename Scalar>
struct AffineProjection {
  VectorX<Scalar> point;
  std::vector<Scalar> coefficients;  // affine weights, sum 1
  Scalar norm2;
};

/// Projection of the origin onto the affine hull of points[idx...], or
/// nullopt when those points are affinely dependent. `products` holds the
/// pairwise inner products of all points.
template <typename Scalar>
std::optional<AffineProjection<Scalar>> affine_projection(const std::vector<VectorX<Scalar>>& points,
                                                          const MatrixX<Scalar>& products,
                                                          const std::vector<std::size_t>& idx) {
  const auto s = static_cast<Eigen::Index>(idx.size());
  MatrixX<Scalar> a(s + 1, s + 1);
  VectorX<Scalar> b = VectorX<Scalar>::Zero(s + 1);
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = 0; j < s; ++j)
      a(i, j) = products(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]),
                         static_cast<Eigen::Index>(idx[static_cast<std::size_t>(j)]));
    a(i, s) = Scalar(1);
    a(s, i) = Scalar(1);
  }
  a(s, s) = Scalar(0);
  b[s] = Scalar(1);
  auto sol = solve_square<Scalar>(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  AffineProjection<Scalar> out;
  out.point = VectorX<Scalar>::Zero(points.front().size());
  for (Eigen::Index i = 0; i < s; ++i) {
    out.coefficients.push_back((*sol)[i]);
    out.point += points[idx[static_cast<std::size_t>(i)]] * (*sol)[i];
  }
  out.norm2 = -(*sol)[s];
  return out;
}

template <typename Scalar>
MatrixX<Scalar> inner_products(const std::vector<VectorX<Scalar>>& points, const MatrixX<Scalar>& gram) {
  const auto n = static_cast<Eigen::Index>(points.size());
  MatrixX<Scalar> p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const VectorX<Scalar> gi = gram * points[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < n; ++j) {
      p(i, j) = points[static_cast<std::size_t>(j)].dot(gi);
      p(j, i) = p(i, j);
    }
  }
  return p;
}

/// Exact minimal-norm point of conv(points) by Wolfe's active-set method:
/// the active set stays affinely independent and each minor cycle projects
/// the origin onto its affine hull.
template <typename Scalar>
MinNormResult<Scalar> min_norm_point(const std::vector<VectorX<Scalar>>& points, const MatrixX<Scalar>& gram) {
  if (points.empty()) throw InputError("min_norm_point of an empty set");
  const MatrixX<Scalar> prod = inner_products(points, gram);
  const std::size_t n = points.size();

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (prod(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) <
        prod(static_cast<Eigen::Index>(start), static_cast<Eigen::Index>(start)))
      start = i;
  std::vector<std::size_t> active{start};
  std::vector<Scalar> weight{Scalar(1)};
  VectorX<Scalar> x = points[start];

  auto dot_with = [&](std::size_t j) {
    Scalar s(0);
    for (std::size_t i = 0; i < active.size(); ++i)
      s += weight[i] * prod(static_cast<Eigen::Index>(active[i]), static_cast<Eigen::Index>(j));
    return s;
  };

  for (;;) {
    Scalar xx(0);
    for (std::size_t i = 0; i < active.size(); ++i) xx += weight[i] * dot_with(active[i]);
    if (xx == 0) break;
    std::size_t best = n;
    Scalar best_val = xx;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar v = dot_with(j);
      if (v < best_val) {
        best_val = v;
        best = j;
      }
    }
    if (best == n) break;  // (x, p) >= (x, x) for every point: optimal
    active.push_back(best);
    weight.push_back(Scalar(0));

    for (;;) {
      auto proj = affine_projection(points, prod, active);
      if (!proj) throw InternalError("active set became affinely dependent");
      bool interior = true;
      for (const auto& c : proj->coefficients) interior = interior && c > 0;
      if (interior) {
        weight = proj->coefficients;
        break;
      }
      // Step from the current weights toward the projection until a weight hits zero.
      std::optional<Scalar> theta;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const Scalar& c = proj->coefficients[i];
        if (c > 0 || weight[i] == c) continue;
        const Scalar t = weight[i] / (weight[i] - c);
        if (!theta || t < *theta) theta = t;
      }
      if (!theta) throw InternalError("min-norm line search found no blocking weight");
      std::vector<std::size_t> kept;
      std::vector<Scalar> kept_w;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const Scalar w = (Scalar(1) - *theta) * weight[i] + *theta * proj->coefficients[i];
        if (w > 0) {
          kept.push_back(active[i]);
          kept_w.push_back(w);
        }
      }
      active = std::move(kept);
      weight = std::move(kept_w);
    }
    x = VectorX<Scalar>::Zero(points.front().size());
    for (std::size_t i = 0; i < active.size(); ++i) x += points[active[i]] * weight[i];
  }

  x = VectorX<Scalar>::Zero(points.front().size());
  for (std::size_t i = 0; i < active.size(); ++i) x += points[active[i]] * weight[i];
  return MinNormResult<Scalar>{x, active, weight, is_zero(x)};
}

/// Checks the certificate and first-order optimality exactly.
template <typename Scalar>
bool verify_min_norm(const MinNormResult<Scalar>& r, const std::vector<VectorX<Scalar>>& points,
                     const MatrixX<Scalar>& gram) {
  Scalar total(0);
  VectorX<Scalar> rebuilt = VectorX<Scalar>::Zero(r.point.size());
  for (std::size_t i = 0; i < r.support.size(); ++i) {
    if (r.coefficients[i] < 0) return false;
    total += r.coefficients[i];
    rebuilt += points[r.support[i]] * r.coefficients[i];
  }
  if (total != 1 || !equal(rebuilt, r.point)) return false;
  const Scalar xx = pair(r.point, gram, r.point);
  for (const auto& p : points)
    if (pair(r.point, gram, p) < xx) return false;
  return true;
}

/// v - ((v, lambda) / (lambda, lambda)) lambda
RVec project_orthogonal(const RVec& v, const RVec& lambda, const RMat& gram);

struct TorusOptimum {
  bool semistable = true;
  RVec lambda;     // primitive sublattice cocharacter (E coordinates)
  Rational m;      // m(support, lambda)
  RVec mu;         // minimal-norm point of the Newton polytope
};

/// Optimal cocharacter of the state's maximal torus for a weight support.
TorusOptimum torus_optimal(const std::vector<RVec>& support, const GroupState& state);

struct CandidateOptions {
  int max_subset = 0;          // 0: the state's lattice rank
  bool require_interior = true;  // keep only projections inside the relative interior of the simplex
  std::size_t subset_budget = 50'000'000;
};

/// Superset of the stratum directions: primitive dominant sublattice
/// cocharacters on the rays through minimal-norm points of weight subsets,
/// sorted lexicographically (E coordinates).
std::vector<RVec> candidate_directions(const ModuleCharacter& ch, const GroupState& state,
                                       const CandidateOptions& opts = {});

}  // namespace nullstrata
