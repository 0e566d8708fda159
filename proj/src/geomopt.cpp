#include "nullstrata/geomopt.hpp"

#include <map>

namespace nullstrata {

RVec project_orthogonal(const RVec& v, const RVec& lambda, const RMat& gram) {
  if (is_zero(lambda)) throw InputError("project_orthogonal along the zero vector");
  return v - lambda * (pair(v, gram, lambda) / pair(lambda, gram, lambda));
}

TorusOptimum torus_optimal(const std::vector<RVec>& support, const GroupState& state) {
  TorusOptimum out;
  if (support.empty()) {
    out.mu = RVec::Zero(state.datum().rank());
    return out;
  }
  const auto mn = min_norm_point(support, state.datum().gram());
  out.mu = mn.point;
  if (mn.is_zero) return out;
  out.semistable = false;
  out.lambda = state.primitive_on_ray(mn.point);
  out.m = *m_value(state.datum(), support, out.lambda);
  return out;
}

namespace {

struct SubsetWalker {
  const std::vector<RVec>& points;
  const RMat& products;
  const GroupState& state;
  const CandidateOptions& opts;
  std::size_t max_size;
  std::size_t visited = 0;
  std::map<RVec, bool, RVecLess> found;
  std::vector<std::size_t> current;

  void descend(std::size_t from) {
    for (std::size_t i = from; i < points.size(); ++i) {
      current.push_back(i);
      if (++visited > opts.subset_budget) throw CapacityError("candidate subset enumeration exceeds its budget");
      // Affinely dependent sets and sets whose affine hull contains the
      // origin stay that way under extension.
      const auto proj = affine_projection(points, products, current);
      if (proj && proj->norm2 != 0) {
        bool keep = true;
        if (opts.require_interior)
          for (const auto& c : proj->coefficients) keep = keep && c > 0;
        if (keep) found.emplace(state.primitive_on_ray(state.dominant(proj->point)), true);
        if (current.size() < max_size) descend(i + 1);
      }
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<RVec> candidate_directions(const ModuleCharacter& ch, const GroupState& state,
                                       const CandidateOptions& opts) {
  const std::vector<RVec> pts = ch.nonzero_weights();
  if (pts.empty() || state.lattice_rank() == 0) return {};
  const RMat prod = inner_products(pts, state.datum().gram());
  const int bound = opts.max_subset > 0 ? opts.max_subset : state.lattice_rank();
  SubsetWalker walker{pts, prod, state, opts, static_cast<std::size_t>(bound), 0, {}, {}};
  walker.descend(0);
  std::vector<RVec> out;
  for (auto& [v, _] : walker.found) out.push_back(v);
  return out;
}

}  // namespace nullstrata
