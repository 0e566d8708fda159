#include "nullstrata/group_state.hpp"

#include <numeric>

#include "nullstrata/linalg.hpp"

namespace nullstrata {

GroupState GroupState::ambient(DatumPtr datum) {
  GroupState s;
  s.datum_ = std::move(datum);
  const int r = s.datum_->rank();
  s.live_roots_.resize(s.datum_->roots().size());
  std::iota(s.live_roots_.begin(), s.live_roots_.end(), 0);
  s.sublattice_ = ZMat::Identity(r, r);
  s.finish();
  return s;
}

void GroupState::finish() {
  sublattice_e_ = datum_->cochar_basis() * to_rational(sublattice_);
  const RMat& g = datum_->gram();
  if (sublattice_e_.cols() > 0) {
    const RMat normal = sublattice_e_.transpose() * g * sublattice_e_;
    coord_map_ = *inverse<Rational>(normal) * sublattice_e_.transpose() * g;
  } else {
    coord_map_ = RMat::Zero(0, datum_->rank());
  }
  live_simple_.clear();
  live_simple_vectors_.clear();
  levi_type_ = TypeSpec{};
  if (!live_roots_.empty()) {
    const Subsystem sub = classify_subsystem(*datum_, live_roots_);
    live_simple_ = sub.simple;
    levi_type_ = sub.type;
  }
  for (int s : live_simple_) live_simple_vectors_.push_back(datum_->roots_q()[static_cast<std::size_t>(s)]);
  levi_type_.torus = lattice_rank() - levi_type_.semisimple_rank();
  if (levi_type_.torus < 0) throw InternalError("live roots span more than the sublattice");

  RMat rows(static_cast<Eigen::Index>(constraints_.size()), datum_->rank());
  for (std::size_t i = 0; i < constraints_.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = (g * constraints_[i]).transpose();
  key_ = row_space_key(rows);
}

RVec GroupState::lattice_coordinates(const RVec& v) const { return coord_map_ * v; }

bool GroupState::in_lattice(const RVec& v) const {
  const RVec c = lattice_coordinates(v);
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (!is_integral(c[i])) return false;
  return equal(RVec(sublattice_e_ * c), v);
}

RVec GroupState::primitive_on_ray(const RVec& v) const {
  const RVec c = lattice_coordinates(v);
  if (!equal(RVec(sublattice_e_ * c), v)) throw InternalError("vector is not in the span of the sublattice");
  return sublattice_e_ * to_rational(primitive_direction(c));
}

RVec GroupState::dominant(const RVec& v) const { return make_dominant(v, live_simple_vectors_, datum_->gram()).vector; }

GroupState GroupState::levi_perp(const RVec& lambda) const {
  if (is_zero(lambda)) throw InputError("levi_perp needs a nonzero cocharacter");
  if (!in_lattice(lambda)) throw InputError("levi_perp: cocharacter is not in the current sublattice");
  const RMat& g = datum_->gram();
  // Integer row: pairings of the basis vectors with lambda, cleared of denominators.
  RVec row = sublattice_e_.transpose() * (g * lambda);
  const ZVec zrow = primitive_direction(row);
  ZMat c(1, zrow.size());
  c.row(0) = zrow.transpose();
  const ZMat k = integer_kernel(c);

  GroupState s;
  s.datum_ = datum_;
  s.constraints_ = constraints_;
  s.constraints_.push_back(lambda);
  for (int r : live_roots_)
    if (datum_->pairing(datum_->roots_q()[static_cast<std::size_t>(r)], lambda) == 0) s.live_roots_.push_back(r);
  s.sublattice_ = sublattice_ * k;
  s.finish();
  return s;
}

int GroupState::parabolic_dimension(const RVec& lambda) const {
  int count = 0;
  for (int r : live_roots_)
    if (datum_->pairing(datum_->roots_q()[static_cast<std::size_t>(r)], lambda) >= 0) ++count;
  return count + lattice_rank();
}

std::vector<int> GroupState::live_orthogonal(const RVec& lambda) const {
  std::vector<int> out;
  for (int r : live_roots_)
    if (datum_->pairing(datum_->roots_q()[static_cast<std::size_t>(r)], lambda) == 0) out.push_back(r);
  return out;
}

IntPolynomial GroupState::flag_polynomial(const RVec& lambda) const {
  return poincare_quotient(*datum_, live_roots_, live_orthogonal(lambda));
}

}  // namespace nullstrata
