#pragma once

#include <string>
#include <vector>

#include "nullstrata/polynomial.hpp"
#include "nullstrata/rootsys.hpp"

namespace nullstrata {

/// The reductive group L^perp(lambda_1)...^perp(lambda_j) reached by the
/// stratification recursion: the roots orthogonal to every constraint and the
/// cocharacter sublattice Y cap lambda_1^perp cap ... cap lambda_j^perp.
class GroupState {
 public:
  static GroupState ambient(DatumPtr datum);

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  const std::vector<RVec>& constraints() const { return constraints_; }
  const std::vector<int>& live_roots() const { return live_roots_; }
  const std::vector<int>& live_simple() const { return live_simple_; }
  const std::vector<RVec>& live_simple_vectors() const { return live_simple_vectors_; }
  /// Basis of the sublattice: columns are coordinates in the basis of Y.
  const ZMat& sublattice() const { return sublattice_; }
  /// The same basis with columns in E.
  const RMat& sublattice_e() const { return sublattice_e_; }
  int lattice_rank() const { return static_cast<int>(sublattice_.cols()); }
  /// Levi type of the live roots, central torus filled in.
  const TypeSpec& levi_type() const { return levi_type_; }
  /// #live roots + lattice rank.
  int dimension() const { return static_cast<int>(live_roots_.size()) + lattice_rank(); }

  /// Coordinates of v (which must lie in the rational span of the sublattice).
  RVec lattice_coordinates(const RVec& v) const;
  bool in_lattice(const RVec& v) const;
  /// The primitive sublattice vector on the ray through v != 0, as a vector in E.
  RVec primitive_on_ray(const RVec& v) const;
  /// Dominant representative for the live Weyl group.
  RVec dominant(const RVec& v) const;

  GroupState levi_perp(const RVec& lambda) const;
  /// #{live alpha : (alpha, lambda) >= 0} + lattice rank.
  int parabolic_dimension(const RVec& lambda) const;
  /// Number of F_q points of the partial flag variety L / P_L(lambda), as a polynomial.
  IntPolynomial flag_polynomial(const RVec& lambda) const;
  std::vector<int> live_orthogonal(const RVec& lambda) const;

  /// Canonical key of the subspace spanned by the sublattice (the state is
  /// determined by it).
  const std::string& key() const { return key_; }

 private:
  void finish();

  DatumPtr datum_;
  std::vector<RVec> constraints_;
  std::vector<int> live_roots_;
  std::vector<int> live_simple_;
  std::vector<RVec> live_simple_vectors_;
  ZMat sublattice_;
  RMat sublattice_e_;
  RMat coord_map_;
  TypeSpec levi_type_;
  std::string key_;
};

}  // namespace nullstrata
