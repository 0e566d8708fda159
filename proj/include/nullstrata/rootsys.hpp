#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nullstrata/polynomial.hpp"
#include "nullstrata/scalar.hpp"

namespace nullstrata {

struct SimpleFactor {
  char family = 'A';  // one of A..G
  int rank = 1;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Product of simple types plus a central torus, e.g. "B2xA1+T1".
struct TypeSpec {
  std::vector<SimpleFactor> factors;
  int torus = 0;

  int semisimple_rank() const;
  int rank() const { return semisimple_rank() + torus; }
  std::string to_string() const;
  static TypeSpec parse(const std::string& text);
  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

/// Throws InputError for an illegal (family, rank) pair.
void validate(const SimpleFactor& f);

/// Symmetrized Cartan matrix of a simple type, short roots of squared length 2
/// (Bourbaki numbering).
MatrixX<Rational> simple_gram(const SimpleFactor& f);

/// Reflection degrees of the Weyl group; the product is |W|.
std::vector<int> reflection_degrees(const SimpleFactor& f);
std::vector<int> reflection_degrees(const TypeSpec& spec);

/// Number of roots of a simple type.
int root_count(const SimpleFactor& f);

enum class CocharacterLattice { SimplyConnected, Adjoint };

/// Root datum of a split reductive group. Vectors of the ambient space E live
/// in "root coordinates": the simple roots of each factor, followed by the
/// standard basis of the central torus block. Characters and cocharacters
/// share E through the W-invariant form `gram`.
class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> build(const TypeSpec& spec,
                                                CocharacterLattice lattice = CocharacterLattice::SimplyConnected);

  const TypeSpec& type() const { return spec_; }
  int rank() const { return static_cast<int>(gram_.rows()); }
  int semisimple_rank() const { return spec_.semisimple_rank(); }
  int dimension() const { return static_cast<int>(roots_.size()) + rank(); }
  CocharacterLattice lattice_kind() const { return lattice_; }

  const RMat& gram() const { return gram_; }
  /// All roots, positive ones first (ordered by height, then lexicographically),
  /// then their negatives in the same order.
  const std::vector<ZVec>& roots() const { return roots_; }
  const std::vector<RVec>& roots_q() const { return roots_q_; }
  int positive_count() const { return static_cast<int>(roots_.size()) / 2; }
  bool is_positive(int root) const { return root < positive_count(); }
  int negative_of(int root) const;
  int index_of(const ZVec& root) const;  // -1 when absent
  /// Indices of the simple roots, in coordinate order.
  const std::vector<int>& simple_roots() const { return simple_; }
  RVec coroot(int root) const;

  /// Basis of the cocharacter lattice Y as columns in E.
  const RMat& cochar_basis() const { return cochar_basis_; }
  /// Coordinates of a vector of Y_Q with respect to cochar_basis().
  RVec cochar_coordinates(const RVec& v) const { return cochar_inverse_ * v; }
  /// Pairings (v, y_i) with the lattice basis: coordinates in the dual (character) basis.
  RVec character_coordinates(const RVec& v) const { return cochar_basis_.transpose() * (gram_ * v); }
  /// Inverse of character_coordinates.
  RVec from_character_coordinates(const RVec& c) const { return char_from_coords_ * c; }

  Rational pairing(const RVec& a, const RVec& b) const { return pair(a, gram_, b); }

  /// Simple reflection s_i acting on E (i indexes simple_roots()).
  RVec reflect(const RVec& v, int simple_index) const;

  /// Half sum of positive roots.
  RVec rho() const;

 private:
  TypeSpec spec_;
  CocharacterLattice lattice_ = CocharacterLattice::SimplyConnected;
  RMat gram_;
  std::vector<ZVec> roots_;
  std::vector<RVec> roots_q_;
  std::vector<int> simple_;
  RMat cochar_basis_;
  RMat cochar_inverse_;
  RMat char_from_coords_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

RVec reflect(const RVec& v, const RVec& root, const RMat& gram);

struct DominantResult {
  RVec vector;
  std::vector<int> word;  // positions into the simple system, applied first to last
};

/// Dominant representative of v under the reflection group generated by the
/// given simple roots (the chamber where every simple root pairs >= 0).
DominantResult make_dominant(const RVec& v, const std::vector<RVec>& simple, const RMat& gram);
DominantResult make_dominant(const RootDatum& datum, const RVec& v);

/// Classification of a closed root subsystem (given by indices into the
/// datum's roots, closed under negation).
struct Subsystem {
  TypeSpec type;                // torus field is left 0
  std::vector<int> simple;      // indices of its simple roots (ambient-positive chamber)
  std::vector<int> component;   // component id of each simple root
};

Subsystem classify_subsystem(const RootDatum& datum, const std::vector<int>& roots);

/// Sum over W of t^{length}, via reflection degrees of the classified subsystem.
IntPolynomial weyl_poincare(const RootDatum& datum, const std::vector<int>& roots);

/// f = W(t) / W_L(t) for a reflection subgroup generated by `levi` inside `outer`.
IntPolynomial poincare_quotient(const RootDatum& datum, const std::vector<int>& outer,
                                const std::vector<int>& levi);
IntPolynomial poincare_quotient(const RootDatum& datum, const std::vector<int>& levi);

/// |W| by breadth-first search over group elements.
std::uint64_t weyl_order_bfs(const RootDatum& datum, std::uint64_t bound = 2'000'000);

/// Sum of t^{l(w)} over minimal length coset representatives of W / W_L, by
/// breadth-first search over W. `levi` must be the roots orthogonal to some
/// dominant cocharacter.
IntPolynomial coset_poincare_bruteforce(const RootDatum& datum, const std::vector<int>& levi,
                                        std::uint64_t bound = 2'000'000);

/// Roots orthogonal to lambda.
std::vector<int> orthogonal_roots(const RootDatum& datum, const RVec& lambda);

/// dim P(lambda) = #{alpha : (alpha, lambda) >= 0} + rank.
int parabolic_dimension(const RootDatum& datum, const RVec& lambda);

}  // namespace nullstrata
