#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "nullstrata/rootsys.hpp"

namespace nullstrata {

struct WeightEntry {
  RVec weight;  // in E, root coordinates
  long mult = 0;
};

/// Weight multiset of a module, stored sorted lexicographically by weight with
/// equal weights merged.
class ModuleCharacter {
 public:
  ModuleCharacter() = default;
  ModuleCharacter(DatumPtr datum, std::vector<WeightEntry> weights);

  const DatumPtr& datum() const { return datum_; }
  const std::vector<WeightEntry>& weights() const { return weights_; }
  long dim() const;
  bool only_zero_weights() const;
  std::vector<RVec> nonzero_weights() const;  // distinct

  friend bool operator==(const ModuleCharacter& a, const ModuleCharacter& b);

 private:
  DatumPtr datum_;
  std::vector<WeightEntry> weights_;
};

/// Merge equal weights, drop zero multiplicities, sort.
std::vector<WeightEntry> canonicalize(std::vector<WeightEntry> weights);

ModuleCharacter adjoint_character(const DatumPtr& datum);
ModuleCharacter dual_character(const ModuleCharacter& ch);

struct HighestWeightOptions {
  long dimension_bound = 100'000;
};

/// Character of the irreducible complex module with highest weight mu via
/// Freudenthal's formula. Checked against the Weyl dimension formula.
ModuleCharacter highest_weight_character(const DatumPtr& datum, const RVec& mu, const HighestWeightOptions& opts = {});

/// Weyl dimension formula prod_{alpha>0} (mu + rho, alpha) / (rho, alpha).
Integer weyl_dimension(const RootDatum& datum, const RVec& mu);

/// mu given by pairings with the cocharacter lattice basis (fundamental weight
/// coordinates for the semisimple part).
RVec weight_from_coordinates(const RootDatum& datum, const std::vector<Rational>& coords);

bool is_dominant(const RootDatum& datum, const RVec& v);
/// (v, y) is an integer for every y in the cocharacter lattice.
bool is_integral_weight(const RootDatum& datum, const RVec& v);

/// Simple reflections permute the weight multiset.
bool is_weyl_invariant(const ModuleCharacter& ch);

Rational weight_pairing(const RootDatum& datum, const RVec& chi, const RVec& lambda);

/// min over the support of (chi, lambda); nullopt stands for +infinity
/// (empty support, the zero vector).
std::optional<Rational> m_value(const RootDatum& datum, const std::vector<RVec>& support, const RVec& lambda);

}  // namespace nullstrata
