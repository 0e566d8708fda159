#pragma once

#include <initializer_list>
#include <random>
#include <string>

#include "nullstrata/count.hpp"
#include "nullstrata/oracle.hpp"

namespace testing {

using namespace nullstrata;

inline DatumPtr datum(const std::string& type, CocharacterLattice lattice = CocharacterLattice::SimplyConnected) {
  return RootDatum::build(TypeSpec::parse(type), lattice);
}

inline RVec rvec(std::initializer_list<Rational> xs) {
  RVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline ZVec zvec(std::initializer_list<long> xs) {
  ZVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

inline IntPolynomial poly(std::initializer_list<long> low_first) { return IntPolynomial(low_first); }

inline IntPolynomial t_pow(int d) { return IntPolynomial::monomial(d, 1); }

// Highest weight module with fundamental-weight coordinates.
inline ModuleCharacter hw(const DatumPtr& d, std::initializer_list<long> coords) {
  std::vector<Rational> c;
  for (long x : coords) c.emplace_back(x);
  return highest_weight_character(d, weight_from_coordinates(*d, c));
}

inline const char* const kCritTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

}  // namespace testing
