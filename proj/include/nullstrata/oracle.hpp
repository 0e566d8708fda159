#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nullstrata/repchar.hpp"

namespace nullstrata {

/// F_q with elements encoded as integers 0..q-1 (base-p digits are the
/// coefficients of a polynomial in x). Non-prime fields use
///   F_4 = F_2[x]/(x^2 + x + 1),  F_8 = F_2[x]/(x^3 + x + 1),
///   F_9 = F_3[x]/(x^2 + 1),      F_16 = F_2[x]/(x^4 + x + 1).
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;

 private:
  int q_, p_;
  std::vector<int> add_, mul_, neg_, inv_;
};

struct FFCount {
  int q = 0;
  Integer total = 0;
  std::map<std::string, Integer> by_class;
};

struct OracleLimits {
  std::uint64_t max_elements = 50'000'000;
};

/// Nilpotent trace-zero n x n matrices over F_q, by Jordan type ("[2,1]").
FFCount ff_nilpotent_count(int n, int q, const OracleLimits& limits = {});

/// Binary forms of degree d over F_q in the SL_2 nullcone: some linear factor
/// over the algebraic closure has multiplicity > d/2. Classes "zero" and
/// "mult=<m>" (the multiplicity of that factor).
FFCount ff_binary_form_count(int d, int q, const OracleLimits& limits = {});

/// Vectors of the torus module with the given weights (with multiplicities)
/// that are torus-unstable: 0 is not in the convex hull of their support.
/// Classes are support patterns (the set of weights present).
FFCount ff_torus_count(const std::vector<WeightEntry>& weights, const RMat& gram, int q);

/// 0 in conv(points), decided by enumerating affinely independent subsets of
/// size <= dim + 1 (Caratheodory).
bool origin_in_hull_bruteforce(const std::vector<RVec>& points, const RMat& gram);

struct JordanLabel {
  ZVec lambda;  // simple-coroot coordinates in type A_{n-1}
  long k = 0;
};

/// Stratum label of the nilpotent orbit with Jordan type `partition` in
/// sl_n: h / 2 = lambda / k for the sl_2 neutral element h.
JordanLabel jordan_to_stratum(std::vector<int> partition);

std::string partition_label(const std::vector<int>& partition);

}  // namespace nullstrata
