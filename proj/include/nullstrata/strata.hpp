#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "nullstrata/geomopt.hpp"
#include "nullstrata/group_state.hpp"
#include "nullstrata/polynomial.hpp"
#include "nullstrata/repchar.hpp"

namespace nullstrata {

/// A Hesselink stratum H(lambda, k) of a module for the group of a state.
struct Stratum {
  RVec lambda;             // primitive dominant sublattice cocharacter, in E
  ZVec lambda_coords;      // the same in the basis of the ambient lattice Y
  long k = 0;
  RVec blade;              // lambda / k
  RVec mu;                 // k lambda / (lambda, lambda)
  Rational norm2;          // squared Hesselink norm k^2 / (lambda, lambda)
  long n = 0;              // dim V(lambda, k)
  long N = 0;              // sum_{i > k} dim V(lambda, i)
  int dim_P = 0;
  int dim_stratum = 0;
  TypeSpec levi;           // type of L^perp(lambda)
  IntPolynomial f;         // |L / P_L(lambda)| over F_q
  IntPolynomial sub_poly;  // nullcone count of V(lambda, k) under L^perp(lambda)
  IntPolynomial contribution;
};

/// Weights with (chi, lambda) == k, projected orthogonally to lambda. The
/// result lives over the state levi_perp(lambda).
ModuleCharacter graded_piece(const ModuleCharacter& ch, const RVec& lambda, long k);

/// Weights with (chi, lambda) >= k.
std::vector<WeightEntry> saturation(const ModuleCharacter& ch, const RVec& lambda, long k);

/// dim L - dim P(lambda) + n + N.
int stratum_dimension(const Stratum& s, const GroupState& state);

struct EngineOptions {
  CandidateOptions candidates;
  bool memo = true;
  int threads = 1;
  /// Skip (lambda, k) whose graded piece is already unstable for the torus
  /// T^lambda; the recursion would reject those as well.
  bool torus_prefilter = true;
};

/// Evaluates the stratification recursion. Holds the memo table of
/// sub-nullcone polynomials; safe to share between threads.
class StrataEngine {
 public:
  explicit StrataEngine(EngineOptions opts = {}) : opts_(std::move(opts)) {}

  /// Lambda(V): all (lambda, k) with L^perp(lambda)-semistable vectors in
  /// V(lambda, k), sorted by dimension (descending), lambda, then k.
  std::vector<Stratum> enumerate_strata(const GroupState& state, const ModuleCharacter& ch);

  /// n_V(t) = 1 + sum over strata of f t^N (t^n - n_{V(lambda,k)}).
  IntPolynomial nullcone_poly(const GroupState& state, const ModuleCharacter& ch);

  const EngineOptions& options() const { return opts_; }
  std::size_t memo_size() const;
  std::map<std::string, IntPolynomial> memo_snapshot() const;
  void memo_insert(const std::string& key, const IntPolynomial& p);

 private:
  std::vector<Stratum> strata_for_direction(const GroupState& state, const ModuleCharacter& ch, const RVec& lambda);
  static std::string memo_key(const GroupState& state, const ModuleCharacter& ch);

  EngineOptions opts_;
  mutable std::mutex mutex_;
  std::map<std::string, IntPolynomial> memo_;
};

/// f t^N (t^n - sub_poly)
IntPolynomial stratum_poly(const Stratum& s);

}  // namespace nullstrata
