#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nullstrata/strata.hpp"

namespace nullstrata {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CountReport {
  std::string type;    // e.g. "A2"
  std::string module;  // e.g. "adjoint"
  ModuleCharacter character;
  IntPolynomial n;        // n_V(t)
  IntPolynomial n_prime;  // (n_V - 1) / (t - 1)
  std::vector<Stratum> strata;
  bool n_at_1_ok = false;
  bool degree_ok = false;
  bool nonneg_conjecture_holds = false;
};

/// n_V(t) for the full group of the character's root datum.
IntPolynomial nullcone_poly(StrataEngine& engine, const ModuleCharacter& ch);

/// (n_V - 1) / (t - 1) and whether every coefficient is nonnegative.
std::pair<IntPolynomial, bool> projective_poly(const IntPolynomial& n_v);

CountReport count_module(StrataEngine& engine, const ModuleCharacter& ch, std::string type, std::string module);

/// (a) 1 + sum of recomputed stratum polynomials equals n_V, (b) n_V(1) = 1,
/// (c) deg n_V equals the largest stratum dimension, (d) n_V = n_{V*}.
std::vector<CheckResult> verify_identities(const CountReport& report, StrataEngine& engine);

struct UnipotentPiece {
  RVec blade;
  ZVec lambda_coords;
  long k = 0;
  int dim = 0;
  IntPolynomial count;  // |X^w(G)^F| = |H^b(g)^F|
};

struct UnipotentReport {
  std::string type;
  IntPolynomial total;  // |G_uni^F|
  std::vector<UnipotentPiece> pieces;
  bool steinberg_ok = false;  // total == t^{dim G - rank}
};

/// Unipotent-variety piece counts of the group, read off an adjoint report.
/// Throws InputError when the report's module is not the adjoint module.
UnipotentReport group_case_counts(const CountReport& report);

}  // namespace nullstrata
