#include "nullstrata/count.hpp"

#include <algorithm>

namespace nullstrata {

IntPolynomial nullcone_poly(StrataEngine& engine, const ModuleCharacter& ch) {
  return engine.nullcone_poly(GroupState::ambient(ch.datum()), ch);
}

std::pair<IntPolynomial, bool> projective_poly(const IntPolynomial& n_v) {
  const auto q = (n_v - IntPolynomial{1}).divide_exact(IntPolynomial{-1, 1});
  if (!q) throw InternalError("n_V - 1 is not divisible by t - 1");
  bool nonneg = true;
  for (const auto& c : q->coefficients()) nonneg = nonneg && c >= 0;
  return {*q, nonneg};
}

CountReport count_module(StrataEngine& engine, const ModuleCharacter& ch, std::string type, std::string module) {
  CountReport r;
  r.type = std::move(type);
  r.module = std::move(module);
  r.character = ch;
  const GroupState state = GroupState::ambient(ch.datum());
  r.strata = engine.enumerate_strata(state, ch);
  r.n = engine.nullcone_poly(state, ch);
  r.n_at_1_ok = r.n.evaluate(1) == 1;
  int max_dim = 0;
  for (const auto& s : r.strata) max_dim = std::max(max_dim, s.dim_stratum);
  r.degree_ok = r.n.degree() == max_dim;
  const auto [np, nonneg] = projective_poly(r.n);
  r.n_prime = np;
  r.nonneg_conjecture_holds = nonneg;
  return r;
}

std::vector<CheckResult> verify_identities(const CountReport& report, StrataEngine& engine) {
  std::vector<CheckResult> out;

  IntPolynomial sum{1};
  bool stored_ok = true;
  for (const auto& s : report.strata) {
    const IntPolynomial p = stratum_poly(s);
    stored_ok = stored_ok && p == s.contribution;
    sum += s.contribution;
  }
  out.push_back({"partition", sum == report.n && stored_ok,
                 "1 + sum of contributions = " + sum.to_string() + "; n_V = " + report.n.to_string()});

  const Integer at1 = report.n.evaluate(1);
  out.push_back({"value_at_1", at1 == 1, "n_V(1) = " + at1.str()});

  int max_dim = 0;
  for (const auto& s : report.strata) max_dim = std::max(max_dim, s.dim_stratum);
  out.push_back({"degree", report.n.degree() == max_dim,
                 "deg n_V = " + std::to_string(report.n.degree()) + "; max stratum dim = " + std::to_string(max_dim)});

  const IntPolynomial dual = nullcone_poly(engine, dual_character(report.character));
  out.push_back({"dual", dual == report.n, "n_{V*} = " + dual.to_string()});
  return out;
}

UnipotentReport group_case_counts(const CountReport& report) {
  const auto& datum = report.character.datum();
  if (!datum || !(report.character == adjoint_character(datum)))
    throw InputError("unipotent piece counts need the adjoint module");
  UnipotentReport u;
  u.type = report.type;
  u.total = report.n;
  for (const auto& s : report.strata) u.pieces.push_back({s.blade, s.lambda_coords, s.k, s.dim_stratum, s.contribution});
  u.steinberg_ok = u.total == IntPolynomial::monomial(datum->dimension() - datum->rank());
  return u;
}

}  // namespace nullstrata
