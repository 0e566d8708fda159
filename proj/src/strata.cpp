#include "nullstrata/strata.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

namespace nullstrata {

namespace {

thread_local int recursion_depth = 0;

struct DepthGuard {
  DepthGuard() { ++recursion_depth; }
  ~DepthGuard() { --recursion_depth; }
};

long integral_pairing(const RootDatum& d, const RVec& chi, const RVec& lambda) {
  const Rational p = d.pairing(chi, lambda);
  if (!is_integral(p)) throw InternalError("weight pairs non-integrally with a lattice cocharacter");
  return num(p).convert_to<long>();
}

}  // namespace

ModuleCharacter graded_piece(const ModuleCharacter& ch, const RVec& lambda, long k) {
  const auto& d = *ch.datum();
  std::vector<WeightEntry> out;
  for (const auto& w : ch.weights())
    if (d.pairing(w.weight, lambda) == k) out.push_back({project_orthogonal(w.weight, lambda, d.gram()), w.mult});
  return ModuleCharacter(ch.datum(), std::move(out));
}

std::vector<WeightEntry> saturation(const ModuleCharacter& ch, const RVec& lambda, long k) {
  const auto& d = *ch.datum();
  std::vector<WeightEntry> out;
  for (const auto& w : ch.weights())
    if (d.pairing(w.weight, lambda) >= k) out.push_back(w);
  return out;
}

int stratum_dimension(const Stratum& s, const GroupState& state) {
  return state.dimension() - state.parabolic_dimension(s.lambda) + static_cast<int>(s.n + s.N);
}

IntPolynomial stratum_poly(const Stratum& s) {
  return s.f * (IntPolynomial::monomial(static_cast<int>(s.n)) - s.sub_poly).shifted(static_cast<int>(s.N));
}

std::string StrataEngine::memo_key(const GroupState& state, const ModuleCharacter& ch) {
  std::ostringstream os;
  os << state.datum().type().to_string() << '/' << (state.datum().lattice_kind() == CocharacterLattice::Adjoint ? "ad" : "sc")
     << '|' << state.key() << '|';
  for (const auto& w : ch.weights()) os << vec_key(w.weight) << ':' << w.mult << ';';
  return os.str();
}

std::size_t StrataEngine::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

std::map<std::string, IntPolynomial> StrataEngine::memo_snapshot() const {
  std::lock_guard lock(mutex_);
  return memo_;
}

void StrataEngine::memo_insert(const std::string& key, const IntPolynomial& p) {
  std::lock_guard lock(mutex_);
  memo_[key] = p;
}

std::vector<Stratum> StrataEngine::strata_for_direction(const GroupState& state, const ModuleCharacter& ch,
                                                        const RVec& lambda) {
  const auto& d = state.datum();
  std::map<long, long> dims;  // pairing -> total multiplicity
  for (const auto& w : ch.weights()) dims[integral_pairing(d, w.weight, lambda)] += w.mult;

  std::vector<Stratum> out;
  std::optional<GroupState> sub;
  for (const auto& [k, n] : dims) {
    if (k < 1) continue;
    const ModuleCharacter piece = graded_piece(ch, lambda, k);
    if (opts_.torus_prefilter) {
      std::vector<RVec> pts;
      for (const auto& w : piece.weights()) pts.push_back(w.weight);
      if (!min_norm_point(pts, d.gram()).is_zero) continue;
    }
    if (!sub) sub = state.levi_perp(lambda);
    IntPolynomial sub_poly = nullcone_poly(*sub, piece);
    if (sub_poly.degree() >= n) continue;

    Stratum s;
    s.lambda = lambda;
    const RVec yc = d.cochar_coordinates(lambda);
    s.lambda_coords.resize(yc.size());
    for (Eigen::Index i = 0; i < yc.size(); ++i) s.lambda_coords[i] = num(yc[i]);
    s.k = k;
    const Rational ll = d.pairing(lambda, lambda);
    s.blade = lambda / Rational(k);
    s.mu = lambda * (Rational(k) / ll);
    s.norm2 = Rational(k * k) / ll;
    s.n = n;
    long above = 0;
    for (const auto& [i, m] : dims)
      if (i > k) above += m;
    s.N = above;
    s.dim_P = state.parabolic_dimension(lambda);
    s.dim_stratum = stratum_dimension(s, state);
    s.levi = sub->levi_type();
    s.f = state.flag_polynomial(lambda);
    s.sub_poly = std::move(sub_poly);
    s.contribution = stratum_poly(s);
    if (s.contribution.degree() != s.dim_stratum)
      throw InternalError("stratum count polynomial degree differs from the stratum dimension");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Stratum> StrataEngine::enumerate_strata(const GroupState& state, const ModuleCharacter& ch) {
  if (state.lattice_rank() == 0 || ch.only_zero_weights()) return {};
  DepthGuard guard;
  const std::vector<RVec> cands = candidate_directions(ch, state, opts_.candidates);

  std::vector<Stratum> all;
  const int threads = std::max(1, opts_.threads);
  if (threads > 1 && recursion_depth == 1 && cands.size() > 1) {
    std::vector<std::future<std::vector<Stratum>>> jobs;
    for (int t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        DepthGuard inner;
        std::vector<Stratum> part;
        for (std::size_t i = static_cast<std::size_t>(t); i < cands.size(); i += static_cast<std::size_t>(threads)) {
          auto s = strata_for_direction(state, ch, cands[i]);
          part.insert(part.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
        }
        return part;
      }));
    }
    for (auto& j : jobs) {
      auto part = j.get();
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } else {
    for (const auto& lambda : cands) {
      auto s = strata_for_direction(state, ch, lambda);
      all.insert(all.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    }
  }

  std::sort(all.begin(), all.end(), [](const Stratum& a, const Stratum& b) {
    if (a.dim_stratum != b.dim_stratum) return a.dim_stratum > b.dim_stratum;
    if (!equal(a.lambda_coords, b.lambda_coords)) return lex_less(a.lambda_coords, b.lambda_coords);
    return a.k < b.k;
  });
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (equal(all[i].blade, all[j].blade)) throw InternalError("two strata share a blade label");
  return all;
}

IntPolynomial StrataEngine::nullcone_poly(const GroupState& state, const ModuleCharacter& ch) {
  if (state.lattice_rank() == 0 || ch.only_zero_weights()) return IntPolynomial{1};
  std::string key;
  if (opts_.memo) {
    key = memo_key(state, ch);
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  IntPolynomial total{1};
  for (const auto& s : enumerate_strata(state, ch)) total += s.contribution;
  if (total.evaluate(1) != 1) throw InternalError("nullcone polynomial does not take the value 1 at t = 1");
  if (opts_.memo) {
    std::lock_guard lock(mutex_);
    memo_.emplace(key, total);
  }
  return total;
}

}  // namespace nullstrata
