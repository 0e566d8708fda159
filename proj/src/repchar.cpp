#include "nullstrata/repchar.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace nullstrata {

std::vector<WeightEntry> canonicalize(std::vector<WeightEntry> weights) {
  std::map<RVec, long, RVecLess> merged;
  for (auto& w : weights) merged[w.weight] += w.mult;
  std::vector<WeightEntry> out;
  for (auto& [v, m] : merged) {
    if (m < 0) throw InputError("negative weight multiplicity");
    if (m > 0) out.push_back({v, m});
  }
  return out;
}

ModuleCharacter::ModuleCharacter(DatumPtr datum, std::vector<WeightEntry> weights)
    : datum_(std::move(datum)), weights_(canonicalize(std::move(weights))) {
  for (const auto& w : weights_)
    if (w.weight.size() != datum_->rank()) throw InputError("weight has the wrong number of coordinates");
}

long ModuleCharacter::dim() const {
  long d = 0;
  for (const auto& w : weights_) d += w.mult;
  return d;
}

bool ModuleCharacter::only_zero_weights() const {
  for (const auto& w : weights_)
    if (!is_zero(w.weight)) return false;
  return true;
}

std::vector<RVec> ModuleCharacter::nonzero_weights() const {
  std::vector<RVec> out;
  for (const auto& w : weights_)
    if (!is_zero(w.weight)) out.push_back(w.weight);
  return out;
}

bool operator==(const ModuleCharacter& a, const ModuleCharacter& b) {
  if (a.weights_.size() != b.weights_.size()) return false;
  if (a.datum_ != b.datum_ && (!a.datum_ || !b.datum_ || !(a.datum_->type() == b.datum_->type())))
    return false;
  for (std::size_t i = 0; i < a.weights_.size(); ++i)
    if (a.weights_[i].mult != b.weights_[i].mult || !equal(a.weights_[i].weight, b.weights_[i].weight)) return false;
  return true;
}

ModuleCharacter adjoint_character(const DatumPtr& datum) {
  std::vector<WeightEntry> w;
  for (const auto& r : datum->roots_q()) w.push_back({r, 1});
  w.push_back({RVec::Zero(datum->rank()), datum->rank()});
  return ModuleCharacter(datum, std::move(w));
}

ModuleCharacter dual_character(const ModuleCharacter& ch) {
  std::vector<WeightEntry> w;
  for (const auto& e : ch.weights()) w.push_back({RVec(-e.weight), e.mult});
  return ModuleCharacter(ch.datum(), std::move(w));
}

RVec weight_from_coordinates(const RootDatum& datum, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) > datum.rank()) throw InputError("too many weight coordinates");
  RVec c = RVec::Zero(datum.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) c[static_cast<Eigen::Index>(i)] = coords[i];
  return datum.from_character_coordinates(c);
}

bool is_dominant(const RootDatum& datum, const RVec& v) {
  for (int s : datum.simple_roots())
    if (datum.pairing(datum.roots_q()[static_cast<std::size_t>(s)], v) < 0) return false;
  return true;
}

bool is_integral_weight(const RootDatum& datum, const RVec& v) {
  const RVec c = datum.character_coordinates(v);
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (!is_integral(c[i])) return false;
  return true;
}

bool is_weyl_invariant(const ModuleCharacter& ch) {
  const auto& d = *ch.datum();
  for (int i = 0; i < d.semisimple_rank(); ++i) {
    std::vector<WeightEntry> moved;
    for (const auto& e : ch.weights()) moved.push_back({d.reflect(e.weight, i), e.mult});
    if (!(ModuleCharacter(ch.datum(), moved) == ch)) return false;
  }
  return true;
}

Integer weyl_dimension(const RootDatum& datum, const RVec& mu) {
  const RVec rho = datum.rho();
  const RVec shifted = mu + rho;
  Rational prod = 1;
  for (int i = 0; i < datum.positive_count(); ++i) {
    const RVec& a = datum.roots_q()[static_cast<std::size_t>(i)];
    prod *= datum.pairing(shifted, a) / datum.pairing(rho, a);
  }
  if (!is_integral(prod)) throw InternalError("Weyl dimension formula gave a non-integer");
  return num(prod);
}

namespace {

Rational depth(const RootDatum& datum, const RVec& diff) {
  Rational h = 0;
  for (int i = 0; i < datum.semisimple_rank(); ++i) h += diff[i];
  return h;
}

std::vector<RVec> weyl_orbit(const RootDatum& datum, const RVec& v) {
  std::map<RVec, bool, RVecLess> seen{{v, true}};
  std::deque<RVec> queue{v};
  while (!queue.empty()) {
    RVec cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < datum.semisimple_rank(); ++i) {
      RVec nxt = datum.reflect(cur, i);
      if (seen.emplace(nxt, true).second) queue.push_back(nxt);
    }
  }
  std::vector<RVec> out;
  for (auto& [w, _] : seen) out.push_back(w);
  return out;
}

}  // namespace

ModuleCharacter highest_weight_character(const DatumPtr& datum_ptr, const RVec& mu, const HighestWeightOptions& opts) {
  const RootDatum& datum = *datum_ptr;
  if (mu.size() != datum.rank()) throw InputError("highest weight has the wrong number of coordinates");
  if (!is_integral_weight(datum, mu)) throw InputError("highest weight is not integral for the character lattice");
  if (!is_dominant(datum, mu)) throw InputError("highest weight is not dominant");
  const Integer expected = weyl_dimension(datum, mu);
  if (expected > opts.dimension_bound) throw CapacityError("module dimension " + expected.str() + " exceeds bound");

  // Dominant weights below mu: closed under subtracting positive roots while
  // staying dominant (Stembridge).
  std::map<RVec, long, RVecLess> dominant{{mu, 0}};
  std::deque<RVec> queue{mu};
  while (!queue.empty()) {
    RVec cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < datum.positive_count(); ++i) {
      RVec nxt = cur - datum.roots_q()[static_cast<std::size_t>(i)];
      if (is_dominant(datum, nxt) && dominant.emplace(nxt, 0).second) queue.push_back(nxt);
    }
  }
  std::vector<RVec> order;
  for (auto& [w, _] : dominant) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [&](const RVec& a, const RVec& b) { return depth(datum, mu - a) < depth(datum, mu - b); });

  const RVec rho = datum.rho();
  const Rational top = datum.pairing(mu + rho, mu + rho);
  auto mult_of = [&](const RVec& v) -> long {
    const auto it = dominant.find(make_dominant(datum, v).vector);
    return it == dominant.end() ? 0 : it->second;
  };
  for (const auto& nu : order) {
    if (equal(nu, mu)) {
      dominant[nu] = 1;
      continue;
    }
    Rational sum = 0;
    for (int i = 0; i < datum.positive_count(); ++i) {
      const RVec& a = datum.roots_q()[static_cast<std::size_t>(i)];
      for (int j = 1;; ++j) {
        const RVec up = nu + a * Rational(j);
        const long m = mult_of(up);
        if (m == 0) break;
        sum += Rational(m) * datum.pairing(up, a);
      }
    }
    const Rational denom = top - datum.pairing(nu + rho, nu + rho);
    const Rational m = Rational(2) * sum / denom;
    if (!is_integral(m) || m < 0) throw InternalError("Freudenthal recursion produced a non-integral multiplicity");
    dominant[nu] = num(m).convert_to<long>();
  }

  std::vector<WeightEntry> weights;
  for (const auto& [nu, m] : dominant) {
    if (m == 0) continue;
    for (auto& w : weyl_orbit(datum, nu)) weights.push_back({w, m});
  }
  ModuleCharacter ch(datum_ptr, std::move(weights));
  if (Integer(ch.dim()) != expected)
    throw InternalError("Freudenthal character dimension disagrees with the Weyl dimension formula");
  return ch;
}

Rational weight_pairing(const RootDatum& datum, const RVec& chi, const RVec& lambda) {
  return datum.pairing(chi, lambda);
}

std::optional<Rational> m_value(const RootDatum& datum, const std::vector<RVec>& support, const RVec& lambda) {
  std::optional<Rational> best;
  for (const auto& chi : support) {
    const Rational p = datum.pairing(chi, lambda);
    if (!best || p < *best) best = p;
  }
  return best;
}

}  // namespace nullstrata
