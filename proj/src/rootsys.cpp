#include "nullstrata/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "nullstrata/linalg.hpp"

namespace nullstrata {

// --- TypeSpec ----------------------------------------------------------------

int TypeSpec::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string TypeSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << 'x';
    os << factors[i].family << factors[i].rank;
  }
  if (torus > 0) {
    if (!factors.empty()) os << '+';
    os << 'T' << torus;
  }
  if (factors.empty() && torus == 0) os << "T0";
  return os.str();
}

namespace {

std::pair<char, int> parse_token(const std::string& tok, const std::string& whole) {
  if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
    throw InputError("malformed type token '" + tok + "' in '" + whole + "'");
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw InputError("malformed type token '" + tok + "' in '" + whole + "'");
  return {fam, std::stoi(tok.substr(1))};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TypeSpec TypeSpec::parse(const std::string& text) {
  TypeSpec spec;
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  if (body.empty()) throw InputError("empty type specification");
  for (const auto& part : split(body, '+')) {
    for (const auto& tok : split(part, 'x')) {
      const auto [fam, rank] = parse_token(tok, text);
      if (fam == 'T') {
        spec.torus += rank;
        continue;
      }
      SimpleFactor f{fam, rank};
      validate(f);
      spec.factors.push_back(f);
    }
  }
  if (spec.rank() == 0) throw InputError("type '" + text + "' has rank 0");
  return spec;
}

void validate(const SimpleFactor& f) {
  const int n = f.rank;
  bool ok = false;
  switch (f.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) throw InputError(std::string("illegal simple type ") + f.family + std::to_string(n));
}

MatrixX<Rational> simple_gram(const SimpleFactor& f) {
  validate(f);
  const int n = f.rank;
  RMat g = RMat::Zero(n, n);
  auto link = [&](int i, int j, long v) {  // 1-based Bourbaki labels
    g(i - 1, j - 1) = v;
    g(j - 1, i - 1) = v;
  };
  switch (f.family) {
    case 'A':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 4;
      g(n - 1, n - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
      g(n - 1, n - 1) = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g(0, 0) = 4;
      g(1, 1) = 4;
      g(2, 2) = 2;
      g(3, 3) = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':
      g(0, 0) = 2;
      g(1, 1) = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

std::vector<int> reflection_degrees(const SimpleFactor& f) {
  validate(f);
  const int n = f.rank;
  std::vector<int> d;
  switch (f.family) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
  }
  return d;
}

std::vector<int> reflection_degrees(const TypeSpec& spec) {
  std::vector<int> out;
  for (const auto& f : spec.factors) {
    const auto d = reflection_degrees(f);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

int root_count(const SimpleFactor& f) {
  validate(f);
  const int n = f.rank;
  switch (f.family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

// --- RootDatum ---------------------------------------------------------------

namespace {

using LMat = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using LVec = Eigen::Matrix<long, Eigen::Dynamic, 1>;

LMat integer_gram(const RMat& g) {
  LMat out(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (!is_integral(g(i, j))) throw InternalError("non-integral gram entry");
      out(i, j) = num(g(i, j)).convert_to<long>();
    }
  return out;
}

ZVec to_z(const LVec& v) {
  ZVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::build(const TypeSpec& spec, CocharacterLattice lattice) {
  auto d = std::make_shared<RootDatum>();
  d->spec_ = spec;
  d->lattice_ = lattice;
  const int ss = spec.semisimple_rank();
  const int r = spec.rank();
  if (r == 0) throw InputError("root datum of rank 0");

  d->gram_ = RMat::Zero(r, r);
  int offset = 0;
  for (const auto& f : spec.factors) {
    d->gram_.block(offset, offset, f.rank, f.rank) = simple_gram(f);
    offset += f.rank;
  }
  for (int i = ss; i < r; ++i) d->gram_(i, i) = 1;

  // Positive roots by closure of the simple roots under simple reflections.
  const LMat g = integer_gram(d->gram_);
  std::set<std::vector<long>> seen;
  std::vector<LVec> positive;
  std::deque<LVec> queue;
  for (int i = 0; i < ss; ++i) {
    LVec e = LVec::Zero(r);
    e[i] = 1;
    queue.push_back(e);
    seen.insert(std::vector<long>(e.data(), e.data() + r));
  }
  while (!queue.empty()) {
    LVec v = queue.front();
    queue.pop_front();
    positive.push_back(v);
    for (int i = 0; i < ss; ++i) {
      const long vi = (g.row(i) * v)(0);
      const long c = 2 * vi / g(i, i);
      LVec w = v;
      w[i] -= c;
      bool pos = true;
      for (int j = 0; j < r; ++j) pos = pos && w[j] >= 0;
      if (!pos || w.isZero()) continue;
      std::vector<long> key(w.data(), w.data() + r);
      if (seen.insert(key).second) queue.push_back(w);
    }
  }
  std::sort(positive.begin(), positive.end(), [](const LVec& a, const LVec& b) {
    const long ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });
  for (const auto& v : positive) d->roots_.push_back(to_z(v));
  for (const auto& v : positive) d->roots_.push_back(to_z(LVec(-v)));
  for (const auto& v : d->roots_) d->roots_q_.push_back(to_rational(v));
  for (int i = 0; i < ss; ++i) {
    ZVec e = ZVec::Zero(r);
    e[i] = 1;
    d->simple_.push_back(d->index_of(e));
  }

  d->cochar_basis_ = RMat::Identity(r, r);
  if (lattice == CocharacterLattice::SimplyConnected) {
    for (int i = 0; i < ss; ++i) d->cochar_basis_(i, i) = Rational(2) / d->gram_(i, i);
  } else if (ss > 0) {
    const auto inv = inverse<Rational>(RMat(d->gram_.topLeftCorner(ss, ss)));
    d->cochar_basis_.topLeftCorner(ss, ss) = *inv;
  }
  d->cochar_inverse_ = *inverse<Rational>(d->cochar_basis_);
  d->char_from_coords_ = *inverse<Rational>(RMat(d->cochar_basis_.transpose() * d->gram_));
  return d;
}

int RootDatum::negative_of(int root) const {
  const int p = positive_count();
  return root < p ? root + p : root - p;
}

int RootDatum::index_of(const ZVec& root) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (equal(roots_[i], root)) return static_cast<int>(i);
  return -1;
}

RVec RootDatum::coroot(int root) const {
  const RVec& a = roots_q_[static_cast<std::size_t>(root)];
  return a * (Rational(2) / pairing(a, a));
}

RVec reflect(const RVec& v, const RVec& root, const RMat& gram) {
  const Rational c = Rational(2) * pair(v, gram, root) / pair(root, gram, root);
  return v - root * c;
}

RVec RootDatum::reflect(const RVec& v, int simple_index) const {
  return nullstrata::reflect(v, roots_q_[static_cast<std::size_t>(simple_[static_cast<std::size_t>(simple_index)])],
                             gram_);
}

RVec RootDatum::rho() const {
  RVec s = RVec::Zero(rank());
  for (int i = 0; i < positive_count(); ++i) s += roots_q_[static_cast<std::size_t>(i)];
  return s * Rational(1, 2);
}

DominantResult make_dominant(const RVec& v, const std::vector<RVec>& simple, const RMat& gram) {
  DominantResult out{v, {}};
  for (;;) {
    int bad = -1;
    for (std::size_t i = 0; i < simple.size(); ++i) {
      if (pair(out.vector, gram, simple[i]) < 0) {
        bad = static_cast<int>(i);
        break;
      }
    }
    if (bad < 0) return out;
    out.vector = reflect(out.vector, simple[static_cast<std::size_t>(bad)], gram);
    out.word.push_back(bad);
  }
}

DominantResult make_dominant(const RootDatum& datum, const RVec& v) {
  std::vector<RVec> simple;
  for (int s : datum.simple_roots()) simple.push_back(datum.roots_q()[static_cast<std::size_t>(s)]);
  return make_dominant(v, simple, datum.gram());
}

// --- Subsystems --------------------------------------------------------------

namespace {

SimpleFactor identify_component(const std::vector<std::vector<long>>& cartan, const std::vector<Rational>& lengths,
                                const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {'A', 1};
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  int max_bond = 0;
  std::vector<std::pair<int, int>> multiple_edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const long bond = cartan[static_cast<std::size_t>(nodes[static_cast<std::size_t>(a)])]
                              [static_cast<std::size_t>(nodes[static_cast<std::size_t>(b)])] *
                        cartan[static_cast<std::size_t>(nodes[static_cast<std::size_t>(b)])]
                              [static_cast<std::size_t>(nodes[static_cast<std::size_t>(a)])];
      if (bond == 0) continue;
      ++degree[static_cast<std::size_t>(a)];
      ++degree[static_cast<std::size_t>(b)];
      max_bond = std::max<int>(max_bond, static_cast<int>(bond));
      if (bond > 1) multiple_edges.emplace_back(a, b);
    }
  if (max_bond >= 4) throw InternalError("subsystem Cartan matrix is not of finite type");
  if (max_bond == 3) return {'G', 2};
  if (max_bond == 2) {
    if (multiple_edges.size() != 1) throw InternalError("subsystem Cartan matrix is not of finite type");
    const auto [a, b] = multiple_edges.front();
    if (n == 4 && degree[static_cast<std::size_t>(a)] == 2 && degree[static_cast<std::size_t>(b)] == 2)
      return {'F', 4};
    if (n == 2) return {'B', 2};
    Rational shortest = lengths[static_cast<std::size_t>(nodes[0])];
    for (int v : nodes) shortest = std::min(shortest, lengths[static_cast<std::size_t>(v)]);
    int short_count = 0;
    for (int v : nodes) short_count += lengths[static_cast<std::size_t>(v)] == shortest ? 1 : 0;
    return {short_count == 1 ? 'B' : 'C', n};
  }
  // Simply laced.
  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (degree[static_cast<std::size_t>(a)] >= 3) branch = a;
  if (branch < 0) return {'A', n};
  // Arm lengths from the branch node.
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    const long e = cartan[static_cast<std::size_t>(nodes[static_cast<std::size_t>(branch)])]
                         [static_cast<std::size_t>(nodes[static_cast<std::size_t>(start)])];
    if (start == branch || e == 0) continue;
    int len = 1, prev = branch, cur = start;
    for (;;) {
      int next = -1;
      for (int c = 0; c < n; ++c) {
        if (c == prev || c == cur) continue;
        if (cartan[static_cast<std::size_t>(nodes[static_cast<std::size_t>(cur)])]
                  [static_cast<std::size_t>(nodes[static_cast<std::size_t>(c)])] != 0)
          next = c;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw InternalError("subsystem Cartan matrix is not of finite type");
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  throw InternalError("subsystem Cartan matrix is not of finite type");
}

}  // namespace

Subsystem classify_subsystem(const RootDatum& datum, const std::vector<int>& roots) {
  Subsystem out;
  std::vector<int> pos;
  std::set<int> members(roots.begin(), roots.end());
  for (int r : roots)
    if (datum.is_positive(r)) pos.push_back(r);
  std::sort(pos.begin(), pos.end());
  std::set<int> decomposable;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      const ZVec s = datum.roots()[static_cast<std::size_t>(pos[i])] + datum.roots()[static_cast<std::size_t>(pos[j])];
      const int idx = datum.index_of(s);
      if (idx >= 0 && members.count(idx)) decomposable.insert(idx);
    }
  for (int p : pos)
    if (!decomposable.count(p)) out.simple.push_back(p);

  const std::size_t n = out.simple.size();
  std::vector<std::vector<long>> cartan(n, std::vector<long>(n, 0));
  std::vector<Rational> lengths(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RVec& ai = datum.roots_q()[static_cast<std::size_t>(out.simple[i])];
    lengths[i] = datum.pairing(ai, ai);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = Rational(2) *
                         datum.pairing(datum.roots_q()[static_cast<std::size_t>(out.simple[i])],
                                       datum.roots_q()[static_cast<std::size_t>(out.simple[j])]) /
                         lengths[j];
      if (!is_integral(c)) throw InternalError("non-integral Cartan entry in subsystem");
      cartan[i][j] = num(c).convert_to<long>();
    }

  // Connected components.
  out.component.assign(n, -1);
  int comps = 0;
  std::vector<SimpleFactor> factors;
  for (std::size_t s = 0; s < n; ++s) {
    if (out.component[s] >= 0) continue;
    std::vector<int> nodes;
    std::deque<std::size_t> q{s};
    out.component[s] = comps;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop_front();
      nodes.push_back(static_cast<int>(v));
      for (std::size_t w = 0; w < n; ++w)
        if (out.component[w] < 0 && cartan[v][w] != 0) {
          out.component[w] = comps;
          q.push_back(w);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    factors.push_back(identify_component(cartan, lengths, nodes));
    ++comps;
  }
  int expected = 0;
  for (const auto& f : factors) expected += root_count(f);
  if (expected != static_cast<int>(roots.size()))
    throw InternalError("subsystem root count does not match its Cartan type");
  out.type.factors = factors;
  return out;
}

IntPolynomial weyl_poincare(const RootDatum& datum, const std::vector<int>& roots) {
  IntPolynomial p{1};
  if (roots.empty()) return p;
  for (int d : reflection_degrees(classify_subsystem(datum, roots).type)) p *= IntPolynomial::q_integer(d);
  return p;
}

IntPolynomial poincare_quotient(const RootDatum& datum, const std::vector<int>& outer, const std::vector<int>& levi) {
  const auto q = weyl_poincare(datum, outer).divide_exact(weyl_poincare(datum, levi));
  if (!q) throw InternalError("Poincare quotient is not a polynomial: misclassified subsystem");
  return *q;
}

IntPolynomial poincare_quotient(const RootDatum& datum, const std::vector<int>& levi) {
  std::vector<int> all(datum.roots().size());
  std::iota(all.begin(), all.end(), 0);
  return poincare_quotient(datum, all, levi);
}

// --- Weyl group enumeration --------------------------------------------------

namespace {

struct WeylBfs {
  std::vector<LMat> generators;
  LVec regular;

  explicit WeylBfs(const RootDatum& datum) {
    const int r = datum.rank();
    const LMat g = integer_gram(datum.gram());
    for (int i = 0; i < datum.semisimple_rank(); ++i) {
      // s_i(v) = v - <v, alpha_i^vee> alpha_i
      LMat s = LMat::Identity(r, r);
      for (int j = 0; j < r; ++j) s(i, j) -= 2 * g(i, j) / g(i, i);
      generators.push_back(s);
    }
    regular = LVec::Zero(r);
    for (int i = 0; i < datum.positive_count(); ++i)
      for (int j = 0; j < r; ++j) regular[j] += datum.roots()[static_cast<std::size_t>(i)][j].convert_to<long>();
  }

  // Calls visit(w, length) once per group element in order of length.
  template <typename Visit>
  std::uint64_t run(std::uint64_t bound, Visit visit) const {
    const Eigen::Index r = regular.size();
    std::set<std::vector<long>> seen;
    std::vector<LMat> level{LMat::Identity(r, r)};
    seen.insert(std::vector<long>(regular.data(), regular.data() + r));
    std::uint64_t count = 0;
    int length = 0;
    while (!level.empty()) {
      std::vector<LMat> next;
      for (const auto& w : level) {
        visit(w, length);
        if (++count > bound) throw CapacityError("Weyl group larger than the configured bound");
        for (const auto& s : generators) {
          LMat ws = w * s;
          LVec img = ws * regular;
          if (seen.insert(std::vector<long>(img.data(), img.data() + r)).second) next.push_back(std::move(ws));
        }
      }
      level = std::move(next);
      ++length;
    }
    return count;
  }
};

}  // namespace

std::uint64_t weyl_order_bfs(const RootDatum& datum, std::uint64_t bound) {
  return WeylBfs(datum).run(bound, [](const LMat&, int) {});
}

IntPolynomial coset_poincare_bruteforce(const RootDatum& datum, const std::vector<int>& levi, std::uint64_t bound) {
  std::vector<LVec> levi_simple;
  if (!levi.empty()) {
    for (int s : classify_subsystem(datum, levi).simple) {
      LVec v(datum.rank());
      for (int j = 0; j < datum.rank(); ++j) v[j] = datum.roots()[static_cast<std::size_t>(s)][j].convert_to<long>();
      levi_simple.push_back(v);
    }
  }
  std::vector<Integer> coeffs;
  WeylBfs(datum).run(bound, [&](const LMat& w, int length) {
    for (const auto& b : levi_simple) {
      const LVec img = w * b;
      if ((img.array() < 0).any()) return;  // w(beta) negative: not minimal in its coset
    }
    if (static_cast<int>(coeffs.size()) <= length) coeffs.resize(static_cast<std::size_t>(length) + 1, Integer(0));
    coeffs[static_cast<std::size_t>(length)] += 1;
  });
  return IntPolynomial(std::move(coeffs));
}

std::vector<int> orthogonal_roots(const RootDatum& datum, const RVec& lambda) {
  std::vector<int> out;
  for (std::size_t i = 0; i < datum.roots().size(); ++i)
    if (datum.pairing(datum.roots_q()[i], lambda) == 0) out.push_back(static_cast<int>(i));
  return out;
}

int parabolic_dimension(const RootDatum& datum, const RVec& lambda) {
  int count = 0;
  for (const auto& a : datum.roots_q())
    if (datum.pairing(a, lambda) >= 0) ++count;
  return count + datum.rank();
}

}  // namespace nullstrata
