#include "nullstrata/oracle.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "nullstrata/geomopt.hpp"

namespace nullstrata {

namespace {

struct FieldShape {
  int p;
  int e;
  std::vector<int> modulus;  // monic, low degree first, length e + 1
};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldShape shape_of(int q) {
  if (is_prime(q) && q < 256) return {q, 1, {0, 1}};
  switch (q) {
    case 4: return {2, 2, {1, 1, 1}};
    case 8: return {2, 3, {1, 1, 0, 1}};
    case 9: return {3, 2, {1, 0, 1}};
    case 16: return {2, 4, {1, 1, 0, 0, 1}};
    default: throw InputError("unsupported field size q = " + std::to_string(q));
  }
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    d[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  const FieldShape s = shape_of(q);
  p_ = s.p;
  const auto qs = static_cast<std::size_t>(q);
  add_.resize(qs * qs);
  mul_.resize(qs * qs);
  neg_.resize(qs);
  inv_.assign(qs, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, s.p, s.e);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, s.p, s.e);
      std::vector<int> sum(static_cast<std::size_t>(s.e));
      for (int i = 0; i < s.e; ++i)
        sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % s.p;
      add_[static_cast<std::size_t>(a * q + b)] = undigits(sum, s.p);
      if (s.e == 1) {
        mul_[static_cast<std::size_t>(a * q + b)] = (a * b) % q;
        continue;
      }
      std::vector<int> prod(static_cast<std::size_t>(2 * s.e - 1), 0);
      for (int i = 0; i < s.e; ++i)
        for (int j = 0; j < s.e; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
              s.p;
      for (int deg = 2 * s.e - 2; deg >= s.e; --deg) {
        const int c = prod[static_cast<std::size_t>(deg)];
        if (c == 0) continue;
        for (int i = 0; i <= s.e; ++i) {
          auto& slot = prod[static_cast<std::size_t>(deg - s.e + i)];
          slot = ((slot - c * s.modulus[static_cast<std::size_t>(i)]) % s.p + s.p) % s.p;
        }
      }
      prod.resize(static_cast<std::size_t>(s.e));
      mul_[static_cast<std::size_t>(a * q + b)] = undigits(prod, s.p);
    }
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
      if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
    }
  for (int a = 1; a < q; ++a)
    if (inv_[static_cast<std::size_t>(a)] == 0) throw InternalError("field tables for q = " + std::to_string(q) + " are not a field");
}

int FiniteField::inv(int a) const {
  if (a == 0) throw InputError("inverse of zero");
  return inv_[static_cast<std::size_t>(a)];
}

std::string partition_label(const std::vector<int>& partition) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < partition.size(); ++i) os << (i ? "," : "") << partition[i];
  os << ']';
  return os.str();
}

namespace {

using Mat = std::vector<int>;  // row-major n x n

Mat multiply(const FiniteField& f, const Mat& a, const Mat& b, int n) {
  Mat c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[static_cast<std::size_t>(i * n + k)];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& slot = c[static_cast<std::size_t>(i * n + j)];
        slot = f.add(slot, f.mul(aik, b[static_cast<std::size_t>(k * n + j)]));
      }
    }
  return c;
}

int rank_of(const FiniteField& f, Mat m, int n) {
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = r;
    while (p < n && m[static_cast<std::size_t>(p * n + c)] == 0) ++p;
    if (p == n) continue;
    for (int j = 0; j < n; ++j) std::swap(m[static_cast<std::size_t>(p * n + j)], m[static_cast<std::size_t>(r * n + j)]);
    const int inv = f.inv(m[static_cast<std::size_t>(r * n + c)]);
    for (int i = r + 1; i < n; ++i) {
      const int factor = f.mul(m[static_cast<std::size_t>(i * n + c)], inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j) {
        auto& slot = m[static_cast<std::size_t>(i * n + j)];
        slot = f.sub(slot, f.mul(factor, m[static_cast<std::size_t>(r * n + j)]));
      }
    }
    ++r;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t b, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

FFCount ff_nilpotent_count(int n, int q, const OracleLimits& limits) {
  if (n < 2 || n > 4) throw InputError("ff_nilpotent_count supports 2 <= n <= 4");
  const FiniteField f(q);
  const int free = n * n - 1;
  if (ipow(static_cast<std::uint64_t>(q), free, limits.max_elements) > limits.max_elements)
    throw CapacityError("sl_" + std::to_string(n) + "(F_" + std::to_string(q) + ") is too large to enumerate");

  FFCount out;
  out.q = q;
  std::vector<int> entries(static_cast<std::size_t>(free), 0);
  const int last = n * n - 1;
  Mat a(static_cast<std::size_t>(n * n), 0);
  for (;;) {
    // Fill the matrix; the last diagonal entry makes the trace vanish.
    int trace = 0;
    for (int i = 0; i < free; ++i) a[static_cast<std::size_t>(i)] = entries[static_cast<std::size_t>(i)];
    for (int i = 0; i < n - 1; ++i) trace = f.add(trace, a[static_cast<std::size_t>(i * n + i)]);
    a[static_cast<std::size_t>(last)] = f.neg(trace);

    std::vector<Mat> powers{a};
    for (int i = 1; i < n; ++i) powers.push_back(multiply(f, powers.back(), a, n));
    const bool nilpotent = std::all_of(powers.back().begin(), powers.back().end(), [](int x) { return x == 0; });
    if (nilpotent) {
      std::vector<int> ranks{n};
      for (int i = 0; i < n; ++i) ranks.push_back(rank_of(f, powers[static_cast<std::size_t>(i)], n));
      // blocks of size >= i is ranks[i-1] - ranks[i]
      std::vector<int> parts;
      for (int size = n; size >= 1; --size) {
        const int at_least = ranks[static_cast<std::size_t>(size - 1)] - ranks[static_cast<std::size_t>(size)];
        const int at_least_next =
            size < n ? ranks[static_cast<std::size_t>(size)] - ranks[static_cast<std::size_t>(size + 1)] : 0;
        for (int c = 0; c < at_least - at_least_next; ++c) parts.push_back(size);
      }
      out.by_class[partition_label(parts)] += 1;
      out.total += 1;
    }

    int pos = 0;
    while (pos < free && ++entries[static_cast<std::size_t>(pos)] == q) entries[static_cast<std::size_t>(pos++)] = 0;
    if (pos == free) break;
  }
  return out;
}

FFCount ff_binary_form_count(int d, int q, const OracleLimits& limits) {
  if (d < 1) throw InputError("binary forms need degree >= 1");
  const FiniteField f(q);
  if (ipow(static_cast<std::uint64_t>(q), d + 1, limits.max_elements) > limits.max_elements)
    throw CapacityError("too many binary forms to enumerate");
  FFCount out;
  out.q = q;
  std::vector<int> a(static_cast<std::size_t>(d + 1), 0);  // a_i is the coefficient of x^{d-i} y^i
  for (;;) {
    const bool zero = std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
    if (zero) {
      out.by_class["zero"] += 1;
      out.total += 1;
    } else {
      int best = 0;
      // factor x: trailing zero coefficients
      int at_inf = 0;
      for (int i = d; i >= 0 && a[static_cast<std::size_t>(i)] == 0; --i) ++at_inf;
      best = at_inf;
      // factor (y - c x): root u = c of g(u) = sum a_i u^i
      for (int c = 0; c < q; ++c) {
        std::vector<int> g = a;
        int mult = 0;
        for (;;) {
          while (!g.empty() && g.back() == 0) g.pop_back();
          if (g.empty()) break;
          // synthetic division by (u - c)
          std::vector<int> quot(g.size() - 1, 0);
          int carry = 0;
          for (std::size_t i = g.size(); i-- > 0;) {
            const int v = f.add(g[i], f.mul(carry, c));
            if (i > 0) quot[i - 1] = v;
            carry = v;  // after i == 0 this is the remainder
          }
          if (carry != 0) break;
          ++mult;
          g = std::move(quot);
        }
        best = std::max(best, mult);
      }
      if (2 * best > d) {
        out.by_class["mult=" + std::to_string(best)] += 1;
        out.total += 1;
      }
    }
    int pos = 0;
    while (pos <= d && ++a[static_cast<std::size_t>(pos)] == q) a[static_cast<std::size_t>(pos++)] = 0;
    if (pos > d) break;
  }
  return out;
}

bool origin_in_hull_bruteforce(const std::vector<RVec>& points, const RMat& gram) {
  if (points.empty()) return false;
  const RMat prod = inner_products(points, gram);
  const std::size_t limit = static_cast<std::size_t>(gram.rows()) + 1;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t i = from; i < points.size(); ++i) {
      cur.push_back(i);
      const auto proj = affine_projection(points, prod, cur);
      if (proj) {
        if (proj->norm2 == 0 &&
            std::all_of(proj->coefficients.begin(), proj->coefficients.end(), [](const Rational& c) { return c >= 0; }))
          return true;
        if (cur.size() < limit && self(self, i + 1)) return true;
      }
      cur.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

FFCount ff_torus_count(const std::vector<WeightEntry>& weights, const RMat& gram, int q) {
  long dim = 0;
  for (const auto& w : weights) dim += w.mult;
  if (dim > 12) throw CapacityError("torus oracle supports total dimension <= 12");
  if (q < 2) throw InputError("q must be a prime power");
  (void)FiniteField(q);  // validates q
  FFCount out;
  out.q = q;
  const std::size_t m = weights.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<RVec> support;
    Integer vectors = 1;
    std::ostringstream label;
    label << '{';
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1U)) continue;
      support.push_back(weights[i].weight);
      // vectors whose component in this weight space is nonzero
      vectors *= boost::multiprecision::pow(Integer(q), static_cast<unsigned>(weights[i].mult)) - 1;
      label << (support.size() > 1 ? ";" : "") << vec_key(weights[i].weight);
    }
    label << '}';
    if (!support.empty() && origin_in_hull_bruteforce(support, gram)) continue;
    out.by_class[label.str()] += vectors;
    out.total += vectors;
  }
  return out;
}

JordanLabel jordan_to_stratum(std::vector<int> partition) {
  std::sort(partition.begin(), partition.end(), std::greater<>());
  if (partition.empty() || partition.front() <= 1) throw InputError("the zero orbit has no stratum");
  for (int p : partition)
    if (p < 1) throw InputError("partition parts must be positive");
  std::vector<long> h;
  for (int p : partition)
    for (int j = p - 1; j >= 1 - p; j -= 2) h.push_back(j);
  std::sort(h.begin(), h.end(), std::greater<>());
  const auto n = static_cast<Eigen::Index>(h.size());
  ZVec c(n - 1);
  long acc = 0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    acc += h[static_cast<std::size_t>(i)];
    c[i] = acc;
  }
  const Integer g = gcd_of(c);
  if (2 % g != 0) throw InternalError("neutral element is not compatible with a primitive label");
  JordanLabel out;
  out.lambda = c;
  for (Eigen::Index i = 0; i < c.size(); ++i) out.lambda[i] /= g;
  out.k = (Integer(2) / g).convert_to<long>();
  return out;
}

}  // namespace nullstrata
