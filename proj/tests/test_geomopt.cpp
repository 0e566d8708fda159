#include <doctest.h>

#include "oracles.hpp"

using namespace testing;


TEST_CASE("min-norm examples") {
  const RMat id2 = RMat::Identity(2, 2);
  const auto a = min_norm_point<Rational>({rvec({1, 0}), rvec({0, 1})}, id2);
  CHECK(equal(a.point, rvec({Rational(1, 2), Rational(1, 2)})));
  CHECK(verify_min_norm(a, {rvec({1, 0}), rvec({0, 1})}, id2));
  const auto b = min_norm_point<Rational>({rvec({2, 1}), rvec({2, -1}), rvec({4, 0})}, id2);
  CHECK(equal(b.point, rvec({2, 0})));
  const auto z = min_norm_point<Rational>({rvec({1, 0}), rvec({-1, 0})}, id2);
  CHECK(z.is_zero);
}

TEST_CASE("property: min-norm agrees with the all-faces oracle") {
  std::mt19937 rng(20240);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), rank_d(1, 4), count_d(1, 8);
  int unstable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int r = rank_d(rng);
    const int n = count_d(rng);
    const RMat gram = trial % 2 ? random_gram(rng, r) : RMat(RMat::Identity(r, r));
    std::vector<RVec> pts;
    for (int i = 0; i < n; ++i) {
      RVec p(r);
      for (int j = 0; j < r; ++j) p[j] = Rational(num(rng), den(rng));
      pts.push_back(p);
    }
    const auto got = min_norm_point(pts, gram);
    const auto [x, norm2] = min_norm_all_faces(pts, gram);
    CHECK(verify_min_norm(got, pts, gram));
    CHECK(equal(got.point, x));
    CHECK(pair(got.point, gram, got.point) == norm2);
    if (!got.is_zero) {
      ++unstable;
      // the minimal-norm point mu attains m(support, mu) = |mu|^2
      Rational m = pair(pts[0], gram, got.point);
      for (const auto& p : pts) m = std::min(m, pair(p, gram, got.point));
      CHECK(m == norm2);
    }
  }
  CHECK(unstable > 50);
}

TEST_CASE("torus optimal cocharacters") {
  const auto a1 = datum("A1");
  const auto st = GroupState::ambient(a1);
  const auto o = torus_optimal({rvec({1})}, st);
  CHECK_FALSE(o.semistable);
  CHECK(equal(o.lambda, rvec({1})));
  CHECK(o.m == 2);
  CHECK(torus_optimal({rvec({1}), rvec({-1})}, st).semistable);

  // m_value of the optimum equals m and |mu|^2 = m^2 / |lambda|^2... checked on A2
  const auto a2 = datum("A2");
  const auto s2 = GroupState::ambient(a2);
  const std::vector<RVec> support{rvec({1, 0}), rvec({0, 1})};
  const auto o2 = torus_optimal(support, s2);
  CHECK_FALSE(o2.semistable);
  CHECK(*m_value(*a2, support, o2.lambda) == o2.m);
  CHECK(a2->pairing(o2.mu, o2.mu) == *m_value(*a2, support, o2.mu));
}

TEST_CASE("candidate directions") {
  const auto a1 = datum("A1");
  const auto c1 = candidate_directions(adjoint_character(a1), GroupState::ambient(a1));
  REQUIRE(c1.size() == 1);
  CHECK(equal(c1[0], rvec({1})));

  const auto a2 = datum("A2");
  const auto c2 = candidate_directions(adjoint_character(a2), GroupState::ambient(a2));
  auto has = [&](const RVec& v) {
    for (const auto& c : c2)
      if (equal(c, v)) return true;
    return false;
  };
  CHECK(has(rvec({1, 1})));
  CHECK(has(rvec({2, 1})));
  CHECK(has(rvec({1, 2})));
  for (const auto& c : c2) CHECK(is_dominant(*a2, c));
}

TEST_CASE("orthogonal projection and Levi states") {
  const auto a2 = datum("A2");
  CHECK(equal(project_orthogonal(rvec({1, 0}), rvec({1, 1}), a2->gram()), rvec({Rational(1, 2), Rational(-1, 2)})));

  const auto st = GroupState::ambient(a2);
  const auto theta = st.levi_perp(rvec({1, 1}));
  CHECK(theta.live_roots().empty());
  CHECK(theta.lattice_rank() == 1);

  const auto l = st.levi_perp(rvec({2, 1}));
  CHECK(l.live_roots().size() == 2);
  REQUIRE(l.levi_type().factors.size() == 1);
  CHECK(l.levi_type().factors[0] == SimpleFactor{'A', 1});

  CHECK_THROWS_AS(st.levi_perp(rvec({0, 0})), InputError);
  CHECK_THROWS_AS(st.levi_perp(rvec({Rational(1, 3), 0})), InputError);
}

TEST_CASE("property: the torus optimum maximizes m / |lambda|") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> e(-3, 3), n_pts(1, 5);
  const auto d = datum("A3");
  const auto st = GroupState::ambient(d);
  int unstable = 0;
  for (int trial = 0; trial < 400 && unstable < 100; ++trial) {
    std::vector<RVec> support;
    for (int i = n_pts(rng); i > 0; --i) support.push_back(rvec({e(rng), e(rng), e(rng)}));
    const auto opt = torus_optimal(support, st);
    if (opt.semistable) continue;
    ++unstable;
    const Rational best = opt.m * opt.m / d->pairing(opt.lambda, opt.lambda);
    for (int j = 0; j < 50; ++j) {
      const RVec l = rvec({e(rng), e(rng), e(rng)});
      if (is_zero(l)) continue;
      const Rational m = *m_value(*d, support, l);
      if (m > 0) CHECK(m * m / d->pairing(l, l) <= best);
    }
  }
  CHECK(unstable == 100);
}

TEST_CASE("property: orthogonal projection keeps pairings with the complement") {
  std::mt19937 rng(78);
  std::uniform_int_distribution<int> e(-3, 3);
  const auto d = datum("B3");
  for (int trial = 0; trial < 50; ++trial) {
    const RVec chi = rvec({e(rng), e(rng), e(rng)});
    RVec l = rvec({e(rng), e(rng), e(rng)});
    if (is_zero(l)) continue;
    const RVec p = project_orthogonal(chi, l, d->gram());
    const RMat k = kernel<Rational>(RMat(l.transpose() * d->gram()));
    for (Eigen::Index c = 0; c < k.cols(); ++c) {
      const RVec mu = k.col(c);
      CHECK(d->pairing(p, mu) == d->pairing(chi, mu));
    }
    CHECK(d->pairing(p, l) == 0);
  }
}
