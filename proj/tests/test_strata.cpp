#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("graded pieces and saturation for the A2 adjoint module") {
  const auto a2 = datum("A2");
  const auto adj = adjoint_character(a2);
  const RVec theta = rvec({1, 1});

  const auto top = graded_piece(adj, theta, 2);
  REQUIRE(top.weights().size() == 1);
  CHECK(is_zero(top.weights()[0].weight));

  const auto mid = graded_piece(adj, theta, 1);
  REQUIRE(mid.weights().size() == 2);
  CHECK(equal(mid.weights()[0].weight, rvec({Rational(-1, 2), Rational(1, 2)})));
  CHECK(equal(mid.weights()[1].weight, rvec({Rational(1, 2), Rational(-1, 2)})));

  const auto sat = saturation(adj, theta, 1);
  REQUIRE(sat.size() == 3);
  long total = 0;
  for (const auto& w : sat) total += w.mult;
  CHECK(total == 3);
  std::vector<RVec> expected{rvec({0, 1}), rvec({1, 0}), rvec({1, 1})};
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& w : sat) found = found || equal(w.weight, e);
    CHECK(found);
  }
}

TEST_CASE("A1 adjoint has one stratum") {
  const auto a1 = datum("A1");
  StrataEngine engine;
  const auto strata = engine.enumerate_strata(GroupState::ambient(a1), adjoint_character(a1));
  REQUIRE(strata.size() == 1);
  CHECK(equal(strata[0].lambda_coords, zvec({1})));
  CHECK(strata[0].k == 2);
  CHECK(strata[0].dim_stratum == 2);
  CHECK(stratum_poly(strata[0]) == poly({-1, 0, 1}));
  CHECK(nullcone_poly(engine, adjoint_character(a1)) == t_pow(2));
}

TEST_CASE("A2 adjoint strata") {
  const auto a2 = datum("A2");
  StrataEngine engine;
  const auto strata = engine.enumerate_strata(GroupState::ambient(a2), adjoint_character(a2));
  REQUIRE(strata.size() == 2);
  CHECK(equal(strata[0].lambda_coords, zvec({1, 1})));
  CHECK(strata[0].k == 1);
  CHECK(strata[0].dim_stratum == 6);
  CHECK(strata[0].contribution == poly({0, 1, 0, -1, -1, 0, 1}));
  CHECK(equal(strata[1].lambda_coords, zvec({1, 1})));
  CHECK(strata[1].k == 2);
  CHECK(strata[1].dim_stratum == 4);
  CHECK(strata[1].contribution == poly({-1, -1, 0, 1, 1}));
  for (const auto& s : strata) CHECK_FALSE((equal(s.lambda_coords, zvec({2, 1})) && s.k == 3));
  CHECK(nullcone_poly(engine, adjoint_character(a2)) == t_pow(6));
}

TEST_CASE("memoization does not change results") {
  for (const char* t : {"A3", "B2", "G2"}) {
    const auto d = datum(t);
    StrataEngine with, without(EngineOptions{.memo = false});
    const auto ch = adjoint_character(d);
    CHECK(nullcone_poly(with, ch) == nullcone_poly(without, ch));
    CHECK(without.memo_size() == 0);
  }
}

TEST_CASE("the torus prefilter does not change results") {
  for (const char* t : {"A2", "B2", "G2"}) {
    const auto d = datum(t);
    StrataEngine a, b(EngineOptions{.torus_prefilter = false});
    for (const auto& ch : {adjoint_character(d), hw(d, {1, 1}), hw(d, {2, 0})}) {
      if (ch.dim() > 40) continue;
      CHECK(nullcone_poly(a, ch) == nullcone_poly(b, ch));
    }
  }
}

TEST_CASE("subset bound above the rank gives the same strata") {
  const auto a2 = datum("A2");
  StrataEngine a, b(EngineOptions{.candidates = CandidateOptions{.max_subset = 3, .require_interior = false}});
  const auto ch = hw(a2, {2, 1});
  const auto sa = a.enumerate_strata(GroupState::ambient(a2), ch);
  const auto sb = b.enumerate_strata(GroupState::ambient(a2), ch);
  REQUIRE(sa.size() == sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    CHECK(equal(sa[i].lambda_coords, sb[i].lambda_coords));
    CHECK(sa[i].k == sb[i].k);
  }
}

TEST_CASE("property: the Hesselink norm orders blades consistently") {
  // distinct strata have distinct (dominant) blades
  for (const char* t : {"A3", "B2", "G2", "C3"}) {
    const auto d = datum(t);
    StrataEngine engine;
    const auto strata = engine.enumerate_strata(GroupState::ambient(d), adjoint_character(d));
    for (std::size_t i = 0; i < strata.size(); ++i) {
      CHECK(strata[i].norm2 == Rational(strata[i].k * strata[i].k) / d->pairing(strata[i].lambda, strata[i].lambda));
      for (std::size_t j = i + 1; j < strata.size(); ++j) CHECK_FALSE(equal(strata[i].blade, strata[j].blade));
    }
  }
}

TEST_CASE("property: Levi states along the recursion") {
  for (const char* t : {"A3", "B3", "C3", "G2", "B2xA1"}) {
    const auto d = datum(t);
    StrataEngine engine;
    const auto ambient = GroupState::ambient(d);
    for (const auto& s : engine.enumerate_strata(ambient, adjoint_character(d))) {
      const GroupState st = ambient.levi_perp(s.lambda);
      CHECK(st.lattice_rank() == ambient.lattice_rank() - 1);
      // saturated in Y
      for (const auto& e : elementary_divisors(st.sublattice())) CHECK(e == 1);
      for (int r : st.live_roots()) CHECK(st.in_lattice(d->coroot(r)));
      for (int r : st.live_roots()) CHECK(d->pairing(d->roots_q()[static_cast<std::size_t>(r)], s.lambda) == 0);
    }
  }
}

TEST_CASE("property: stratum records are consistent") {
  for (const char* t : {"A2", "A3", "B2", "G2", "C3"}) {
    const auto d = datum(t);
    StrataEngine engine;
    const auto ch = adjoint_character(d);
    const auto ambient = GroupState::ambient(d);
    for (const auto& s : engine.enumerate_strata(ambient, ch)) {
      std::vector<RVec> layer;
      for (const auto& w : ch.weights())
        if (d->pairing(w.weight, s.lambda) == s.k) layer.push_back(w.weight);
      CHECK(*m_value(*d, layer, s.mu) == d->pairing(s.mu, s.mu));
      CHECK(d->pairing(s.mu, s.mu) == s.norm2);
      CHECK(s.dim_stratum == stratum_dimension(s, ambient));
      CHECK(s.contribution.degree() == s.dim_stratum);
      CHECK(s.sub_poly.degree() < s.n);
    }
  }
}
