#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("projective polynomial") {
  CHECK(projective_poly(t_pow(2)).first == poly({1, 1}));
  CHECK(projective_poly(t_pow(6)).first == poly({1, 1, 1, 1, 1, 1}));
  CHECK(projective_poly(poly({1})).first == IntPolynomial{});
  CHECK_THROWS_AS(projective_poly(poly({2})), InternalError);
}

TEST_CASE("a corrupted contribution fails the partition check") {
  const auto a2 = datum("A2");
  StrataEngine engine;
  auto report = count_module(engine, adjoint_character(a2), "A2", "adjoint");
  for (const auto& c : verify_identities(report, engine)) CHECK_MESSAGE(c.pass, c.name);
  report.strata[0].contribution += poly({0, 1});
  const auto checks = verify_identities(report, engine);
  CHECK_FALSE(checks[0].pass);
  CHECK(checks[0].name == "partition");
}

TEST_CASE("adjoint nullcones count q^(dim G - rank)") {
  for (const char* t : kCritTypes) {
    const auto d = datum(t);
    StrataEngine engine;
    CHECK_MESSAGE(nullcone_poly(engine, adjoint_character(d)) == t_pow(d->dimension() - d->rank()), t);
  }
}

TEST_CASE("the cocharacter lattice does not change the count") {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    StrataEngine e1, e2;
    const auto sc = datum(t);
    const auto ad = datum(t, CocharacterLattice::Adjoint);
    CHECK(nullcone_poly(e1, adjoint_character(sc)) == nullcone_poly(e2, adjoint_character(ad)));
  }
}

TEST_CASE("binary forms") {
  const auto a1 = datum("A1");
  StrataEngine engine;
  CHECK(nullcone_poly(engine, hw(a1, {1})) == t_pow(2));  // every vector of the standard module
  CHECK(nullcone_poly(engine, hw(a1, {2})) == t_pow(2));
  // a linear factor of multiplicity >= 2 (resp. 3): (q + 1)(q^2 - 1) + 1 forms
  const IntPolynomial ruled = poly({1, 1}) * poly({-1, 0, 1}) + poly({1});
  CHECK(nullcone_poly(engine, hw(a1, {3})) == ruled);
  CHECK(nullcone_poly(engine, hw(a1, {4})) == ruled);
}

TEST_CASE("torus modules") {
  const auto t1 = datum("T1");
  StrataEngine engine;
  const ModuleCharacter pm(t1, {{rvec({1}), 1}, {rvec({-1}), 1}});
  CHECK(nullcone_poly(engine, pm) == poly({-1, 2}));
  const ModuleCharacter zero(t1, {{rvec({0}), 3}});
  CHECK(nullcone_poly(engine, zero) == poly({1}));
}

TEST_CASE("property: identities on random highest weight modules") {
  std::mt19937 rng(99);
  const char* types[] = {"A1", "A2", "A3", "B2", "G2", "A1xA1", "A1+T1", "B3", "C3"};
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 25; ++trial) {
    const auto d = datum(types[trial % 9]);
    std::uniform_int_distribution<int> coef(0, 3);
    std::vector<Rational> c;
    for (int i = 0; i < d->semisimple_rank(); ++i) c.emplace_back(coef(rng));
    for (int i = d->semisimple_rank(); i < d->rank(); ++i) c.emplace_back(coef(rng) - 1);
    const RVec mu = weight_from_coordinates(*d, c);
    if (weyl_dimension(*d, mu) > 30 || weyl_dimension(*d, mu) < 2) continue;
    ++tested;
    StrataEngine engine;
    const auto ch = highest_weight_character(d, mu);
    const auto report = count_module(engine, ch, d->type().to_string(), "hw");
    CHECK(report.n_at_1_ok);
    CHECK(report.degree_ok);
    for (const auto& chk : verify_identities(report, engine)) CHECK_MESSAGE(chk.pass, chk.name << ": " << chk.detail);
    CHECK(report.n.degree() <= ch.dim());
  }
  CHECK(tested >= 20);
}

TEST_CASE("unipotent pieces") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    const auto d = datum(t);
    StrataEngine engine;
    const auto report = count_module(engine, adjoint_character(d), t, "adjoint");
    const auto u = group_case_counts(report);
    CHECK(u.steinberg_ok);
    CHECK(u.total == t_pow(d->dimension() - d->rank()));
    REQUIRE(u.pieces.size() == report.strata.size());
    for (std::size_t i = 0; i < u.pieces.size(); ++i) CHECK(u.pieces[i].count == report.strata[i].contribution);
  }
  const auto a1 = datum("A1");
  StrataEngine engine;
  const auto rep = count_module(engine, hw(a1, {3}), "A1", "hw:3");
  CHECK_THROWS_AS(group_case_counts(rep), InputError);
}

TEST_CASE("adjoint modules have a single regular stratum") {
  for (const char* t : kCritTypes) {
    const auto d = datum(t);
    StrataEngine engine;
    const auto strata = engine.enumerate_strata(GroupState::ambient(d), adjoint_character(d));
    int top = 0;
    for (const auto& s : strata) top += s.dim_stratum == d->dimension() - d->rank();
    CHECK_MESSAGE(top == 1, t);
    CHECK(strata.front().dim_stratum == d->dimension() - d->rank());
  }
}

TEST_CASE("one polynomial matches oracles in several characteristics") {
  StrataEngine engine;
  const auto n2 = nullcone_poly(engine, adjoint_character(datum("A1")));
  const auto a1 = datum("A1");
  const auto cubic = nullcone_poly(engine, hw(a1, {3}));
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CHECK(ff_nilpotent_count(2, q).total == n2.evaluate(q));
    CHECK(ff_binary_form_count(3, q).total == cubic.evaluate(q));
  }
}
