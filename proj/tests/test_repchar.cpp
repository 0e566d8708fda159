#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

RVec highest_root(const RootDatum& d) { return d.roots_q()[static_cast<std::size_t>(d.positive_count() - 1)]; }

}  // namespace

TEST_CASE("adjoint dimensions") {
  CHECK(adjoint_character(datum("A1")).dim() == 3);
  CHECK(adjoint_character(datum("A2")).dim() == 8);
  CHECK(adjoint_character(datum("G2")).dim() == 14);
  CHECK(adjoint_character(datum("A1+T1")).dim() == 4);
}

TEST_CASE("highest weight modules of A1") {
  const auto a1 = datum("A1");
  CHECK(hw(a1, {1}).dim() == 2);
  CHECK(hw(a1, {2}).dim() == 3);
  CHECK(hw(a1, {2}) == adjoint_character(a1));
  for (long d = 0; d <= 8; ++d) {
    const auto ch = hw(a1, {d});
    REQUIRE(static_cast<long>(ch.weights().size()) == d + 1);
    for (const auto& w : ch.weights()) CHECK(w.mult == 1);
  }
}

TEST_CASE("the adjoint module is the highest root module") {
  for (const char* t : kCritTypes) {
    const auto d = datum(t);
    const auto ch = highest_weight_character(d, highest_root(*d));
    CHECK_MESSAGE(ch == adjoint_character(d), t);
  }
  const auto a2 = datum("A2");
  CHECK(hw(a2, {1, 1}) == adjoint_character(a2));
}

TEST_CASE("A2 dimensions match the closed formula") {
  const auto a2 = datum("A2");
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) CHECK(hw(a2, {a, b}).dim() == (a + 1) * (b + 1) * (a + b + 2) / 2);
}

TEST_CASE("property: Freudenthal characters are Weyl invariant and match Weyl's dimension") {
  std::mt19937 rng(7);
  const char* types[] = {"A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"};
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = datum(types[trial % 7]);
    std::uniform_int_distribution<int> coef(0, 2);
    std::vector<Rational> c;
    for (int i = 0; i < d->rank(); ++i) c.emplace_back(coef(rng));
    const RVec mu = weight_from_coordinates(*d, c);
    if (weyl_dimension(*d, mu) > 2000) continue;
    const auto ch = highest_weight_character(d, mu);
    CHECK(Integer(ch.dim()) == weyl_dimension(*d, mu));
    CHECK(is_weyl_invariant(ch));
    CHECK(dual_character(dual_character(ch)) == ch);
    for (const auto& w : ch.weights()) CHECK(w.mult > 0);
  }
}

TEST_CASE("highest weight input validation") {
  const auto a2 = datum("A2");
  CHECK_THROWS_AS(highest_weight_character(a2, rvec({-1, 0})), InputError);
  CHECK_THROWS_AS(highest_weight_character(a2, weight_from_coordinates(*a2, {Rational(1, 2), 0})), InputError);
  HighestWeightOptions small;
  small.dimension_bound = 10;
  CHECK_THROWS_AS(highest_weight_character(a2, weight_from_coordinates(*a2, {3, 3}), small), CapacityError);
}

TEST_CASE("m values") {
  const auto a1 = datum("A1");
  CHECK_FALSE(m_value(*a1, {}, rvec({1})).has_value());
  CHECK(*m_value(*a1, {rvec({1})}, rvec({1})) == 2);
  CHECK(*m_value(*a1, {rvec({1}), rvec({-1})}, rvec({1})) == -2);
}

TEST_CASE("dual of the adjoint module is itself") {
  for (const char* t : kCritTypes) {
    const auto ch = adjoint_character(datum(t));
    CHECK(dual_character(ch) == ch);
  }
}
