#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("polynomial basics") {
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(poly({0, 0, 0}).degree() == -1);
  CHECK(poly({1, 2, 0}).degree() == 1);
  CHECK(poly({0, 1, 0, -1, -1, 0, 1}).to_string() == "t^6 - t^4 - t^3 + t");
  CHECK(IntPolynomial::q_integer(3) == poly({1, 1, 1}));
  CHECK(poly({1, 1}).evaluate(3) == 4);
  CHECK(t_pow(2).shifted(3) == t_pow(5));
  CHECK_FALSE(poly({1, 0, 1}).divide_exact(poly({-1, 1})).has_value());
}

TEST_CASE("property: multiply then divide round trips") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5), deg(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    b.back() = trial % 2 ? 1 : -1;  // unit leading coefficient
    const IntPolynomial pa(a), pb(b);
    const auto q = (pa * pb).divide_exact(pb);
    REQUIRE(q.has_value());
    CHECK(*q == pa);
    CHECK((pa + pb) - pb == pa);
    CHECK((pa * pb).evaluate(2) == pa.evaluate(2) * pb.evaluate(2));
  }
}
