#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

Integer ipow(long q, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

TEST_CASE("finite field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    const FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  CHECK_THROWS_AS(FiniteField(6), InputError);
}

TEST_CASE("nilpotent matrix counts") {
  const auto c22 = ff_nilpotent_count(2, 2);
  CHECK(c22.total == 4);
  CHECK(c22.by_class.at("[2]") == 3);
  CHECK(c22.by_class.at("[1,1]") == 1);

  const auto c32 = ff_nilpotent_count(3, 2);
  CHECK(c32.total == 64);
  CHECK(c32.by_class.at("[3]") == 42);
  CHECK(c32.by_class.at("[2,1]") == 21);
  CHECK(c32.by_class.at("[1,1,1]") == 1);

  CHECK(ff_nilpotent_count(2, 3).total == 9);
  for (int q : {2, 3, 4}) {
    const auto c = ff_nilpotent_count(3, q);
    Integer sum = 0;
    for (const auto& [k, v] : c.by_class) sum += v;
    CHECK(sum == c.total);
  }
}

TEST_CASE("nilpotent counts follow q^(n^2 - n) and the orbit sizes") {
  for (int q : {2, 3, 4, 5}) {
    const auto c2 = ff_nilpotent_count(2, q);
    CHECK(c2.total == ipow(q, 2));
    CHECK(c2.by_class.at("[2]") == ipow(q, 2) - 1);
    const auto c3 = ff_nilpotent_count(3, q);
    CHECK(c3.total == ipow(q, 6));
    CHECK(c3.by_class.at("[3]") == ipow(q, 6) - ipow(q, 4) - ipow(q, 3) + q);
    CHECK(c3.by_class.at("[2,1]") == ipow(q, 4) + ipow(q, 3) - q - 1);
  }
}

TEST_CASE("binary form counts") {
  CHECK(ff_binary_form_count(2, 3).total == 9);
  CHECK(ff_binary_form_count(2, 2).total == 4);
  for (int q : {2, 3, 5}) {
    // a binary quadratic is unstable iff it is a scalar times a square
    CHECK(ff_binary_form_count(2, q).total == ipow(q, 2));
    CHECK(ff_binary_form_count(3, q).total == Integer(q + 1) * (q * q - 1) + 1);
  }
}

TEST_CASE("torus counts") {
  const RMat id = RMat::Identity(1, 1);
  const std::vector<WeightEntry> pm{{rvec({1}), 1}, {rvec({-1}), 1}};
  CHECK(ff_torus_count(pm, id, 2).total == 3);
  for (int q : {3, 4, 5, 7}) CHECK(ff_torus_count(pm, id, q).total == 2 * q - 1);
  CHECK(ff_torus_count({{rvec({0}), 2}}, id, 3).total == 1);
}

TEST_CASE("origin in hull") {
  const RMat id = RMat::Identity(2, 2);
  CHECK(origin_in_hull_bruteforce({rvec({1, 0}), rvec({-1, 1}), rvec({-1, -1})}, id));
  CHECK_FALSE(origin_in_hull_bruteforce({rvec({1, 0}), rvec({0, 1})}, id));
  CHECK(origin_in_hull_bruteforce({rvec({0, 0})}, id));
}

TEST_CASE("Jordan types map to strata") {
  auto l2 = jordan_to_stratum({2});
  CHECK(equal(l2.lambda, zvec({1})));
  CHECK(l2.k == 2);
  auto l3 = jordan_to_stratum({3});
  CHECK(equal(l3.lambda, zvec({1, 1})));
  CHECK(l3.k == 1);
  auto l21 = jordan_to_stratum({2, 1});
  CHECK(equal(l21.lambda, zvec({1, 1})));
  CHECK(l21.k == 2);
  CHECK(partition_label({2, 1}) == "[2,1]");
}

TEST_CASE("oracle capacity limits") {
  OracleLimits tiny;
  tiny.max_elements = 100;
  CHECK_THROWS_AS(ff_nilpotent_count(3, 3, tiny), CapacityError);
}
