#include "coneseries/error.hpp"
#include "coneseries/linalg.hpp"
#include "coneseries/order.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace coneseries;
using namespace fixtures;

namespace {

VectorOrder ord(std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<RationalVector> u;
  for (auto& v : vs) u.push_back(rv(v));
  return VectorOrder(u);
}

RationalVector random_rational(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(make_rational(num(rng), den(rng)));
  return v;
}

}  // namespace

TEST_CASE("lexicographic comparison") {
  CHECK(compare(ord({{1, 1}}), rv({1, 0}), rv({0, 1})) == Cmp::Equal);
  CHECK(compare(ord({{1, 1}, {1, 0}}), rv({1, 0}), rv({0, 1})) == Cmp::Greater);
  CHECK(compare(ord({{2, 1}}), rv({1, -1}), rv({0, 0})) == Cmp::Greater);
  CHECK_THROWS_WITH_AS(compare(ord({{2, 1}}), rv({1, -1, 0}), rv({0, 0})), doctest::Contains("DimensionMismatch"),
                       Error);
  CHECK_FALSE(ord({{1, 1}}).total());
  CHECK(ord({{1, 1}, {1, 0}}).total());
}

TEST_CASE("positivity and cone non-negativity") {
  CHECK(is_positive(ord({{1, 2}})));
  CHECK_FALSE(is_positive(ord({{1, -1}})));
  CHECK_FALSE(is_positive(ord({{1, 0}, {0, -1}})));
  CHECK(is_positive(ord({{1, 0}, {0, 1}})));
  CHECK(cone_nonnegative(ord({{1, 2}}), Cone::orthant(2)));
  CHECK_FALSE(cone_nonnegative(ord({{1, 2}}), cone(2, {{1, -1}})));
  CHECK(cone_nonnegative(ord({{1, 1}, {1, 0}}), cone(2, {{1, -1}, {0, 1}})));
}

TEST_CASE("refining omega over a cone") {
  VectorOrder o = refine_over_cone(rv({1, 1}), cone(2, {{1, -1}}));
  CHECK(o == ord({{1, 1}, {1, -1}}));
  CHECK(cone_nonnegative(o, cone(2, {{1, -1}})));
  CHECK(o.total());

  VectorOrder o2 = refine_over_cone(rv({1, 2}), Cone::orthant(2));
  CHECK(o2.vectors().front() == rv({1, 2}));
  CHECK(o2.total());
  CHECK(is_positive(o2));

  Cone c3 = cone(3, {{1, -1, 0}, {0, 1, -1}});
  VectorOrder o3 = refine_over_cone(rv({1, 1, 1}), c3);
  CHECK(o3.total());
  CHECK(cone_nonnegative(o3, c3));
  CHECK(is_positive(o3));

  CHECK_THROWS_WITH_AS(refine_over_cone(rv({1, 2}), cone(2, {{1, -1}})), doctest::Contains("ConeNotInHalfSpace"),
                       Error);
}

TEST_CASE("sign-flip test") {
  CHECK(signflip_relint_test(Cone::orthant(2), rv({1, 1}), {rv({1, -1})}));
  CHECK_FALSE(signflip_relint_test(Cone::orthant(2), rv({1, 0}), {rv({0, 1})}));
  Cone c = cone(2, {{1, 0}, {-1, 1}});
  CHECK(signflip_relint_test(c, rv({1, 2}), {rv({2, -1})}));
  CHECK(relint_dual_contains(c, rv({1, 2})));
  CHECK_THROWS_WITH_AS(signflip_relint_test(c, rv({1, 2}), {rv({1, 1})}), doctest::Contains("BadBasis"), Error);
}

TEST_CASE("total orders are antisymmetric and translation invariant") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::vector<RationalVector> us;
    while (us.size() < n) {
      RationalVector u = random_rational(rng, n);
      std::vector<RationalVector> t = us;
      t.push_back(u);
      if (!is_zero(u) && rank(t, n) == t.size()) us = t;
    }
    VectorOrder o(us);
    REQUIRE(o.total());
    RationalVector a = random_rational(rng, n), b = random_rational(rng, n), w = random_rational(rng, n);
    if (trial % 7 == 0) b = a;
    Cmp c = compare(o, a, b);
    if (c == Cmp::Equal) CHECK(a == b);
    CHECK(compare(o, add(a, w), add(b, w)) == c);
  }
}

TEST_CASE("refined orders refine omega") {
  std::mt19937 rng(3);
  int built = 0;
  for (int trial = 0; trial < 300 && built < 60; ++trial) {
    std::size_t n = 2 + trial % 2;
    Cone c = random_cone(rng, n);
    RationalVector omega = to_rational(random_vector(rng, n, -3, 3));
    if (is_zero(omega) || !c.strongly_convex()) continue;
    bool half = true;
    for (const auto& g : c.generators()) half = half && dot(omega, g) >= 0;
    if (!half) continue;
    VectorOrder o = refine_over_cone(omega, c);
    ++built;
    CHECK(o.total());
    CHECK(cone_nonnegative(o, c));
    VectorOrder coarse({omega});
    for (int k = 0; k < 20; ++k) {
      RationalVector a = random_rational(rng, n);
      if (sign(coarse, a) == Cmp::Less) CHECK(sign(o, a) == Cmp::Less);
    }
  }
  CHECK(built >= 30);
}

TEST_CASE("sign-flip test agrees with the relative interior test") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 1000 && checked < 100; ++trial) {
    std::size_t n = 2 + trial % 2;
    Cone c = random_cone(rng, n);
    if (!c.strongly_convex()) continue;
    RationalVector omega = to_rational(random_vector(rng, n, -3, 3));
    if (is_zero(omega)) continue;
    std::vector<RationalVector> basis;
    for (const auto& k : nullspace({omega}, n)) basis.push_back(k);
    CHECK(signflip_relint_test(c, omega, basis) == relint_dual_contains(c, omega));
    ++checked;
  }
  CHECK(checked == 100);
}
