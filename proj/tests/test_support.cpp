#include <set>

#include "coneseries/error.hpp"
#include "coneseries/support.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace coneseries;
using namespace fixtures;

namespace {

IndexSet squares() { return IndexSet::polynomial(UniPoly{0, 0, 1}); }

SupportSpec ray_spec(LatticeVector g, LatticeVector v, IndexSet idx) {
  SupportSpec s(g.size());
  s.add_ray(g, v, idx);
  return s;
}

VectorOrder ord(std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<RationalVector> u;
  for (auto& v : vs) u.push_back(rv(v));
  return VectorOrder(u);
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("index sets") {
  IndexSet sq = squares();
  CHECK(sq.elements_up_to(30) == ints({0, 1, 4, 9, 16, 25}));
  CHECK(sq.count_le(100) == 11);
  CHECK(*sq.first_at_least(10) == 16);
  CHECK_FALSE(sq.gaps_bounded());
  IndexSet f = IndexSet::factorial();
  CHECK(f.elements_up_to(30) == ints({1, 2, 6, 24}));
  CHECK(f.term(3) == 6);
  CHECK(f.ratio_unbounded());
  IndexSet a = IndexSet::arithmetic(3, 4);
  CHECK(a.count_le(10) == 2);
  CHECK(*a.first_at_least(8) == 11);
  CHECK(IndexSet::all().scaled(3) == IndexSet::arithmetic(0, 3));
  CHECK(f.scaled(2).elements_up_to(12) == ints({2, 4, 12}));
  IndexSet e = IndexSet::explicit_values(ints({2, 5}));
  CHECK_FALSE(e.first_at_least(6).has_value());
  CHECK_THROWS_WITH_AS(IndexSet::polynomial(UniPoly{0, 0, -1}), doctest::Contains("BadIndexSet"), Error);
  CHECK_THROWS_WITH_AS(IndexSet::polynomial(UniPoly{Rational(1, 2), 1}), doctest::Contains("BadIndexSet"), Error);
  CHECK_THROWS_WITH_AS(IndexSet::polynomial(UniPoly{0, -3, 1}), doctest::Contains("BadIndexSet"), Error);
  // i(i+1)/2 is integer valued with rational coefficients.
  CHECK(IndexSet::polynomial(UniPoly{0, Rational(1, 2), Rational(1, 2)}).elements_up_to(10) == ints({0, 1, 3, 6, 10}));
}

TEST_CASE("slab counts") {
  SupportSpec s = ray_spec(lv({0, 0}), lv({-1, 1}), squares());
  SlabCount c = slab_count(s, rv({1, 2}), 100);
  CHECK(c.kind == SlabCount::Kind::Finite);
  CHECK(c.bound == 11);
  CHECK(c.exact);
  CHECK(slab_count(s, rv({1, 1}), 0).kind == SlabCount::Kind::Infinite);
  SupportSpec p(2);
  p.add_point(lv({3, 4}));
  CHECK(slab_count(p, rv({1, 1}), 1000).bound == 1);
  CHECK(slab_count(p, rv({1, 1}), 6).bound == 0);

  SupportSpec t(2);
  t.add_tail(lv({0, 0}), Cone::orthant(2));
  SlabCount tc = slab_count(t, rv({1, 1}), 3);
  CHECK(tc.bound == 10);
  CHECK(tc.exact);
  CHECK(slab_count(t, rv({1, 0}), 3).kind == SlabCount::Kind::Unknown);
  CHECK(slab_count(t, rv({1, -1}), 3).kind == SlabCount::Kind::Infinite);
}

TEST_CASE("tau classification") {
  SupportSpec t(2);
  t.add_tail(lv({0, 0}), Cone::orthant(2));
  CHECK(tau_classify(t, rv({1, 1})).kind == TauClass::Kind::InTau0);
  SupportSpec r = ray_spec(lv({0, 0}), lv({-1, 1}), IndexSet::all());
  CHECK(tau_classify(r, rv({1, 2})).kind == TauClass::Kind::InTau0);
  CHECK(tau_classify(r, rv({2, 1})).kind == TauClass::Kind::InTau1);
  SupportSpec e66 = ray_spec(lv({0, 0}), lv({-1, 1}), squares());
  e66.add_point(lv({0, 0}));
  TauClass b = tau_classify(e66, rv({1, 1}));
  CHECK(b.kind == TauClass::Kind::Boundary);
  CHECK(b.lambda0 == 0);
  SupportSpec shifted = ray_spec(lv({3, 1}), lv({-1, 1}), squares());
  shifted.add_point(lv({0, 0}));
  TauClass b2 = tau_classify(shifted, rv({1, 1}));
  CHECK(b2.kind == TauClass::Kind::Boundary);
  CHECK(b2.lambda0 == 4);
  CHECK_THROWS_WITH_AS(tau_classify(r, rv({1, 0})), doctest::Contains("NonPositiveOmega"), Error);
}

TEST_CASE("field family and minimum") {
  SupportSpec r = ray_spec(lv({0, 0}), lv({1, -1}), IndexSet::all());
  CHECK(in_field_family(r, ord({{2, 1}, {0, 1}})));
  CHECK(in_field_family(r, ord({{1, 1}, {1, 0}})));
  SupportSpec both = r;
  both.add_ray(lv({0, 0}), lv({-1, 1}), IndexSet::all());
  CHECK_FALSE(in_field_family(both, ord({{2, 1}, {0, 1}})));
  CHECK_FALSE(in_field_family(both, ord({{1, 1}, {1, 0}})));

  SupportSpec pts(2);
  pts.add_point(lv({0, 0}));
  pts.add_point(lv({1, 0}));
  pts.add_point(lv({0, 1}));
  CHECK(min_support(pts, ord({{1, 2}, {1, 0}})) == lv({0, 0}));
  SupportSpec a = ray_spec(lv({0, 0}), lv({1, -1}), IndexSet::arithmetic(1, 1));
  CHECK(min_support(a, ord({{2, 1}, {0, 1}})) == lv({1, -1}));
  SupportSpec bad = ray_spec(lv({0, 0}), lv({0, -1}), IndexSet::all());
  bad.add_point(lv({0, -1}));
  CHECK_THROWS_WITH_AS(min_support(bad, ord({{1, 1}, {1, 0}})), doctest::Contains("NotWellOrdered"), Error);
  CHECK_THROWS_WITH_AS(min_support(SupportSpec(2), ord({{1, 1}, {1, 0}})), doctest::Contains("EmptySupport"), Error);
}

TEST_CASE("localized ring") {
  CHECK_FALSE(in_localized_ring(ray_spec(lv({0, 0}), lv({-1, 1}), squares())));
  SupportSpec lp(2);
  lp.add_point(lv({-3, 2}));
  lp.add_point(lv({1, -5}));
  CHECK(in_localized_ring(lp));
  SupportSpec t(2);
  t.add_tail(lv({0, 0}), cone(2, {{1, 0}, {-1, 1}}));
  CHECK_FALSE(in_localized_ring(t));
}

TEST_CASE("slab counts agree with brute force") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<long> small(-3, 3), len(0, 6), step(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    SupportSpec s(2);
    std::set<LatticeVector> brute;
    RationalVector omega = rv({1 + small(rng) % 3 + 3, 1 + (small(rng) + 3) % 3});
    Rational level = small(rng) * 3;
    if (trial % 2 == 0) {
      std::vector<Integer> vals;
      long m = 0;
      for (long i = 0, k = len(rng); i < k; ++i) vals.emplace_back(m += 1 + step(rng));
      LatticeVector g = random_vector(rng, 2, -4, 4), v = random_vector(rng, 2, -2, 2);
      if (is_zero(v)) v = lv({1, 0});
      s.add_ray(g, v, IndexSet::explicit_values(vals));
      v = primitive(v);
      for (const auto& x : s.rays().front().indices.values()) brute.insert(add(g, scale(v, x)));
    } else {
      LatticeVector g = random_vector(rng, 2, -4, 4);
      Cone c = random_cone(rng, 2);
      if (!c.strongly_convex() || !relint_dual_contains(c, omega)) continue;
      s.add_tail(g, c);
      for (long x = -60; x <= 60; ++x)
        for (long y = -60; y <= 60; ++y) {
          LatticeVector p = lv({x, y});
          if (c.contains(sub(p, g))) brute.insert(p);
        }
    }
    Integer expected = 0;
    for (const auto& p : brute)
      if (dot(omega, p) <= level) ++expected;
    SlabCount c = slab_count(s, omega, level);
    REQUIRE(c.kind == SlabCount::Kind::Finite);
    CHECK(c.bound == expected);
  }
}

TEST_CASE("tau0 is closed under addition and contains the relative interior of the dual") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    SupportSpec s(2);
    for (int k = 0; k < 2; ++k) {
      LatticeVector v = random_vector(rng, 2, -3, 3);
      if (is_zero(v)) continue;
      s.add_ray(random_vector(rng, 2, -3, 3), v, trial % 3 ? IndexSet::all() : squares());
    }
    Cone c = random_cone(rng, 2);
    if (c.strongly_convex()) s.add_tail(random_vector(rng, 2, -3, 3), c);
    RationalVector w1 = to_rational(random_vector(rng, 2, 1, 5)), w2 = to_rational(random_vector(rng, 2, 1, 5));
    if (tau_classify(s, w1).kind == TauClass::Kind::InTau0 && tau_classify(s, w2).kind == TauClass::Kind::InTau0)
      CHECK(tau_classify(s, add(w1, w2)).kind == TauClass::Kind::InTau0);
    if (c.strongly_convex() && !c.generators().empty()) {
      SupportSpec t(2);
      t.add_tail(lv({0, 0}), c);
      if (relint_dual_contains(c, w1)) CHECK(tau_classify(t, w1).kind == TauClass::Kind::InTau0);
    }
  }
}

TEST_CASE("min_support matches a brute-force minimum on materialized prefixes") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    VectorOrder o = ord({{2, 1}, {0, 1}});
    SupportSpec s(2);
    std::vector<LatticeVector> pts;
    for (int k = 0; k < 2; ++k) {
      LatticeVector v = random_vector(rng, 2, -2, 3);
      if (sign(o, v) != Cmp::Greater) continue;
      LatticeVector g = random_vector(rng, 2, -5, 5);
      IndexSet idx = k ? IndexSet::arithmetic(1 + trial % 3, 2) : squares();
      s.add_ray(g, v, idx);
      const auto& ray = s.rays().back();
      for (const auto& m : ray.indices.elements_up_to(1000)) pts.push_back(add(g, scale(ray.direction, m)));
    }
    if (pts.empty()) continue;
    LatticeVector best = pts.front();
    for (const auto& p : pts)
      if (compare(o, to_rational(p), to_rational(best)) == Cmp::Less) best = p;
    CHECK(min_support(s, o) == best);
  }
}

TEST_CASE("window materialization") {
  SupportSpec s = ray_spec(lv({0, 0}), lv({-1, 1}), squares());
  auto pts = materialize_window(s, 40, 1000);
  CHECK(pts.size() == 7);  // i = 0..6, i^2 <= 40
  CHECK_THROWS_WITH_AS(materialize_window(ray_spec(lv({0, 0}), lv({1, 0}), IndexSet::all()), 100, 10),
                       doctest::Contains("WindowTooLarge"), Error);
}
