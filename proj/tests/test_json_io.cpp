#include "coneseries/error.hpp"
#include "coneseries/json_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace coneseries;
using namespace fixtures;

TEST_CASE("scalar encodings") {
  CHECK(encode(Rational(-1, 2)) == Json("-1/2"));
  CHECK(encode(Rational(4)) == Json("4"));
  CHECK(encode(Integer(-7)) == Json(-7));
  Integer big("123456789012345678901234567890");
  CHECK(encode(big) == Json("123456789012345678901234567890"));
  CHECK(decode_integer(encode(big)) == big);
  CHECK(decode_rational(Json(5)) == 5);
  CHECK(decode_rational(Json("2/4")) == Rational(1, 2));
  CHECK_THROWS_WITH_AS(decode_rational(Json("1/0")), doctest::Contains("BadDocument"), Error);
  CHECK_THROWS_WITH_AS(decode_integer(Json("1/2")), doctest::Contains("BadDocument"), Error);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("document round trips") {
  Cone c = cone(2, {{0, 1}, {1, 0}, {-1, 1}});
  CHECK(decode_cone(encode(c)) == c);
  VectorOrder o({rv({1, 2}), rv({1, 0})});
  CHECK(decode_order(encode(o)) == o);
  for (const auto& s : {IndexSet::all(), IndexSet::arithmetic(2, 3), IndexSet::polynomial(UniPoly{0, 0, 1}),
                        IndexSet::factorial(), IndexSet::factorial().scaled(3), IndexSet::explicit_values({1, 4}),
                        IndexSet::bounded_gap_tail(0, 4)})
    CHECK(decode_index_set(encode(s)) == s);

  SupportSpec sp(2, 2);
  sp.add_point(lv({1, 0}));
  sp.add_ray(lv({0, 0}), lv({-1, 1}), IndexSet::factorial());
  sp.add_tail(lv({-2, 0}), Cone::orthant(2));
  CHECK(decode_support(encode(sp)) == sp);

  LaurentSeriesValue f = laurent({{{1, 0}, 1}, {{0, 1}, -2}});
  f.add_ray(RayTerm{lv({0, 0}), lv({-1, 2}), IndexSet::polynomial(UniPoly{1, 0, 1}), Rational(1, 3)});
  CHECK(decode_series(encode(f)) == f);
  LaurentSeriesValue g = laurent({{{1, 0}, 1}, {{0, 1}, -2}, {{3, 3}, 5}});
  g.truncate(rv({1, 1}), 4);
  CHECK(decode_series(encode(g)) == g);

  PolyOverSeries p = sqrt_of_sum();
  Json pj = encode(p);
  CHECK(encode(decode_poly_over_series(pj)) == pj);

  BiPoly q({UniPoly{-1, -1}, UniPoly{}, UniPoly{1}});
  CHECK(decode_bipoly(encode(q)) == q);
  PRecurrence rec{{UniPoly{-1, 2}, UniPoly{0, 2}}, 0};
  CHECK(decode_recurrence(encode(rec)) == rec);
  LinearOde ode{{UniPoly{-1}, UniPoly{2, 2}}};
  CHECK(decode_ode(encode(ode)) == ode);

  RaySeries xi{lv({0, 0}), lv({1, -1}), IndexSet::all(), {}};
  xi.coefficients.kind = CoefficientRule::Kind::Algebraic;
  xi.coefficients.q = q;
  xi.coefficients.y0 = 1;
  CHECK(decode_ray_series(encode(xi)) == xi);
}

TEST_CASE("hensel output round trips through its root document") {
  HenselResult h = hensel_lift(sqrt_of_sum(), RationalVector{Rational(1, 2), 0}, 1, VectorOrder({rv({1, 2}), rv({1, 0})}), 6);
  Json j = encode(h);
  LaurentSeriesValue back = decode_series(j.at("root"));
  CHECK(back == h.root);
  CHECK(canonical_dump(encode(back)) == canonical_dump(j.at("root")));
}

TEST_CASE("malformed documents are usage errors") {
  try {
    decode_support(Json{{"points", Json::array()}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "BadDocument");
    CHECK(e.kind() == Error::Kind::Usage);
  }
  CHECK_THROWS_AS(decode_index_set(Json{{"kind", "Nope"}}), Error);
  CHECK_THROWS_AS(decode_cone(Json{{"generators", Json::array({Json::array({1, 0}), Json::array({1})})}}), Error);
}
