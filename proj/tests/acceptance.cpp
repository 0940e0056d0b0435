// One line per acceptance criterion; exit status is nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "coneseries/algebraic.hpp"
#include "coneseries/cli.hpp"
#include "coneseries/dfinite.hpp"
#include "coneseries/error.hpp"
#include "coneseries/json_io.hpp"
#include "coneseries/linalg.hpp"
#include "coneseries/order.hpp"
#include "fixtures.hpp"

using namespace coneseries;
using namespace fixtures;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok;
  std::string detail;
};

Json run_cli(const std::vector<std::string>& args, int& rc) {
  std::ostringstream out, err;
  rc = dispatch(args, out, err);
  if (rc != 0) throw std::runtime_error("cli exited " + std::to_string(rc) + ": " + err.str());
  return Json::parse(out.str());
}

Outcome criterion1() {
  auto t0 = Clock::now();
  Cone intro = cone(2, {{0, 1}, {1, 0}, {-1, 1}});
  bool ok = is_strongly_convex(intro) && dual_cone(intro) == cone(2, {{0, 1}, {1, 1}});
  std::mt19937 rng(2024);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 2;
    Cone c = random_cone(rng, n);
    Cone d = dual_cone(c);
    if (!(dual_cone(d) == c)) ++bad;
    if (is_strongly_convex(c) != (d.dimension() == n)) ++bad;
  }
  double secs = seconds_since(t0);
  ok = ok && bad == 0 && secs < 5;
  char buf[128];
  std::snprintf(buf, sizeof buf, "200 random cones, %d failures, intro cone ok, %.2fs", bad, secs);
  return {ok, buf};
}

Outcome criterion2() {
  std::mt19937 rng(17);
  int checked = 0, disagree = 0;
  while (checked < 100) {
    std::size_t n = 2 + checked % 2;
    Cone c = random_cone(rng, n);
    RationalVector omega = to_rational(random_vector(rng, n, -3, 3));
    if (!c.strongly_convex() || is_zero(omega)) continue;
    std::vector<RationalVector> basis;
    for (const auto& k : nullspace({omega}, n)) basis.push_back(k);
    if (signflip_relint_test(c, omega, basis) != relint_dual_contains(c, omega)) ++disagree;
    ++checked;
  }
  return {disagree == 0, std::to_string(checked) + " pairs, " + std::to_string(disagree) + " disagreements"};
}

// Compares the lifted coefficients at real exponents base + m step with the
// Taylor oracle of Y^2 - (1 + T) through 1.
bool matches_binomial(const HenselResult& h, const RationalVector& base, const RationalVector& step, int count) {
  TruncatedSeries oracle = taylor_of_algebraic(BiPoly({UniPoly{-1, -1}, UniPoly{}, UniPoly{1}}), 1, count);
  const Rational k(h.root.ramification());
  for (int m = 0; m < count; ++m) {
    LatticeVector stored;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Rational x = (base[i] + Rational(m) * step[i]) * k;
      if (x.get_den() != 1) return false;
      stored.push_back(x.get_num());
    }
    if (h.root.coefficient(stored) != oracle[m]) return false;
  }
  return true;
}

Outcome criterion3() {
  HenselResult a = hensel_lift(sqrt_of_sum(), RationalVector{Rational(1, 2), 0}, 1,
                               VectorOrder({rv({1, 2}), rv({1, 0})}), 8);
  bool ok_a = matches_binomial(a, {Rational(1, 2), 0}, {-1, 1}, 8) && (!a.residual_nu || *a.residual_nu > 8);
  HenselResult b = hensel_lift(sqrt_of_ratio(), rv({0, 0}), 1, VectorOrder({rv({2, 1}), rv({0, 1})}), 8);
  bool ok_b = matches_binomial(b, {0, 0}, {1, -1}, 8) && (!b.residual_nu || *b.residual_nu > 8);
  auto nu = [](const HenselResult& h) { return h.residual_nu ? to_string(*h.residual_nu) : std::string("inf"); };
  return {ok_a && ok_b, "sqrt(x1+x2) at (1,2): residual nu " + nu(a) + "; sqrt(1+x1/x2) at (2,1): residual nu " + nu(b)};
}

Outcome criterion4() {
  BiPoly q({UniPoly{-1, -1}, UniPoly{}, UniPoly{1}});
  PRecurrence rec = ode_to_recurrence(algebraic_to_ode(q));
  bool shape = rec.qs == std::vector<UniPoly>{UniPoly{-1, 2}, UniPoly{0, 2}};
  TruncatedSeries f = taylor_of_algebraic(q, 1, 201);
  bool annihilates = true;
  for (std::size_t m = 0; m + rec.span() < 50; ++m) annihilates = annihilates && recurrence_residual(rec, f, m) == 0;
  GapBound g = gap_constant(rec, rv({1}), lv({1}));
  Integer worst = 0;
  std::size_t last = g.r.get_ui();
  for (std::size_t i = last + 1; i <= 200; ++i) {
    if (f[i] == 0) continue;
    worst = std::max(worst, Integer(static_cast<unsigned long>(i - last)));
    last = i;
  }
  bool ok = shape && annihilates && Rational(worst) <= g.c;
  return {ok, "2(m+1)a(m+1) + (2m-1)a(m) = 0 on 50 terms, C = " + to_string(g.c) + ", largest gap " +
                  worst.get_str() + " through 200"};
}

std::string squares_support() {
  SupportSpec s(2);
  s.add_point(lv({0, 0}));
  s.add_ray(lv({0, 0}), lv({-1, 1}), IndexSet::polynomial(UniPoly{0, 0, 1}));
  return encode(s).dump();
}

Outcome criterion5() {
  int rc = 0;
  Json c = run_cli({"check", "gap", "--support", squares_support(), "--omega", "1,2"}, rc);
  bool ok = c.at("verdict") == "NotAlgebraicGap";
  const Json& inst = c.at("witness").at("instances");
  // k(i) = i^2 at omega = (1, 2), so the gap is 2i + 1.
  for (long i = 1; i <= 3; ++i) {
    const Json& row = inst.at(i - 1);
    ok = ok && decode_integer(row.at("i")) == i && decode_rational(row.at("gap")) == 2 * i + 1 &&
         decode_rational(row.at("k_next")) - decode_rational(row.at("k_i")) == 2 * i + 1;
  }
  ok = ok && c.at("witness").at("closed_forms").at(0).at("gap") == "k(i+1) - k(i) = 2i + 1" && replay(c);
  return {ok, "verdict " + c.at("verdict").get<std::string>() + ", gaps 3, 5, 7, replayed"};
}

Outcome criterion6() {
  int rc = 0;
  RaySeries fact{lv({0, 0}), lv({-1, 1}), IndexSet::factorial(), {}};
  Json f = run_cli({"check", "liouville", "--series", encode(fact).dump(), "--omega", "1,2", "--n-max", "6"}, rc);
  bool ok = f.at("verdict") == "NotAlgebraicLiouville";
  for (long n = 1; n <= 3; ++n) ok = ok && decode_rational(f.at("witness").at("table").at(n - 1).at("ratio")) == n + 1;
  RaySeries sq{lv({0, 0}), lv({-1, 1}), IndexSet::polynomial(UniPoly{0, 0, 1}), {}};
  Json s = run_cli({"check", "liouville", "--series", encode(sq).dump(), "--omega", "1,2", "--a-max", "4",
                    "--n-max", "20"},
                   rc);
  ok = ok && s.at("verdict") == "ConsistentToHorizon" && replay(f) && replay(s);
  return {ok, "i! ray " + f.at("verdict").get<std::string>() + " with ratios 2, 3, 4; i^2 ray " +
                  s.at("verdict").get<std::string>()};
}

Outcome criterion7() {
  RaySeries xi{lv({0, 0}), lv({1, -1}), IndexSet::all(), {}};
  xi.coefficients.kind = CoefficientRule::Kind::Algebraic;
  xi.coefficients.q = BiPoly({UniPoly{-1, -1}, UniPoly{}, UniPoly{1}});
  xi.coefficients.y0 = 1;
  int rc = 0;
  std::string doc = encode(xi).dump();
  Json h = run_cli({"check", "dioph", "--series", doc, "--omega", "2,1", "--box", "20", "--b", "1"}, rc);
  Json f = run_cli({"check", "dioph", "--series", doc, "--omega", "3,1", "--box", "20", "--b", "1"}, rc);
  bool ok = h.at("verdict") == "DiophantineA1Holds" && decode_rational(h.at("witness").at("b")) == 1 &&
            f.at("verdict") == "DiophantineA1Fails" && f.at("witness").contains("divergent_direction");
  return {ok, "omega (2,1) " + h.at("verdict").get<std::string>() + " b = " +
                  h.at("witness").at("b").get<std::string>() + "; omega (3,1) " + f.at("verdict").get<std::string>() +
                  " along " + f.at("witness").at("divergent_direction").dump()};
}

Outcome criterion8() {
  struct Case {
    PolyOverSeries p;
    VectorOrder o;
  };
  std::vector<Case> corpus{
      {sqrt_of_sum(), VectorOrder({rv({1, 2}), rv({1, 0})})},
      {sqrt_of_ratio(), VectorOrder({rv({2, 1}), rv({0, 1})})},
      {sqrt_of_ratio(), VectorOrder({rv({1, 2}), rv({1, 0})})},
      {cbrt_of_sum(), VectorOrder({rv({1, 3}), rv({1, 0})})},
      {geometric_ratio(), VectorOrder({rv({2, 1}), rv({0, 1})})},
      {poly_t({laurent({{{1, 1}, 1}}), laurent({{{1, 0}, -1}, {{0, 1}, -1}}), laurent({{{0, 0}, 1}})}),
       VectorOrder({rv({1, 2}), rv({1, 0})})},
  };
  int consistent = 0, refuted = 0, localized = 0, other = 0;
  for (const auto& cs : corpus) {
    const RationalVector& w = cs.o.vectors().front();
    for (const auto& r : newton_polygon_initials(cs.p, w)) {
      HenselResult h = hensel_lift(cs.p, r.alpha, r.c, cs.o, 8);
      try {
        Certificate c = gap_certificate(h.root.support(), w);
        if (c.verdict == Verdict::ConsistentToHorizon) ++consistent;
        else ++refuted;
      } catch (const Error& e) {
        if (e.code() == "PreconditionLocalized") ++localized;
        else ++other;
      }
    }
  }
  bool ok = refuted == 0 && other == 0 && consistent > 0;
  return {ok, std::to_string(consistent) + " consistent, " + std::to_string(refuted) + " refuted, " +
                  std::to_string(localized) + " polynomial supports outside the hypotheses"};
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cone kernel", criterion1},       {"sign-flip equivalence", criterion2}, {"root expansion", criterion3},
      {"d-finite engine", criterion4},   {"gap reproduction", criterion5},      {"liouville reproduction", criterion6},
      {"diophantine a = 1", criterion7}, {"soundness cross-check", criterion8},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index++ << " (" << name << "): " << o.detail << "\n";
  }
  double secs = seconds_since(t0);
  bool fast = secs < 60;
  if (!fast) ++failures;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.2fs for the acceptance run, exact arithmetic throughout", secs);
  std::cout << (fast ? "PASS" : "FAIL") << " criterion 9 (wall clock): " << buf << "\n";
  return failures == 0 ? 0 : 1;
}
