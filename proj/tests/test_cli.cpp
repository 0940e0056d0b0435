#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coneseries/cli.hpp"
#include "coneseries/error.hpp"
#include "coneseries/json_io.hpp"
#include "coneseries/plot.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace coneseries;
using namespace fixtures;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = dispatch(args, out, err);
  return {rc, out.str(), err.str()};
}

SupportSpec squares() {
  SupportSpec s(2);
  s.add_ray(lv({0, 0}), lv({-1, 1}), IndexSet::polynomial(UniPoly{0, 0, 1}));
  return s;
}

}  // namespace

TEST_CASE("cone subcommands") {
  Run r = cli({"cone", "dual", "--in", encode(Cone::orthant(2)).dump()});
  CHECK(r.rc == 0);
  CHECK(decode_cone(Json::parse(r.out)) == Cone::orthant(2));

  Run c = cli({"cone", "check", "--in", encode(cone(2, {{0, 1}, {1, 0}, {-1, 1}})).dump()});
  Json j = Json::parse(c.out);
  CHECK(j.at("strongly_convex") == true);
  CHECK(decode_cone(j.at("dual")) == cone(2, {{0, 1}, {1, 1}}));

  CHECK(Json::parse(cli({"cone", "relint", "--in", encode(Cone::orthant(2)).dump(), "--omega", "1,1/2"}).out)
            .at("relint_dual_contains") == true);
  Run jn = cli({"cone", "join", "--in", encode(cone(2, {{1, 0}})).dump(), "--with", encode(cone(2, {{0, 1}})).dump()});
  CHECK(decode_cone(Json::parse(jn.out)) == Cone::orthant(2));
}

TEST_CASE("documents from files") {
  auto path = std::filesystem::temp_directory_path() / "coneseries_orthant.json";
  std::ofstream(path) << encode(Cone::orthant(3)).dump();
  Run r = cli({"cone", "dual", "--in", path.string()});
  CHECK(r.rc == 0);
  CHECK(decode_cone(Json::parse(r.out)) == Cone::orthant(3));
  std::filesystem::remove(path);
  Run missing = cli({"cone", "dual", "--in", path.string()});
  CHECK(missing.rc == 1);
  CHECK(Json::parse(missing.err).at("error") == "FileNotFound");
}

TEST_CASE("exit codes and error documents") {
  Run none = cli({});
  CHECK(none.rc == 1);
  CHECK(Json::parse(none.err).at("error") == "Usage");

  Run bad_flag = cli({"cone", "dual", "--nope", "1"});
  CHECK(bad_flag.rc == 1);

  Run bad_json = cli({"cone", "dual", "--in", "{not json"});
  CHECK(bad_json.rc == 1);
  CHECK(Json::parse(bad_json.err).at("error") == "BadDocument");

  Run bad_vec = cli({"support", "tau", "--support", encode(squares()).dump(), "--omega", "1,x"});
  CHECK(bad_vec.rc == 1);

  Run domain = cli({"check", "gap", "--support", encode(squares()).dump(), "--omega", "2,1"});
  CHECK(domain.rc == 2);
  Json e = Json::parse(domain.err);
  CHECK(e.at("error") == "Inconclusive");
  CHECK(e.contains("detail"));

  Run help = cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("check") != std::string::npos);
}

TEST_CASE("refutations exit zero and are deterministic") {
  std::vector<std::string> args{"check", "gap", "--support", encode(squares()).dump(), "--omega", "1,2"};
  Run a = cli(args), b = cli(args);
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  Json c = Json::parse(a.out);
  CHECK(c.at("verdict") == "NotAlgebraicGap");
  CHECK(Json::parse(cli({"check", "replay", "--cert", a.out}).out).at("replayed") == true);
}

TEST_CASE("emitted documents read back identically") {
  Json lift = Json::parse(
      cli({"roots", "lift", "--poly", encode(sqrt_of_sum()).dump(), "--omega", "1,2", "--horizon", "8"}).out);
  LaurentSeriesValue root = decode_series(lift.at("root"));
  CHECK(canonical_dump(encode(root)) == canonical_dump(lift.at("root")));

  Json initials = Json::parse(cli({"roots", "initials", "--poly", encode(sqrt_of_sum()).dump(), "--omega", "1,2"}).out);
  CHECK(initials.size() == 2);
  // Without --alpha the first simple initial root is lifted.
  CHECK(root.coefficient(lv({1, 0})) == decode_rational(initials[0].at("c")));
  Json second = Json::parse(cli({"roots", "lift", "--poly", encode(sqrt_of_sum()).dump(), "--omega", "1,2",
                                 "--horizon", "8", "--root", "1"})
                                .out);
  CHECK(decode_series(second.at("root")).coefficient(lv({1, 0})) == decode_rational(initials[1].at("c")));

  Json spec = Json::parse(cli({"support", "tau", "--support", encode(squares()).dump(), "--omega", "1,1"}).out);
  CHECK(spec.at("kind") == "Boundary");

  BiPoly q({UniPoly{-1, -1}, UniPoly{}, UniPoly{1}});
  Json ode = Json::parse(cli({"dfinite", "ode", "--q", encode(q).dump()}).out);
  CHECK(canonical_dump(encode(decode_ode(ode))) == canonical_dump(ode));
  Json rec = Json::parse(cli({"dfinite", "rec", "--ode", ode.dump()}).out);
  CHECK(decode_recurrence(rec).qs == std::vector<UniPoly>{UniPoly{-1, 2}, UniPoly{0, 2}});
  CHECK(canonical_dump(encode(decode_recurrence(rec))) == canonical_dump(rec));
  Json g = Json::parse(cli({"dfinite", "gapconst", "--rec", rec.dump(), "--omega", "1", "--v", "1"}).out);
  CHECK(decode_rational(g.at("C")) == 4);
}

TEST_CASE("series and order subcommands") {
  LaurentSeriesValue f = laurent({{{1, 0}, 2}, {{0, 1}, 3}, {{2, 2}, 1}});
  Json nu = Json::parse(cli({"series", "nu", "--series", encode(f).dump(), "--omega", "1,2"}).out);
  CHECK(decode_rational(nu) == 1);
  Json init = Json::parse(cli({"series", "init", "--series", encode(f).dump(), "--omega", "1,1"}).out);
  CHECK(decode_series(init).terms().size() == 2);
  Json sum = Json::parse(cli({"series", "combine", "--series", encode(f).dump(), "--with", encode(f).dump(), "--op",
                              "add", "--omega", "1,1", "--horizon", "10"})
                             .out);
  CHECK(decode_series(sum).coefficient(lv({1, 0})) == 4);
  CHECK(cli({"series", "combine", "--series", encode(f).dump(), "--with", encode(f).dump(), "--op", "pow", "--omega",
             "1,1", "--horizon", "10"})
            .rc == 1);

  VectorOrder o({rv({1, 2}), rv({1, 0})});
  Json cmp = Json::parse(cli({"order", "compare", "--order", encode(o).dump(), "--alpha", "1,0", "--beta", "0,1"}).out);
  CHECK(cmp.at("cmp") == to_string(compare(o, rv({1, 0}), rv({0, 1}))));
  CHECK(Json::parse(cli({"order", "positive", "--order", encode(o).dump()}).out).at("positive") == true);
}

TEST_CASE("support plots") {
  // The i^2 ray sits on the boundary line u . (1, 1) = 0.
  SupportPlot p = render_support_plot(squares(), rv({1, 1}), 40, 100000);
  CHECK(p.tau.kind == TauClass::Kind::Boundary);
  CHECK(p.tau.lambda0 == 0);
  CHECK(p.points.size() == 7);
  for (const auto& u : p.points) CHECK(dot(rv({1, 1}), u) == 0);
  REQUIRE(p.svg);
  CHECK(p.svg->find("class=\"boundary\"") != std::string::npos);

  SupportSpec orth(2);
  orth.add_tail(lv({0, 0}), Cone::orthant(2));
  SupportPlot q = render_support_plot(orth, rv({1, 1}), 3, 100000);
  CHECK(q.tau.kind == TauClass::Kind::InTau0);
  CHECK(q.svg->find("class=\"boundary\"") == std::string::npos);
  CHECK(q.points.size() == 16);

  // CSV rows against brute force over the window.
  SupportSpec two(2);
  two.add_ray(lv({0, 0}), lv({1, 0}), IndexSet::all());
  two.add_ray(lv({0, 1}), lv({1, 1}), IndexSet::arithmetic(0, 2));
  SupportPlot t = render_support_plot(two, rv({1, 1}), 9, 100000);
  std::size_t brute = 0;
  for (long x = -9; x <= 9; ++x)
    for (long y = -9; y <= 9; ++y) {
      bool on_first = y == 0 && x >= 0;
      bool on_second = y >= 1 && x == y - 1 && (y - 1) % 2 == 0;
      brute += on_first || on_second;
    }
  CHECK(brute == 15);
  CHECK(t.points.size() == brute);
  CHECK(static_cast<std::size_t>(std::count(t.csv.begin(), t.csv.end(), '\n')) == brute + 1);

  CHECK_THROWS_WITH_AS(render_support_plot(squares(), rv({1, 1}), 40, 3), doctest::Contains("WindowTooLarge"), Error);

  SupportSpec three(3);
  three.add_point(lv({1, 2, 3}));
  SupportPlot c3 = render_support_plot(three, rv({1, 1, 1}), 5, 10);
  CHECK(!c3.svg);
  CHECK(c3.csv == "x1,x2,x3,level\n1,2,3,6\n");
}

TEST_CASE("plot command writes files and honours the point cap") {
  auto base = (std::filesystem::temp_directory_path() / "coneseries_plot").string();
  Run r = cli({"plot", "support", "--support", encode(squares()).dump(), "--omega", "1,1", "--window", "40", "--out",
               base});
  CHECK(r.rc == 0);
  CHECK(std::filesystem::exists(base + ".csv"));
  CHECK(std::filesystem::exists(base + ".svg"));
  std::filesystem::remove(base + ".csv");
  std::filesystem::remove(base + ".svg");

  setenv("CONESERIES_MAX_POINTS", "3", 1);
  Run capped = cli({"plot", "support", "--support", encode(squares()).dump(), "--omega", "1,1", "--window", "40"});
  unsetenv("CONESERIES_MAX_POINTS");
  CHECK(capped.rc == 2);
  CHECK(Json::parse(capped.err).at("error") == "WindowTooLarge");
}
