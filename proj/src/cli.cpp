#include "coneseries/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "coneseries/error.hpp"
#include "coneseries/json_io.hpp"
#include "coneseries/linalg.hpp"
#include "coneseries/plot.hpp"

namespace coneseries {

namespace {

constexpr std::size_t kDefaultMaxPoints = 100000;

Error usage(const std::string& detail) { return Error("Usage", detail, Error::Kind::Usage); }

class Args {
 public:
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;

  bool has(const std::string& k) const { return values.count(k) && !values.at(k).empty(); }
  const std::string& str(const std::string& k) const {
    if (!has(k)) throw usage("missing --" + k);
    return values.at(k);
  }
  std::string str_or(const std::string& k, const std::string& fallback) const { return has(k) ? str(k) : fallback; }
  bool flag(const std::string& k) const { return flags.count(k) && flags.at(k); }

  // Any parse failure in a flag value is a usage error.
  template <class F>
  auto parsed(const std::string& k, F f) const {
    try {
      return f(str(k));
    } catch (const Error& e) {
      if (e.kind() == Error::Kind::Usage) throw;
      throw usage("--" + k + ": " + e.detail());
    }
  }
  RationalVector vec(const std::string& k) const {
    return parsed(k, [](const std::string& s) { return parse_rational_vector(s); });
  }
  LatticeVector lattice(const std::string& k) const {
    return parsed(k, [](const std::string& s) { return parse_lattice_vector(s); });
  }
  Rational rational(const std::string& k) const {
    return parsed(k, [](const std::string& s) { return parse_rational(s); });
  }
  Integer integer(const std::string& k) const {
    Rational q = rational(k);
    if (q.get_den() != 1) throw usage("--" + k + " must be an integer");
    return q.get_num();
  }
  std::size_t count(const std::string& k) const {
    Integer z = integer(k);
    if (z < 0 || !z.fits_ulong_p()) throw usage("--" + k + " must be a nonnegative integer");
    return z.get_ui();
  }
  Json doc(const std::string& k) const;
};

// Inline JSON when the text opens with a bracket, a file path otherwise.
Json Args::doc(const std::string& k) const {
  const std::string& text = str(k);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
  std::ifstream f(text);
  if (!f) throw Error("FileNotFound", "cannot read --" + k + " " + text, Error::Kind::Usage);
  return Json::parse(f);
}

std::size_t max_points() {
  const char* env = std::getenv("CONESERIES_MAX_POINTS");
  if (!env || !*env) return kDefaultMaxPoints;
  Integer z;
  if (z.set_str(env, 10) != 0 || z < 1 || !z.fits_ulong_p())
    throw usage("CONESERIES_MAX_POINTS must be a positive integer");
  return z.get_ui();
}

// omega refined to a total order, nonnegative on the first orthant when
// omega allows it; otherwise omega followed by independent unit vectors.
VectorOrder order_after(const RationalVector& omega) {
  const std::size_t n = omega.size();
  try {
    return refine_over_cone(omega, Cone::orthant(n));
  } catch (const Error& e) {
    if (e.code() != "ConeNotInHalfSpace") throw;
  }
  std::vector<RationalVector> vs{omega};
  for (std::size_t i = 0; i < n && vs.size() < n; ++i) {
    RationalVector e(n, 0);
    e[i] = 1;
    vs.push_back(e);
    if (rank(vs, n) < vs.size()) vs.pop_back();
  }
  return VectorOrder(vs);
}

struct Action {
  std::string group, name, help;
  std::vector<std::string> options;
  std::vector<std::string> switches;
  std::function<Json(const Args&)> run;
};

std::vector<Action> actions() {
  std::vector<Action> a;
  // cone
  a.push_back({"cone", "dual", "dual cone", {"in"}, {}, [](const Args& x) {
                 return encode(dual_cone(decode_cone(x.doc("in"))));
               }});
  a.push_back({"cone", "check", "strong convexity and dual", {"in"}, {}, [](const Args& x) {
                 Cone c = decode_cone(x.doc("in"));
                 return Json{{"cone", encode(c)}, {"strongly_convex", is_strongly_convex(c)},
                             {"dual", encode(dual_cone(c))}};
               }});
  a.push_back({"cone", "relint", "omega in the relative interior of the dual", {"in", "omega"}, {},
               [](const Args& x) {
                 return Json{{"relint_dual_contains", relint_dual_contains(decode_cone(x.doc("in")), x.vec("omega"))}};
               }});
  a.push_back({"cone", "join", "cone generated by both inputs", {"in", "with"}, {}, [](const Args& x) {
                 return encode(cone_join(decode_cone(x.doc("in")), decode_cone(x.doc("with"))));
               }});
  // order
  a.push_back({"order", "compare", "compare two exponents", {"order", "alpha", "beta"}, {}, [](const Args& x) {
                 return Json{{"cmp", to_string(compare(decode_order(x.doc("order")), x.vec("alpha"), x.vec("beta")))}};
               }});
  a.push_back({"order", "positive", "first orthant nonnegative", {"order"}, {}, [](const Args& x) {
                 return Json{{"positive", is_positive(decode_order(x.doc("order")))}};
               }});
  a.push_back({"order", "refine", "order extending omega, nonnegative on a cone", {"omega", "cone"}, {},
               [](const Args& x) { return encode(refine_over_cone(x.vec("omega"), decode_cone(x.doc("cone")))); }});
  // support
  a.push_back({"support", "slab", "points with u . omega <= level", {"support", "omega", "level"}, {},
               [](const Args& x) {
                 return encode(slab_count(decode_support(x.doc("support")), x.vec("omega"), x.rational("level")));
               }});
  a.push_back({"support", "tau", "classify omega", {"support", "omega"}, {}, [](const Args& x) {
                 return encode(tau_classify(decode_support(x.doc("support")), x.vec("omega")));
               }});
  a.push_back({"support", "family", "field family membership", {"support", "order"}, {}, [](const Args& x) {
                 auto w = field_family_witness(decode_support(x.doc("support")), decode_order(x.doc("order")));
                 Json j{{"in_field_family", w.has_value()}};
                 if (w) {
                   j["shift"] = encode(w->first);
                   j["cone"] = encode(w->second);
                 }
                 return j;
               }});
  a.push_back({"support", "min", "order-minimal support point", {"support", "order"}, {}, [](const Args& x) {
                 return encode(min_support(decode_support(x.doc("support")), decode_order(x.doc("order"))));
               }});
  // series
  a.push_back({"series", "nu", "weighted valuation", {"series", "omega"}, {}, [](const Args& x) {
                 return encode(nu_omega(decode_series(x.doc("series")), x.vec("omega")));
               }});
  a.push_back({"series", "init", "initial form", {"series", "omega"}, {}, [](const Args& x) {
                 return encode(initial_part(decode_series(x.doc("series")), x.vec("omega")));
               }});
  a.push_back({"series", "ray", "coefficients along gamma + m v", {"series", "gamma", "v", "count"}, {},
               [](const Args& x) {
                 std::size_t n = x.count("count");
                 if (n > max_points()) throw Error("WindowTooLarge", "count exceeds CONESERIES_MAX_POINTS");
                 RayPart r = ray_part(decode_series(x.doc("series")), x.lattice("gamma"), x.lattice("v"));
                 Json prefix = Json::array();
                 for (const auto& c : r.prefix(n)) prefix.push_back(encode(c));
                 return Json{{"on_ray", r.on_ray}, {"prefix", prefix}};
               }});
  a.push_back({"series", "combine", "sum or product to a horizon", {"series", "with", "op", "omega", "horizon"}, {},
               [](const Args& x) {
                 const std::string& op = x.str("op");
                 if (op != "add" && op != "mul") throw usage("--op must be add or mul");
                 return encode(combine(decode_series(x.doc("series")), decode_series(x.doc("with")),
                                       op == "add" ? SeriesOp::Add : SeriesOp::Multiply, x.vec("omega"),
                                       x.rational("horizon")));
               }});
  // roots
  a.push_back({"roots", "initials", "Newton polygon initial roots", {"poly", "omega"}, {}, [](const Args& x) {
                 Json out = Json::array();
                 for (const auto& r : newton_polygon_initials(decode_poly_over_series(x.doc("poly")), x.vec("omega")))
                   out.push_back(encode(r));
                 return out;
               }});
  a.push_back({"roots", "lift", "lift an initial root to a horizon",
               {"poly", "omega", "horizon", "alpha", "c", "order", "root", "gap-bound"}, {}, [](const Args& x) {
                 PolyOverSeries p = decode_poly_over_series(x.doc("poly"));
                 RationalVector omega = x.vec("omega");
                 VectorOrder o = x.has("order") ? decode_order(x.doc("order")) : order_after(omega);
                 RationalVector alpha;
                 Rational c;
                 if (x.has("alpha") || x.has("c")) {
                   alpha = x.vec("alpha");
                   c = x.rational("c");
                 } else {
                   // The selected simple initial root with a rational coefficient.
                   std::size_t want = x.has("root") ? x.count("root") : 0;
                   std::vector<InitialRoot> simple;
                   for (const auto& r : newton_polygon_initials(p, omega))
                     if (r.multiplicity == 1) simple.push_back(r);
                   if (want >= simple.size()) throw Error("NotSimpleRoot", "no simple initial root with that index");
                   alpha = simple[want].alpha;
                   c = simple[want].c;
                 }
                 std::optional<Integer> gap;
                 if (x.has("gap-bound")) gap = x.integer("gap-bound");
                 return encode(hensel_lift(p, alpha, c, o, x.rational("horizon"), gap));
               }});
  // dfinite
  a.push_back({"dfinite", "ode", "linear ODE of an algebraic series", {"q"}, {}, [](const Args& x) {
                 return encode(algebraic_to_ode(decode_bipoly(x.doc("q"))));
               }});
  a.push_back({"dfinite", "rec", "P-recurrence from an ODE or algebraic equation", {"ode", "q"}, {},
               [](const Args& x) {
                 LinearOde ode = x.has("ode") ? decode_ode(x.doc("ode")) : algebraic_to_ode(decode_bipoly(x.doc("q")));
                 return encode(ode_to_recurrence(ode));
               }});
  a.push_back({"dfinite", "gapconst", "coefficient gap bound", {"rec", "omega", "v"}, {"cauchy"},
               [](const Args& x) {
                 return encode(
                     gap_constant(decode_recurrence(x.doc("rec")), x.vec("omega"), x.lattice("v"), x.flag("cauchy")));
               }});
  // check
  a.push_back({"check", "gap", "level-gap certificate", {"support", "omega"}, {}, [](const Args& x) {
                 return encode(gap_certificate(decode_support(x.doc("support")), x.vec("omega")));
               }});
  a.push_back({"check", "liouville", "approximation-ratio certificate", {"series", "omega", "a-max", "n-max"}, {},
               [](const Args& x) {
                 return encode(liouville_certificate(decode_ray_series(x.doc("series")), x.vec("omega"),
                                                     x.has("a-max") ? x.rational("a-max") : Rational(100),
                                                     x.has("n-max") ? x.count("n-max") : 10));
               }});
  a.push_back({"check", "dioph", "a = 1 Diophantine scan", {"series", "omega", "box", "b", "beta"}, {},
               [](const Args& x) {
                 RaySeries xi = decode_ray_series(x.doc("series"));
                 if (x.has("beta"))
                   return Json{{"sup_nu", encode(dioph_sup_nu(xi, x.lattice("beta"), x.vec("omega")))}};
                 Integer box = x.has("box") ? x.integer("box") : Integer(20);
                 Integer side = box + 1, total = 1;
                 for (std::size_t i = 0; i < xi.v.size(); ++i) total *= side;
                 if (total > Integer(static_cast<unsigned long>(max_points())))
                   throw Error("WindowTooLarge", "beta box exceeds CONESERIES_MAX_POINTS");
                 return encode(dioph_a1_scan(xi, x.vec("omega"), box, x.has("b") ? x.rational("b") : Rational(0)));
               }});
  a.push_back({"check", "replay", "recompute a certificate", {"cert"}, {}, [](const Args& x) {
                 Json c = x.doc("cert");
                 return Json{{"replayed", replay(c)}};
               }});
  // plot
  a.push_back({"plot", "support", "CSV and SVG of a support window", {"support", "omega", "window", "out"}, {},
               [](const Args& x) {
                 SupportSpec s = decode_support(x.doc("support"));
                 RationalVector omega = x.vec("omega");
                 Integer window = x.integer("window");
                 std::size_t cap = max_points();
                 SupportPlot plot = render_support_plot(s, omega, window, cap);
                 Json j{{"points", plot.points.size()}, {"tau", encode(plot.tau)}};
                 if (x.has("out")) {
                   Json files = Json::array();
                   for (const auto& f : emit_support_plot(s, omega, window, x.str("out"), cap)) files.push_back(f);
                   j["files"] = files;
                 } else {
                   j["csv"] = plot.csv;
                 }
                 return j;
               }});
  return a;
}

void report(std::ostream& err, const std::string& code, const std::string& detail) {
  err << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cone-supported Laurent series toolkit", "coneseries"};
  app.require_subcommand(1);
  std::vector<Action> table = actions();
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, Args>> parsed(table.size());
  // Stable storage: CLI11 binds to these strings.
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Action& act = table[i];
    CLI::App*& g = groups[act.group];
    if (!g) {
      g = app.add_subcommand(act.group, act.group + " operations");
      g->require_subcommand(1);
    }
    CLI::App* sub = g->add_subcommand(act.name, act.help);
    parsed[i].first = sub;
    for (const auto& o : act.options) sub->add_option("--" + o, parsed[i].second.values[o]);
    for (const auto& s : act.switches) sub->add_flag("--" + s, parsed[i].second.flags[s]);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "Usage", e.what());
    return 1;
  }

  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!parsed[i].first->parsed()) continue;
    try {
      Json result = table[i].run(parsed[i].second);
      out << canonical_dump(result) << "\n";
      return 0;
    } catch (const Error& e) {
      report(err, e.code(), e.detail());
      return e.kind() == Error::Kind::Usage ? 1 : 2;
    } catch (const Json::exception& e) {
      report(err, "BadDocument", e.what());
      return 1;
    } catch (const std::exception& e) {
      report(err, "InternalError", e.what());
      return 2;
    }
  }
  report(err, "Usage", "no action selected");
  return 1;
}

}  // namespace coneseries
