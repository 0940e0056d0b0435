#include "coneseries/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "coneseries/error.hpp"
#include "coneseries/poly.hpp"

namespace coneseries {

namespace {

bool is_zero_series(const LaurentSeriesValue& f) {
  return f.known().everywhere && f.terms().empty() && f.rays().empty();
}

Integer denominator_lcm(const RationalVector& v) {
  Integer k = 1;
  for (const auto& x : v) k = lcm_of(k, x.get_den());
  return k;
}

RationalVector real_coordinates(const LatticeVector& stored, const Integer& k) {
  RationalVector out;
  for (const auto& x : stored) out.push_back(make_rational(x, k));
  return out;
}

Rational coefficient_nu(const LaurentSeriesValue& a, const RationalVector& omega) {
  try {
    return nu_omega(a, omega);
  } catch (const Error& e) {
    if (e.code() == "HorizonExceedsKnowledge")
      throw Error("HorizonExceedsCoefficientKnowledge", "a coefficient has no known term below its horizon");
    throw;
  }
}

// Laurent polynomial arithmetic in stored coordinates with a fixed
// ramification; terms above a level cap are discarded.
class Graded {
 public:
  Graded(RationalVector omega, Integer k) : omega_(std::move(omega)), k_(std::move(k)) {}

  Rational level(const LatticeVector& e) const { return dot(omega_, e) / Rational(k_); }

  TermMap mul(const TermMap& a, const TermMap& b, const std::optional<Rational>& cap) const {
    TermMap out;
    std::vector<std::pair<const LatticeVector*, Rational>> bl;
    for (const auto& [e, c] : b) bl.emplace_back(&e, level(e));
    for (const auto& [ea, ca] : a) {
      Rational la = level(ea);
      std::size_t j = 0;
      for (const auto& [eb, cb] : b) {
        const Rational& lb = bl[j++].second;
        if (cap && la + lb > *cap) continue;
        LatticeVector e = add(ea, eb);
        Rational& slot = out[e];
        slot += ca * cb;
        if (slot == 0) out.erase(e);
      }
    }
    return out;
  }

  static void accumulate(TermMap& into, const TermMap& a, const Rational& w) {
    for (const auto& [e, c] : a) {
      Rational& slot = into[e];
      slot += w * c;
      if (slot == 0) into.erase(e);
    }
  }

  Rational min_level(const TermMap& a) const {
    Rational best = level(a.begin()->first);
    for (const auto& [e, c] : a) best = std::min(best, level(e));
    return best;
  }

 private:
  RationalVector omega_;
  Integer k_;
};

struct Materialized {
  std::vector<TermMap> a;          // stored at the working ramification
  std::vector<std::optional<Rational>> nu;  // nullopt for zero coefficients
};

// sum_i w_i a_i xi^(i - s), with s = 1 and w_i = i for the derivative.
TermMap evaluate(const Graded& g, const Materialized& m, const TermMap& xi, const Rational& t, bool derivative,
                 const std::optional<Rational>& cap) {
  const std::size_t d = m.a.size() - 1;
  const std::size_t s = derivative ? 1 : 0;
  auto needed = [&](std::size_t j) -> std::optional<Rational> {
    if (!cap) return std::nullopt;
    std::optional<Rational> best;
    for (std::size_t i = j + s; i <= d; ++i) {
      if (!m.nu[i]) continue;
      Rational x = *cap - *m.nu[i] - Rational(static_cast<long>(i - s - j)) * t;
      if (!best || x > *best) best = x;
    }
    return best;
  };
  TermMap out;
  TermMap power;
  power[LatticeVector(xi.begin()->first.size(), Integer(0))] = 1;
  for (std::size_t j = 0; j + s <= d; ++j) {
    if (j > 0) {
      auto cut = needed(j);
      if (cap && !cut) break;
      power = g.mul(power, xi, cut);
    }
    std::size_t i = j + s;
    if (!m.nu[i]) continue;
    TermMap term = g.mul(m.a[i], power, cap);
    Graded::accumulate(out, term, derivative ? Rational(static_cast<long>(i)) : Rational(1));
  }
  return out;
}

}  // namespace

void validate(const PolyOverSeries& p) {
  if (p.coefficients.size() < 2) throw Error("BadPolynomial", "degree must be at least 1");
  const std::size_t n = p.coefficients.front().ambient();
  for (const auto& a : p.coefficients)
    if (a.ambient() != n) throw Error("DimensionMismatch", "coefficients of different dimensions");
  if (is_zero_series(p.coefficients.back())) throw Error("BadPolynomial", "leading coefficient is zero");
}

std::vector<InitialRoot> newton_polygon_initials(const PolyOverSeries& p, const RationalVector& omega) {
  validate(p);
  if (omega.size() != p.coefficients.front().ambient()) throw Error("DimensionMismatch", "omega of wrong dimension");
  struct Vertex {
    std::size_t i;
    Rational nu;
    RationalVector beta;
    Rational c;
  };
  std::vector<Vertex> pts;
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
    const auto& a = p.coefficients[i];
    if (is_zero_series(a)) continue;
    LaurentSeriesValue in = initial_part(a, omega);
    if (in.terms().size() != 1 || !in.rays().empty())
      throw Error("DegenerateInitialForm", "the initial form of a_" + std::to_string(i) + " is not a monomial");
    const auto& [e, c] = *in.terms().begin();
    pts.push_back({i, coefficient_nu(a, omega), real_coordinates(e, a.ramification()), c});
  }

  // Lower convex hull of (i, nu_i), left to right.
  std::vector<std::size_t> hull;
  for (std::size_t q = 0; q < pts.size(); ++q) {
    while (hull.size() >= 2) {
      const Vertex& a = pts[hull[hull.size() - 2]];
      const Vertex& b = pts[hull.back()];
      const Vertex& c = pts[q];
      Rational cross = Rational(static_cast<long>(b.i - a.i)) * (c.nu - a.nu) -
                       (b.nu - a.nu) * Rational(static_cast<long>(c.i - a.i));
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(q);
  }

  std::vector<InitialRoot> out;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const Vertex& v0 = pts[hull[h]];
    const Vertex& v1 = pts[hull[h + 1]];
    Rational t = (v0.nu - v1.nu) / Rational(static_cast<long>(v1.i - v0.i));
    Rational low = v0.nu + Rational(static_cast<long>(v0.i)) * t;
    std::vector<const Vertex*> edge;
    for (const auto& v : pts)
      if (v.nu + Rational(static_cast<long>(v.i)) * t == low) edge.push_back(&v);

    std::set<RationalVector> alphas;
    for (const Vertex* v : edge)
      if (v->i != v0.i) alphas.insert(scale(sub(v0.beta, v->beta), Rational(1) / Rational(static_cast<long>(v->i - v0.i))));

    for (const auto& alpha : alphas) {
      // Group the edge terms by the monomial they produce.
      std::map<RationalVector, std::vector<Rational>> groups;
      for (const Vertex* v : edge) {
        std::size_t e = v->i - v0.i;
        RationalVector mono = add(v->beta, scale(alpha, Rational(static_cast<long>(e))));
        auto& coeffs = groups[mono];
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] += v->c;
      }
      UniPoly common;
      for (auto& [mono, coeffs] : groups) {
        std::size_t lo = 0;
        while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
        UniPoly q(std::vector<Rational>(coeffs.begin() + static_cast<long>(std::min(lo, coeffs.size())), coeffs.end()));
        common = gcd(common, q);
      }
      if (common.degree() < 1) continue;
      for (const auto& [c, mult] : poly_rational_roots(common)) {
        if (c == 0) continue;
        out.push_back({t, alpha, c, mult, denominator_lcm(alpha)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const InitialRoot& a, const InitialRoot& b) {
    return std::tie(a.t, a.alpha, a.c) < std::tie(b.t, b.alpha, b.c);
  });
  return out;
}

HenselResult hensel_lift(const PolyOverSeries& p, const RationalVector& alpha, const Rational& c,
                         const VectorOrder& o, const Rational& horizon, std::optional<Integer> gap_bound) {
  validate(p);
  const std::size_t n = p.coefficients.front().ambient();
  const RationalVector& omega = o.vectors().front();
  if (omega.size() != n || alpha.size() != n) throw Error("DimensionMismatch", "omega or alpha of wrong dimension");
  if (c == 0) throw Error("NotAnInitialRoot", "the initial coefficient must be nonzero");
  if (gap_bound && *gap_bound < 1) throw Error("BadIndexSet", "gap bound must be positive");

  const std::size_t d = p.degree();
  Integer k = denominator_lcm(alpha);
  for (const auto& a : p.coefficients) k = lcm_of(k, a.ramification());
  const Rational t = dot(omega, alpha);
  LatticeVector alpha_k;
  for (const auto& x : alpha) alpha_k.push_back(Rational(x * Rational(k)).get_num());

  Materialized m;
  m.a.resize(d + 1);
  m.nu.resize(d + 1);
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i <= d; ++i) {
    if (is_zero_series(p.coefficients[i])) continue;
    m.nu[i] = coefficient_nu(p.coefficients[i], omega);
    Rational v = *m.nu[i] + Rational(static_cast<long>(i)) * t;
    if (!lambda || v < *lambda) lambda = v;
  }
  const Rational top = std::max(horizon, *lambda);
  bool finite = true;
  for (std::size_t i = 0; i <= d; ++i) {
    if (!m.nu[i]) continue;
    LaurentSeriesValue a = p.coefficients[i].with_ramification(k);
    Rational need = top - Rational(static_cast<long>(i)) * t;
    std::optional<Rational> known;
    try {
      known = known_below(a, omega);
    } catch (const Error&) {
      throw Error("HorizonExceedsCoefficientKnowledge", "coefficient a_" + std::to_string(i) + " is not graded by omega");
    }
    if (known && *known <= need)
      throw Error("HorizonExceedsCoefficientKnowledge",
                  "coefficient a_" + std::to_string(i) + " is known only below " + to_string(*known));
    if (a.known().everywhere && a.rays().empty()) {
      m.a[i] = a.terms();
      continue;
    }
    finite = false;
    Rational bound = need + 1;
    if (known && *known < bound) bound = *known;
    m.a[i] = terms_below(a, omega, bound);
  }

  Graded g(omega, k);
  TermMap xi;
  xi[alpha_k] = c;

  if (!evaluate(g, m, xi, t, false, *lambda).empty())
    throw Error("NotAnInitialRoot", "c x^alpha does not solve the initial equation");
  const Rational mu = *lambda - t;
  TermMap dp = evaluate(g, m, xi, t, true, mu);
  if (dp.empty()) throw Error("NotSimpleRoot", "the initial form of dP/dT vanishes at c x^alpha");
  if (dp.size() != 1) throw Error("DegenerateInitialForm", "the initial form of dP/dT is not a monomial");
  const auto [mu_exp, mu_coeff] = *dp.begin();

  HenselResult res;
  while (true) {
    TermMap r = evaluate(g, m, xi, t, false, horizon);
    if (r.empty()) break;
    Rational low = g.min_level(r);
    for (const auto& [e, v] : r) {
      if (g.level(e) != low) continue;
      LatticeVector he = sub(e, mu_exp);
      Rational& slot = xi[he];
      slot -= v / mu_coeff;
      if (slot == 0) xi.erase(he);
    }
    if (++res.steps > 1000000) throw Error("LiftDiverged", "too many lifting steps");
  }

  // Exact strictly below the first lattice level above horizon - mu.
  Rational step = rational_gcd(omega) / Rational(k);
  if (step == 0) throw Error("DimensionMismatch", "omega must be nonzero");
  res.root_horizon = (floor_of((horizon - mu) / step) + 1) * step;

  if (finite) {
    res.residual = evaluate(g, m, xi, t, false, std::nullopt);
    res.residual_complete = true;
  } else {
    res.residual = evaluate(g, m, xi, t, false, horizon);
  }
  if (!res.residual.empty()) res.residual_nu = g.min_level(res.residual);

  // Support: a bounded-gap ray when all exponents are collinear with alpha.
  std::set<LatticeVector> dirs;
  for (const auto& [e, v] : xi)
    if (e != alpha_k) dirs.insert(primitive(sub(e, alpha_k)));
  SupportSpec spec(n, k);
  res.shift = alpha_k;
  if (dirs.empty()) {
    spec.add_point(alpha_k);
    res.cone = Cone::orthant(n);
  } else {
    std::vector<LatticeVector> gens(dirs.begin(), dirs.end());
    Cone own(n, gens);
    Cone joined = cone_join(Cone::orthant(n), own);
    res.cone = joined.strongly_convex() && cone_nonnegative(o, joined) ? joined : own;
    if (dirs.size() == 1) {
      const LatticeVector& v = gens.front();
      std::vector<Integer> ms{0};
      for (const auto& [e, cf] : xi) {
        if (e == alpha_k) continue;
        LatticeVector diff = sub(e, alpha_k);
        for (std::size_t j = 0; j < n; ++j)
          if (v[j] != 0) {
            ms.push_back(diff[j] / v[j]);
            break;
          }
      }
      std::sort(ms.begin(), ms.end());
      Integer gap = 1;
      for (std::size_t j = 1; j < ms.size(); ++j) gap = std::max(gap, Integer(ms[j] - ms[j - 1]));
      spec.add_ray(alpha_k, v, IndexSet::bounded_gap_tail(0, gap_bound ? *gap_bound : gap));
    } else {
      spec.add_tail(alpha_k, res.cone);
    }
  }
  res.order_nonnegative = res.cone.strongly_convex() && cone_nonnegative(o, res.cone);

  res.root = LaurentSeriesValue(n, k);
  for (const auto& [e, v] : xi) res.root.add_term(e, v);
  res.root.truncate(omega, res.root_horizon);
  if (res.root.terms().size() != xi.size()) throw Error("InternalError", "lift produced terms above its horizon");
  res.root.set_support(spec);
  return res;
}

}  // namespace coneseries
