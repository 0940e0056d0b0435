#include "coneseries/series.hpp"

#include "coneseries/error.hpp"

namespace coneseries {

namespace {

[[noreturn]] void beyond_horizon(const std::string& what) { throw Error("HorizonExceedsKnowledge", what); }

// c with omega = c * base and c > 0, if any.
std::optional<Rational> proportionality(const RationalVector& omega, const RationalVector& base) {
  if (omega.size() != base.size()) return std::nullopt;
  std::optional<Rational> c;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] == 0) {
      if (omega[i] != 0) return std::nullopt;
      continue;
    }
    Rational r = omega[i] / base[i];
    if (c && *c != r) return std::nullopt;
    c = r;
  }
  if (!c || *c <= 0) return std::nullopt;
  return c;
}

bool finite_potential_support(const SupportSpec& s) {
  if (!s.tails().empty()) return false;
  for (const auto& r : s.rays())
    if (r.indices.infinite()) return false;
  return true;
}

std::vector<LatticeVector> finite_points(const SupportSpec& s) {
  std::vector<LatticeVector> out = s.points();
  for (const auto& r : s.rays())
    for (const auto& m : r.indices.values()) out.push_back(add(r.origin, scale(r.direction, m)));
  return out;
}

// Level of a stored exponent in real coordinates.
Rational level(const RationalVector& omega, const LatticeVector& stored, const Integer& k) {
  return dot(omega, stored) / Rational(k);
}

bool on_ray(const LatticeVector& x, const LatticeVector& gamma, const LatticeVector& v, Integer* m_out = nullptr) {
  LatticeVector d = sub(x, gamma);
  std::optional<Integer> m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      if (d[i] != 0) return false;
      continue;
    }
    if (d[i] % v[i] != 0) return false;
    Integer q = d[i] / v[i];
    if (m && *m != q) return false;
    m = q;
  }
  if (!m || *m < 0) return false;
  if (m_out) *m_out = *m;
  return true;
}

}  // namespace

LaurentSeriesValue::LaurentSeriesValue(std::size_t n, Integer ramification)
    : n_(n), k_(std::move(ramification)), support_(n, k_) {}

LaurentSeriesValue LaurentSeriesValue::monomial(const LatticeVector& exponent, const Rational& c, Integer ramification) {
  LaurentSeriesValue f(exponent.size(), std::move(ramification));
  f.add_term(exponent, c);
  return f;
}

LaurentSeriesValue LaurentSeriesValue::constant(std::size_t n, const Rational& c) {
  return monomial(LatticeVector(n, Integer(0)), c);
}

void LaurentSeriesValue::add_term(const LatticeVector& exponent, const Rational& c) {
  if (exponent.size() != n_) throw Error("DimensionMismatch", "term exponent of wrong dimension");
  if (!known_.everywhere && level(known_.omega, exponent, k_) >= known_.horizon) return;
  Rational& slot = terms_[exponent];
  slot += c;
  if (slot == 0) terms_.erase(exponent);
  else if (!custom_support_) support_.add_point(exponent);
  else if (!support_.may_contain(exponent)) throw Error("SupportViolation", "term outside the declared support");
}

void LaurentSeriesValue::add_ray(const RayTerm& ray) {
  if (!known_.everywhere) throw Error("RayOnTruncatedSeries", "closed-form rays need an everywhere-known series");
  if (ray.coefficient == 0 || ray.indices.empty()) return;
  if (!ray.indices.enumerable()) throw Error("IndexSetNotEnumerable", "series rays need enumerable index sets");
  if (ray.origin.size() != n_ || ray.direction.size() != n_ || is_zero(ray.direction))
    throw Error("DimensionMismatch", "ray of wrong dimension");
  RayTerm r = ray;
  LatticeVector v = primitive(ray.direction);
  if (v != ray.direction) {
    Integer d = 0;
    for (std::size_t i = 0; i < n_ && d == 0; ++i)
      if (v[i] != 0) d = ray.direction[i] / v[i];
    r.direction = v;
    r.indices = ray.indices.scaled(d);
  }
  rays_.push_back(r);
  if (!custom_support_) support_.add_ray(r.origin, r.direction, r.indices);
}

void LaurentSeriesValue::truncate(const RationalVector& omega, const Rational& horizon) {
  if (omega.size() != n_) throw Error("DimensionMismatch", "omega of wrong dimension");
  TermMap kept = terms_below(*this, omega, horizon);
  terms_ = std::move(kept);
  rays_.clear();
  known_ = KnownRegion{false, omega, horizon};
  if (!custom_support_) {
    support_ = SupportSpec(n_, k_);
    for (const auto& [e, c] : terms_) support_.add_point(e);
  }
}

void LaurentSeriesValue::set_support(const SupportSpec& s) {
  if (s.ambient() != n_) throw Error("DimensionMismatch", "support of wrong dimension");
  SupportSpec t = s;
  if (s.ramification() != k_) {
    Integer k = lcm_of(s.ramification(), k_);
    if (k != k_) throw Error("BadRamification", "support ramification must divide the series ramification");
    t = s.with_ramification(k_);
  }
  for (const auto& [e, c] : terms_)
    if (!t.may_contain(e)) throw Error("SupportViolation", "term outside the declared support");
  support_ = std::move(t);
  custom_support_ = true;
}

Rational LaurentSeriesValue::coefficient(const LatticeVector& stored) const {
  if (stored.size() != n_) throw Error("DimensionMismatch", "exponent of wrong dimension");
  if (!known_.everywhere && level(known_.omega, stored, k_) >= known_.horizon)
    beyond_horizon("coefficient lies at or above the known horizon");
  Rational c = 0;
  auto it = terms_.find(stored);
  if (it != terms_.end()) c += it->second;
  for (const auto& r : rays_) {
    Integer m;
    if (!on_ray(stored, r.origin, r.direction, &m)) continue;
    auto e = r.indices.first_at_least(m);
    if (e && *e == m) c += r.coefficient;
  }
  return c;
}

LaurentSeriesValue LaurentSeriesValue::with_ramification(const Integer& k) const {
  if (k % k_ != 0) throw Error("BadRamification", "new ramification must be a multiple of the old one");
  if (k == k_) return *this;
  Integer d = k / k_;
  LaurentSeriesValue out(n_, k);
  for (const auto& [e, c] : terms_) out.add_term(scale(e, d), c);
  for (const auto& r : rays_) out.add_ray(RayTerm{scale(r.origin, d), r.direction, r.indices.scaled(d), r.coefficient});
  out.known_ = known_;
  if (custom_support_) {
    out.support_ = support_.with_ramification(k);
    out.custom_support_ = true;
  }
  return out;
}

std::optional<Rational> known_below(const LaurentSeriesValue& f, const RationalVector& omega) {
  if (omega.size() != f.ambient()) throw Error("DimensionMismatch", "omega of wrong dimension");
  const KnownRegion& kr = f.known();
  if (kr.everywhere) return std::nullopt;
  if (auto c = proportionality(omega, kr.omega)) return *c * kr.horizon;
  if (finite_potential_support(f.support())) {
    for (const auto& p : finite_points(f.support()))
      if (level(kr.omega, p, f.ramification()) >= kr.horizon)
        beyond_horizon("potential support leaves the known region");
    return std::nullopt;
  }
  beyond_horizon("known region is graded by a different weight");
}

TermMap terms_below(const LaurentSeriesValue& f, const RationalVector& omega, const Rational& bound) {
  if (omega.size() != f.ambient()) throw Error("DimensionMismatch", "omega of wrong dimension");
  auto known = known_below(f, omega);
  if (known && bound > *known) beyond_horizon("requested horizon exceeds the known region");
  const Integer& k = f.ramification();
  TermMap out;
  for (const auto& [e, c] : f.terms())
    if (level(omega, e, k) < bound) out[e] += c;
  for (const auto& r : f.rays()) {
    Rational wg = dot(omega, r.origin), wv = dot(omega, r.direction);
    Rational top = bound * Rational(k);
    auto put = [&](const Integer& m) {
      LatticeVector e = add(r.origin, scale(r.direction, m));
      Rational& slot = out[e];
      slot += r.coefficient;
      if (slot == 0) out.erase(e);
    };
    if (wv > 0) {
      // wg + m wv < top  <=>  m <= ceil((top - wg) / wv) - 1
      Integer last = ceil_of((top - wg) / wv) - 1;
      for (const auto& m : r.indices.elements_up_to(last)) put(m);
      continue;
    }
    if (!r.indices.infinite()) {
      for (const auto& m : r.indices.values())
        if (wg + Rational(m) * wv < top) put(m);
      continue;
    }
    if (wv < 0 || wg < top) throw Error("InfiniteLevel", "a ray places infinitely many terms below the bound");
  }
  return out;
}

Rational nu_omega(const SupportSpec& s, const RationalVector& omega) {
  if (omega.size() != s.ambient()) throw Error("DimensionMismatch", "omega of wrong dimension");
  std::optional<Rational> best;
  auto consider = [&](const Rational& x) {
    if (!best || x < *best) best = x;
  };
  for (const auto& p : s.points()) consider(dot(omega, p));
  for (const auto& r : s.rays()) {
    if (r.indices.empty()) continue;
    Rational wg = dot(omega, r.origin), wv = dot(omega, r.direction);
    if (!r.indices.infinite()) {
      for (const auto& m : r.indices.values()) consider(wg + Rational(m) * wv);
    } else if (wv > 0) {
      Integer m0 = r.indices.enumerable() ? *r.indices.min_element() : Integer(0);
      consider(wg + Rational(m0) * wv);
    } else if (wv == 0) {
      consider(wg);
    } else {
      throw Error("NoMinimum", "a ray descends without bound in omega");
    }
  }
  for (const auto& t : s.tails()) {
    for (const auto& g : t.cone.generators())
      if (dot(omega, g) < 0) throw Error("NoMinimum", "a tail cone descends without bound in omega");
    consider(dot(omega, t.origin));
  }
  if (!best) throw Error("NoMinimum", "empty support");
  return *best / Rational(s.ramification());
}

Rational nu_omega(const LaurentSeriesValue& f, const RationalVector& omega) {
  auto known = known_below(f, omega);
  const Integer& k = f.ramification();
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational l = level(omega, e, k);
    if (!best || l < *best) best = l;
  }
  for (const auto& r : f.rays()) {
    Rational wg = dot(omega, r.origin), wv = dot(omega, r.direction);
    Rational l;
    if (!r.indices.infinite()) {
      bool first = true;
      for (const auto& m : r.indices.values()) {
        Rational x = wg + Rational(m) * wv;
        if (first || x < l) l = x;
        first = false;
      }
    } else if (wv > 0) {
      l = wg + Rational(*r.indices.min_element()) * wv;
    } else if (wv == 0) {
      l = wg;
    } else {
      throw Error("NoMinimum", "a ray descends without bound in omega");
    }
    l /= Rational(k);
    if (!best || l < *best) best = l;
  }
  if (!best) {
    if (!known) throw Error("NoMinimum", "the zero series has no omega-order");
    beyond_horizon("no nonzero term below the known horizon");
  }
  if (known && *best >= *known) beyond_horizon("no nonzero term below the known horizon");
  return *best;
}

LaurentSeriesValue initial_part(const LaurentSeriesValue& f, const RationalVector& omega) {
  Rational nu = nu_omega(f, omega);
  const Integer& k = f.ramification();
  LaurentSeriesValue out(f.ambient(), k);
  for (const auto& [e, c] : f.terms())
    if (level(omega, e, k) == nu) out.add_term(e, c);
  for (const auto& r : f.rays()) {
    Rational wg = dot(omega, r.origin), wv = dot(omega, r.direction);
    if (wv == 0 && r.indices.infinite()) {
      if (wg / Rational(k) == nu) out.add_ray(r);
      continue;
    }
    for (const auto& m : r.indices.infinite() ? std::vector<Integer>{*r.indices.min_element()} : r.indices.values())
      if ((wg + Rational(m) * wv) / Rational(k) == nu) out.add_term(add(r.origin, scale(r.direction, m)), r.coefficient);
  }
  return out;
}

std::vector<Rational> RayPart::prefix(std::size_t count) const {
  std::vector<Rational> out;
  for (std::size_t m = 0; m < count; ++m) out.push_back(coefficient(Integer(static_cast<unsigned long>(m))));
  return out;
}

RayPart ray_part(const LaurentSeriesValue& f, const LatticeVector& gamma, const LatticeVector& v) {
  if (gamma.size() != f.ambient() || v.size() != f.ambient()) throw Error("DimensionMismatch", "ray of wrong dimension");
  if (is_zero(v) || primitive(v) != v) throw Error("NotPrimitive", "ray direction must be primitive");
  RayPart out;
  out.on_ray = true;
  for (const auto& [e, c] : f.terms()) out.on_ray = out.on_ray && on_ray(e, gamma, v);
  for (const auto& r : f.rays()) out.on_ray = out.on_ray && r.direction == v && on_ray(r.origin, gamma, v);
  out.coefficient = [f, gamma, v](const Integer& m) {
    if (m < 0) throw Error("BadIndex", "ray index must be nonnegative");
    return f.coefficient(add(gamma, scale(v, m)));
  };
  return out;
}

LaurentSeriesValue combine(const LaurentSeriesValue& f, const LaurentSeriesValue& g, SeriesOp op,
                           const RationalVector& omega, const Rational& horizon) {
  if (f.ambient() != g.ambient()) throw Error("DimensionMismatch", "combining series of different dimension");
  Integer k = lcm_of(f.ramification(), g.ramification());
  LaurentSeriesValue a = f.with_ramification(k), b = g.with_ramification(k);
  LaurentSeriesValue out(f.ambient(), k);
  if (op == SeriesOp::Add) {
    TermMap ta = terms_below(a, omega, horizon), tb = terms_below(b, omega, horizon);
    out.set_support(merge(a.support(), b.support()));
    for (const auto& [e, c] : ta) out.add_term(e, c);
    for (const auto& [e, c] : tb) out.add_term(e, c);
    out.truncate(omega, horizon);
    return out;
  }
  auto is_zero_series = [](const LaurentSeriesValue& s) {
    return s.known().everywhere && s.terms().empty() && s.rays().empty();
  };
  if (is_zero_series(a) || is_zero_series(b)) {
    out.truncate(omega, horizon);
    return out;
  }
  Rational nu_a = nu_omega(a, omega), nu_b = nu_omega(b, omega);
  TermMap ta = terms_below(a, omega, horizon - nu_b), tb = terms_below(b, omega, horizon - nu_a);
  TermMap prod;
  const Rational top = horizon * Rational(k);
  for (const auto& [ea, ca] : ta)
    for (const auto& [eb, cb] : tb) {
      LatticeVector e = add(ea, eb);
      if (dot(omega, e) >= top) continue;
      prod[e] += ca * cb;
    }
  SupportSpec s(f.ambient(), k);
  for (const auto& [e, c] : prod)
    if (c != 0) s.add_point(e);
  auto ha = shifted_cone_hull(a.support()), hb = shifted_cone_hull(b.support());
  if (ha && hb) {
    Cone j = cone_join(ha->second, hb->second);
    if (j.strongly_convex()) s.add_tail(add(ha->first, hb->first), j);
  }
  out.set_support(s);
  for (const auto& [e, c] : prod) out.add_term(e, c);
  out.truncate(omega, horizon);
  return out;
}

}  // namespace coneseries
