#include "coneseries/support.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "coneseries/error.hpp"

namespace coneseries {

namespace {

constexpr std::size_t kExactDedupeCap = 100000;
constexpr unsigned long kBoxCap = 2000000;

void check_dim(const SupportSpec& s, std::size_t m, const char* what) {
  if (s.ambient() != m) throw Error("DimensionMismatch", std::string(what) + " does not match the support dimension");
}

// Calls f on every lattice point of the box lo..hi (inclusive).
void for_each_in_box(const LatticeVector& lo, const LatticeVector& hi, const std::function<void(const LatticeVector&)>& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  LatticeVector x = lo;
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

Integer box_volume(const LatticeVector& lo, const LatticeVector& hi) {
  Integer v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return 0;
    v *= hi[i] - lo[i] + 1;
  }
  return v;
}

// Points of tail cone x in sigma with omega . x <= r, when omega is strictly
// positive on the generators: each generator coefficient is at most
// r / (omega . g), which bounds every coordinate.
std::pair<LatticeVector, LatticeVector> tail_box(const Cone& c, const RationalVector& omega, const Rational& r) {
  const std::size_t n = c.ambient();
  RationalVector b(n, Rational(0));
  for (const auto& g : c.generators()) {
    Rational lam = r / dot(omega, g);
    for (std::size_t i = 0; i < n; ++i) b[i] += lam * abs_of(Rational(g[i]));
  }
  LatticeVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    hi[i] = floor_of(b[i]);
    lo[i] = -hi[i];
  }
  return {lo, hi};
}

struct Part {
  SlabCount::Kind kind = SlabCount::Kind::Finite;
  Integer count = 0;
  bool exact = true;
  std::optional<std::vector<LatticeVector>> pts;
};

Part ray_part(const RayComponent& ray, const RationalVector& omega, const Rational& r) {
  Part p;
  Rational wg = dot(omega, ray.origin), wv = dot(omega, ray.direction);
  const IndexSet& idx = ray.indices;
  auto point = [&](const Integer& m) { return add(ray.origin, scale(ray.direction, m)); };
  if (wv > 0) {
    Integer top = floor_of((r - wg) / wv);
    if (!idx.enumerable()) {
      p.count = idx.count_le_bound(top);
      p.exact = false;
      return p;
    }
    p.count = idx.count_le(top);
    if (p.count <= kExactDedupeCap) {
      std::vector<LatticeVector> v;
      for (const auto& m : idx.elements_up_to(top)) v.push_back(point(m));
      p.pts = std::move(v);
    }
    return p;
  }
  if (wv == 0) {
    if (wg > r || idx.empty()) return p;
    if (idx.infinite()) {
      p.kind = SlabCount::Kind::Infinite;
      return p;
    }
    p.count = idx.values().size();
    std::vector<LatticeVector> v;
    for (const auto& m : idx.values()) v.push_back(point(m));
    p.pts = std::move(v);
    return p;
  }
  if (idx.infinite()) {
    p.kind = SlabCount::Kind::Infinite;
    return p;
  }
  std::vector<LatticeVector> v;
  for (const auto& m : idx.values())
    if (wg + Rational(m) * wv <= r) v.push_back(point(m));
  p.count = v.size();
  p.pts = std::move(v);
  return p;
}

Part tail_part(const TailComponent& t, const RationalVector& omega, const Rational& r) {
  Part p;
  Rational rr = r - dot(omega, t.origin);
  Rational min_pair = 0;
  bool first = true;
  for (const auto& g : t.cone.generators()) {
    Rational w = dot(omega, g);
    if (first || w < min_pair) min_pair = w;
    first = false;
  }
  if (rr < 0 && min_pair >= 0) return p;  // cone lies in omega's half-space above the slab
  if (min_pair < 0) {
    p.kind = SlabCount::Kind::Infinite;
    return p;
  }
  if (min_pair == 0 && !t.cone.generators().empty()) {
    p.kind = SlabCount::Kind::Unknown;
    return p;
  }
  auto [lo, hi] = tail_box(t.cone, omega, rr);
  if (box_volume(lo, hi) > kBoxCap) {
    p.count = box_volume(lo, hi);
    p.exact = false;
    return p;
  }
  std::vector<LatticeVector> v;
  for_each_in_box(lo, hi, [&](const LatticeVector& x) {
    if (dot(omega, x) <= rr && t.cone.contains(x)) v.push_back(add(t.origin, x));
  });
  p.count = v.size();
  p.pts = std::move(v);
  return p;
}

}  // namespace

const char* to_string(SlabCount::Kind k) {
  switch (k) {
    case SlabCount::Kind::Finite: return "Finite";
    case SlabCount::Kind::Infinite: return "Infinite";
    case SlabCount::Kind::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(TauClass::Kind k) {
  switch (k) {
    case TauClass::Kind::InTau0: return "InTau0";
    case TauClass::Kind::InTau1: return "InTau1";
    case TauClass::Kind::Boundary: return "Boundary";
    case TauClass::Kind::Unknown: return "Unknown";
  }
  return "?";
}

SupportSpec::SupportSpec(std::size_t n, Integer ramification) : n_(n), k_(std::move(ramification)) {
  if (n == 0) throw Error("DimensionMismatch", "support dimension must be at least 1");
  if (k_ < 1) throw Error("BadRamification", "ramification must be >= 1");
}

void SupportSpec::add_point(const LatticeVector& p) {
  if (p.size() != n_) throw Error("DimensionMismatch", "point of wrong dimension");
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) points_.insert(it, p);
}

void SupportSpec::add_ray(const LatticeVector& origin, const LatticeVector& direction, const IndexSet& indices) {
  if (origin.size() != n_ || direction.size() != n_) throw Error("DimensionMismatch", "ray of wrong dimension");
  if (is_zero(direction)) throw Error("ZeroDirection", "ray direction must be nonzero");
  LatticeVector v = primitive(direction);
  Integer d = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (v[i] != 0) {
      d = direction[i] / v[i];
      break;
    }
  RayComponent ray{origin, v, d == 1 ? indices : indices.scaled(d)};
  if (std::find(rays_.begin(), rays_.end(), ray) == rays_.end()) rays_.push_back(std::move(ray));
}

void SupportSpec::add_tail(const LatticeVector& origin, const Cone& cone) {
  if (origin.size() != n_ || cone.ambient() != n_) throw Error("DimensionMismatch", "tail of wrong dimension");
  if (!cone.strongly_convex()) throw Error("NotStronglyConvex", "tail cones must be strongly convex");
  TailComponent t{origin, cone};
  if (std::find(tails_.begin(), tails_.end(), t) == tails_.end()) tails_.push_back(std::move(t));
}

bool SupportSpec::empty() const {
  if (!points_.empty() || !tails_.empty()) return false;
  for (const auto& r : rays_)
    if (!r.indices.empty()) return false;
  return true;
}

SupportSpec SupportSpec::with_ramification(const Integer& k) const {
  if (k % k_ != 0) throw Error("BadRamification", "new ramification must be a multiple of the old one");
  Integer d = k / k_;
  SupportSpec out(n_, k);
  for (const auto& p : points_) out.add_point(scale(p, d));
  for (const auto& r : rays_) out.add_ray(scale(r.origin, d), scale(r.direction, d), r.indices);
  for (const auto& t : tails_) out.add_tail(scale(t.origin, d), t.cone);
  return out;
}

bool SupportSpec::may_contain(const LatticeVector& x) const {
  if (x.size() != n_) throw Error("DimensionMismatch", "point of wrong dimension");
  if (std::find(points_.begin(), points_.end(), x) != points_.end()) return true;
  for (const auto& r : rays_) {
    LatticeVector d = sub(x, r.origin);
    std::optional<Integer> m;
    bool ok = true;
    for (std::size_t i = 0; i < n_ && ok; ++i) {
      if (r.direction[i] == 0) {
        ok = d[i] == 0;
        continue;
      }
      if (d[i] % r.direction[i] != 0) {
        ok = false;
        continue;
      }
      Integer q = d[i] / r.direction[i];
      if (m && *m != q) ok = false;
      m = q;
    }
    if (!ok || !m || *m < 0) continue;
    if (!r.indices.enumerable()) return true;
    auto e = r.indices.first_at_least(*m);
    if (e && *e == *m) return true;
  }
  for (const auto& t : tails_)
    if (t.cone.contains(sub(x, t.origin))) return true;
  return false;
}

SupportSpec merge(const SupportSpec& a, const SupportSpec& b) {
  if (a.ambient() != b.ambient()) throw Error("DimensionMismatch", "merging supports of different dimension");
  Integer k = lcm_of(a.ramification(), b.ramification());
  SupportSpec out = a.with_ramification(k);
  SupportSpec bb = b.with_ramification(k);
  for (const auto& p : bb.points()) out.add_point(p);
  for (const auto& r : bb.rays()) out.add_ray(r.origin, r.direction, r.indices);
  for (const auto& t : bb.tails()) out.add_tail(t.origin, t.cone);
  return out;
}

SlabCount slab_count(const SupportSpec& s, const RationalVector& omega, const Rational& level) {
  check_dim(s, omega.size(), "omega");
  const Rational r = level * Rational(s.ramification());
  std::vector<Part> parts;
  {
    Part p;
    std::vector<LatticeVector> v;
    for (const auto& x : s.points())
      if (dot(omega, x) <= r) v.push_back(x);
    p.count = v.size();
    p.pts = std::move(v);
    parts.push_back(std::move(p));
  }
  for (const auto& ray : s.rays()) parts.push_back(ray_part(ray, omega, r));
  for (const auto& t : s.tails()) parts.push_back(tail_part(t, omega, r));

  SlabCount out;
  bool unknown = false;
  for (const auto& p : parts) {
    if (p.kind == SlabCount::Kind::Infinite) {
      out.kind = SlabCount::Kind::Infinite;
      return out;
    }
    if (p.kind == SlabCount::Kind::Unknown) unknown = true;
  }
  if (unknown) {
    out.kind = SlabCount::Kind::Unknown;
    return out;
  }
  bool all_listed = true;
  Integer total = 0;
  int nonzero = 0;
  for (const auto& p : parts) {
    total += p.count;
    if (p.count > 0) ++nonzero;
    if (!p.pts) all_listed = false;
    if (!p.exact) out.exact = false;
  }
  if (all_listed && total <= kExactDedupeCap) {
    std::set<LatticeVector> uniq;
    for (const auto& p : parts) uniq.insert(p.pts->begin(), p.pts->end());
    out.bound = uniq.size();
    out.exact = true;
    return out;
  }
  out.bound = total;
  if (nonzero > 1) out.exact = false;
  return out;
}

TauClass tau_classify(const SupportSpec& s, const RationalVector& omega) {
  check_dim(s, omega.size(), "omega");
  for (const auto& w : omega)
    if (w <= 0) throw Error("NonPositiveOmega", "tau classification needs omega > 0");
  const Rational k(s.ramification());
  // Each component contributes a bound on sup A_omega: nullopt for +infinity.
  std::optional<Rational> lambda;
  bool minus_infinity = false, unknown = false;
  auto lower = [&](const Rational& x) {
    if (!lambda || x < *lambda) lambda = x;
  };
  for (const auto& ray : s.rays()) {
    if (!ray.indices.infinite()) continue;
    Rational wv = dot(omega, ray.direction);
    if (wv > 0) continue;
    if (wv < 0) minus_infinity = true;
    else lower(dot(omega, ray.origin) / k);
  }
  for (const auto& t : s.tails()) {
    if (t.cone.generators().empty() || relint_dual_contains(t.cone, omega)) continue;
    bool negative = false;
    for (const auto& g : t.cone.generators()) negative = negative || dot(omega, g) < 0;
    if (negative) minus_infinity = true;
    else unknown = true;
  }
  TauClass out;
  if (minus_infinity) out.kind = TauClass::Kind::InTau1;
  else if (unknown) out.kind = TauClass::Kind::Unknown;
  else if (!lambda) out.kind = TauClass::Kind::InTau0;
  else {
    out.kind = TauClass::Kind::Boundary;
    out.lambda0 = *lambda;
  }
  return out;
}

std::optional<std::pair<LatticeVector, Cone>> shifted_cone_hull(const SupportSpec& s) {
  const std::size_t n = s.ambient();
  std::vector<LatticeVector> gens = Cone::orthant(n).generators();
  std::vector<LatticeVector> origins = s.points();
  for (const auto& r : s.rays()) {
    if (r.indices.infinite()) {
      gens.push_back(r.direction);
      origins.push_back(r.origin);
    } else {
      for (const auto& m : r.indices.values()) origins.push_back(add(r.origin, scale(r.direction, m)));
    }
  }
  for (const auto& t : s.tails()) {
    gens.insert(gens.end(), t.cone.generators().begin(), t.cone.generators().end());
    origins.push_back(t.origin);
  }
  Cone c(n, gens);
  if (!c.strongly_convex()) return std::nullopt;
  // The cone contains the orthant, so the componentwise minimum works.
  LatticeVector gamma(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    bool first = true;
    for (const auto& x : origins) {
      if (first || x[i] < gamma[i]) gamma[i] = x[i];
      first = false;
    }
  }
  return std::make_pair(gamma, c);
}

std::optional<std::pair<LatticeVector, Cone>> field_family_witness(const SupportSpec& s, const VectorOrder& o) {
  if (o.ambient() != s.ambient()) throw Error("DimensionMismatch", "order and support dimensions differ");
  if (!o.total() || !is_positive(o)) throw Error("PreconditionFailed", "field-family test needs a total positive order");
  auto hull = shifted_cone_hull(s);
  if (!hull || !cone_nonnegative(o, hull->second)) return std::nullopt;
  return hull;
}

bool in_field_family(const SupportSpec& s, const VectorOrder& o) { return field_family_witness(s, o).has_value(); }

LatticeVector min_support(const SupportSpec& s, const VectorOrder& o) {
  if (s.empty()) throw Error("EmptySupport", "support has no points");
  if (!in_field_family(s, o)) throw Error("NotWellOrdered", "support is not in a shifted non-negative cone");
  std::vector<LatticeVector> cands = s.points();
  for (const auto& r : s.rays()) {
    if (r.indices.empty()) continue;
    Integer m = r.indices.enumerable() ? *r.indices.min_element() : Integer(0);
    cands.push_back(add(r.origin, scale(r.direction, m)));
  }
  for (const auto& t : s.tails()) cands.push_back(t.origin);
  LatticeVector best = cands.front();
  for (const auto& c : cands)
    if (compare(o, to_rational(c), to_rational(best)) == Cmp::Less) best = c;
  return best;
}

bool in_localized_ring(const SupportSpec& s) {
  auto nonneg = [](const LatticeVector& v) {
    for (const auto& x : v)
      if (x < 0) return false;
    return true;
  };
  for (const auto& r : s.rays())
    if (r.indices.infinite() && !nonneg(r.direction)) return false;
  for (const auto& t : s.tails())
    for (const auto& g : t.cone.generators())
      if (!nonneg(g)) return false;
  return true;
}

std::vector<LatticeVector> materialize_window(const SupportSpec& s, const Integer& w, std::size_t cap) {
  const std::size_t n = s.ambient();
  std::set<LatticeVector> out;
  auto push = [&](const LatticeVector& p) {
    out.insert(p);
    if (out.size() > cap) throw Error("WindowTooLarge", "window holds more than the configured point cap");
  };
  auto inside = [&](const LatticeVector& p) {
    for (const auto& x : p)
      if (x < -w || x > w) return false;
    return true;
  };
  for (const auto& p : s.points())
    if (inside(p)) push(p);
  for (const auto& r : s.rays()) {
    Rational lo = 0, hi = 0;
    bool bounded = false, empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& v = r.direction[i];
      const Integer& g = r.origin[i];
      if (v == 0) {
        if (g < -w || g > w) empty = true;
        continue;
      }
      Rational a = Rational(-w - g) / Rational(v), b = Rational(w - g) / Rational(v);
      if (v < 0) std::swap(a, b);
      if (!bounded || a > lo) lo = a;
      if (!bounded || b < hi) hi = b;
      bounded = true;
    }
    if (empty) continue;
    if (!r.indices.enumerable())
      throw Error("IndexSetNotEnumerable", "cannot materialize a bounded-gap tail ray");
    Integer m_lo = std::max(ceil_of(lo), Integer(0)), m_hi = floor_of(hi);
    if (m_lo > m_hi) continue;
    if (r.indices.count_le(m_hi) - r.indices.count_le(m_lo - 1) > cap)
      throw Error("WindowTooLarge", "window holds more than the configured point cap");
    Integer m = m_lo;
    while (true) {
      auto e = r.indices.first_at_least(m);
      if (!e || *e > m_hi) break;
      push(add(r.origin, scale(r.direction, *e)));
      m = *e + 1;
    }
  }
  for (const auto& t : s.tails()) {
    LatticeVector lo(n, -w), hi(n, w);
    if (box_volume(lo, hi) > kBoxCap) throw Error("WindowTooLarge", "window box is too large to scan");
    for_each_in_box(lo, hi, [&](const LatticeVector& p) {
      if (t.cone.contains(sub(p, t.origin))) push(p);
    });
  }
  return {out.begin(), out.end()};
}

}  // namespace coneseries
