#include "coneseries/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "coneseries/error.hpp"
#include "coneseries/linalg.hpp"

namespace coneseries {

namespace {

void for_each_subset(std::size_t k, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > k) return;
  while (true) {
    f(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == k - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<LatticeVector> clean(std::size_t n, const std::vector<LatticeVector>& gens) {
  std::set<LatticeVector> seen;
  for (const auto& g : gens) {
    if (g.size() != n) throw Error("DimensionMismatch", "generator of wrong dimension");
    if (is_zero(g)) continue;
    seen.insert(primitive(g));
  }
  return {seen.begin(), seen.end()};
}

// Primitive rows of the reduced echelon basis of the span of `vs`.
std::vector<LatticeVector> echelon_basis(const RationalMatrix& vs, std::size_t n) {
  std::vector<LatticeVector> out;
  for (const auto& row : rref(vs, n).rows) out.push_back(primitive(row));
  return out;
}

void check_dimension(std::size_t n) {
  if (n > kMaxConeDimension) {
    throw Error("DimensionUnsupported", "cone duals are limited to ambient dimension <= 4");
  }
}

}  // namespace

std::vector<LatticeVector> dual_generators(std::size_t n, const std::vector<LatticeVector>& raw) {
  check_dimension(n);
  std::vector<LatticeVector> gens = clean(n, raw);
  RationalMatrix a = to_rational(gens);
  std::vector<LatticeVector> lineality = echelon_basis(nullspace(a, n), n);
  std::set<LatticeVector> out;
  for (const auto& l : lineality) {
    out.insert(l);
    out.insert(scale(l, -1));
  }
  std::size_t d = rank(a, n);
  if (d == 0) return {out.begin(), out.end()};
  for_each_subset(gens.size(), d - 1, [&](const std::vector<std::size_t>& s) {
    RationalMatrix sys;
    for (auto i : s) sys.push_back(a[i]);
    if (rank(sys, n) != d - 1) return;
    for (const auto& l : lineality) sys.push_back(to_rational(l));
    RationalMatrix ker = nullspace(sys, n);
    if (ker.size() != 1) return;
    LatticeVector y = primitive(ker[0]);
    bool pos = true, neg = true;
    for (const auto& g : gens) {
      Integer p = dot(y, g);
      if (p < 0) pos = false;
      if (p > 0) neg = false;
    }
    if (pos) out.insert(y);
    else if (neg) out.insert(scale(y, -1));
  });
  return {out.begin(), out.end()};
}

Cone::Cone(std::size_t n, std::vector<LatticeVector> generators) : n_(n) {
  if (n == 0) throw Error("DimensionMismatch", "ambient dimension must be at least 1");
  std::vector<LatticeVector> gens = clean(n, generators);
  dim_ = rank(to_rational(gens), n);
  if (n > kMaxConeDimension) {
    gens_ = std::move(gens);
    return;
  }
  dual_ = dual_generators(n, gens);
  has_dual_ = true;
  // Lineality of the cone is the orthogonal complement of its dual's span.
  RationalMatrix h = to_rational(dual_);
  std::vector<LatticeVector> lin = echelon_basis(nullspace(h, n), n);
  pointed_ = lin.empty();
  if (pointed_ != (rank(h, n) == n)) throw Error("InternalError", "dual dimension and lineality disagree");

  // Project onto the complement of the lineality space, keep extreme rays.
  RationalMatrix b = to_rational(lin);
  RationalMatrix gram(lin.size(), RationalVector(lin.size()));
  for (std::size_t i = 0; i < lin.size(); ++i)
    for (std::size_t j = 0; j < lin.size(); ++j) gram[i][j] = dot(b[i], b[j]);
  std::set<LatticeVector> rays;
  const std::size_t face_rank = n - lin.size() - 1;
  for (const auto& g : gens) {
    RationalVector p = to_rational(g);
    if (!lin.empty()) {
      RationalVector rhs;
      for (const auto& bi : b) rhs.push_back(dot(bi, p));
      auto coef = solve(gram, rhs, lin.size());
      for (std::size_t i = 0; i < lin.size(); ++i) p = sub(p, scale(b[i], (*coef)[i]));
    }
    if (is_zero(p)) continue;
    RationalMatrix face;
    for (const auto& hv : dual_)
      if (dot(hv, g) == 0) face.push_back(to_rational(hv));
    if (rank(face, n) == face_rank) rays.insert(primitive(p));
  }
  std::set<LatticeVector> all(rays.begin(), rays.end());
  for (const auto& l : lin) {
    all.insert(l);
    all.insert(scale(l, -1));
  }
  gens_.assign(all.begin(), all.end());
}

Cone Cone::orthant(std::size_t n) {
  std::vector<LatticeVector> g;
  for (std::size_t j = 0; j < n; ++j) g.push_back(unit_vector(n, j));
  return Cone(n, g);
}

Cone Cone::zero(std::size_t n) { return Cone(n, {}); }

Cone Cone::ray(const LatticeVector& v) { return Cone(v.size(), {v}); }

const std::vector<LatticeVector>& Cone::halfspaces() const {
  if (!has_dual_) check_dimension(n_);
  return dual_;
}

bool Cone::contains(const RationalVector& x) const {
  if (x.size() != n_) throw Error("DimensionMismatch", "point of wrong dimension");
  for (const auto& h : halfspaces())
    if (dot(x, h) < 0) return false;
  return true;
}

bool Cone::contains(const LatticeVector& x) const { return contains(to_rational(x)); }

Cone dual_cone(const Cone& c) { return Cone(c.ambient(), c.halfspaces()); }

bool is_strongly_convex(const Cone& c) {
  if (c.ambient() > kMaxConeDimension) check_dimension(c.ambient());
  return c.strongly_convex();
}

bool relint_dual_contains(const Cone& c, const RationalVector& omega) {
  if (omega.size() != c.ambient()) throw Error("DimensionMismatch", "weight of wrong dimension");
  if (!is_strongly_convex(c)) throw Error("NotStronglyConvex", "cone contains a line");
  for (const auto& g : c.generators())
    if (dot(omega, g) <= 0) return false;
  return true;
}

Cone cone_join(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient()) throw Error("DimensionMismatch", "joining cones of different dimension");
  std::vector<LatticeVector> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Cone(a.ambient(), g);
}

Cone cone_intersection(const Cone& a, const Cone& b) {
  return dual_cone(cone_join(dual_cone(a), dual_cone(b)));
}

LatticeVector shift_containment(const LatticeVector& gamma1, const Cone& c1, const LatticeVector& gamma2,
                                const Cone& c2) {
  const std::size_t n = c1.ambient();
  if (gamma1.size() != n || gamma2.size() != n || c2.ambient() != n)
    throw Error("DimensionMismatch", "shift_containment arguments");
  Cone inter = cone_intersection(c1, c2);
  if (inter.dimension() != n)
    throw Error("IntersectionNotFullDimensional", "the two cones meet in a lower-dimensional cone");
  // Greedy basis of R^n made of generators of the intersection.
  RationalMatrix basis;
  for (const auto& g : inter.generators()) {
    RationalMatrix trial = basis;
    trial.push_back(to_rational(g));
    if (rank(trial, n) == trial.size()) basis = std::move(trial);
    if (basis.size() == n) break;
  }
  RationalMatrix cols(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[i][j] = basis[j][i];
  auto lambda = solve(cols, to_rational(sub(gamma1, gamma2)), n);
  LatticeVector gamma = gamma1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational l = (*lambda)[i];
    if (l <= 0) continue;
    gamma = sub(gamma, scale(primitive(basis[i]), ceil_of(l)));
  }
  return gamma;
}

RationalVector separating_omega(const Cone& tau, const LatticeVector& v) {
  const std::size_t n = tau.ambient();
  if (v.size() != n) throw Error("DimensionMismatch", "vertex of wrong dimension");
  if (!is_strongly_convex(tau)) throw Error("NotStronglyConvex", "tau contains a line");
  for (std::size_t j = 0; j < n; ++j)
    if (!tau.contains(unit_vector(n, j))) throw Error("OrthantNotContained", "tau must contain the first orthant");
  bool has_neg = false, has_pos = false;
  for (const auto& x : v) {
    if (x < 0) has_neg = true;
    if (x > 0) has_pos = true;
  }
  if (!has_neg || !has_pos)
    throw Error("NotAVertex", "v needs a negative and a strictly positive coordinate");
  LatticeVector pv = primitive(v);
  if (std::find(tau.generators().begin(), tau.generators().end(), pv) == tau.generators().end())
    throw Error("NotAVertex", "v is not an extreme ray of tau");

  std::vector<LatticeVector> g = tau.generators();
  g.push_back(v);
  std::vector<LatticeVector> doubled;
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] >= 0) continue;
    LatticeVector w = v;
    w[j] *= 2;
    doubled.push_back(w);
    g.push_back(scale(w, -1));
  }
  Cone k(n, g);
  RationalVector omega(n, Rational(0));
  Cone kd = dual_cone(k);
  for (const auto& r : kd.generators()) omega = add(omega, to_rational(r));
  bool ok = dot(omega, v) > 0;
  for (const auto& w : doubled) ok = ok && dot(omega, w) < 0;
  if (!ok) throw Error("NoSeparator", "no weight satisfies the strict separation system");
  return to_rational(primitive(omega));
}

}  // namespace coneseries
