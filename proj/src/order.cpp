#include "coneseries/order.hpp"

#include <optional>

#include "coneseries/error.hpp"
#include "coneseries/linalg.hpp"

namespace coneseries {

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "Less";
    case Cmp::Equal: return "Equal";
    case Cmp::Greater: return "Greater";
  }
  return "?";
}

VectorOrder::VectorOrder(std::vector<RationalVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw Error("EmptyOrder", "an order needs at least one vector", Error::Kind::Usage);
  const std::size_t n = vectors_.front().size();
  if (n == 0) throw Error("DimensionMismatch", "order vectors must be nonempty");
  for (const auto& u : vectors_) {
    if (u.size() != n) throw Error("DimensionMismatch", "order vectors of different dimension");
    if (is_zero(u)) throw Error("ZeroVector", "order vectors must be nonzero");
  }
  if (vectors_.size() > n) throw Error("TooManyVectors", "an order uses at most n vectors");
  total_ = rank(vectors_, n) == n;
}

Cmp compare(const VectorOrder& o, const RationalVector& alpha, const RationalVector& beta) {
  if (alpha.size() != o.ambient() || beta.size() != o.ambient())
    throw Error("DimensionMismatch", "compared vectors do not match the order dimension");
  for (const auto& u : o.vectors()) {
    Rational a = dot(u, alpha), b = dot(u, beta);
    if (a < b) return Cmp::Less;
    if (a > b) return Cmp::Greater;
  }
  return Cmp::Equal;
}

Cmp sign(const VectorOrder& o, const RationalVector& alpha) {
  return compare(o, alpha, RationalVector(alpha.size(), Rational(0)));
}

Cmp sign(const VectorOrder& o, const LatticeVector& alpha) { return sign(o, to_rational(alpha)); }

bool is_positive(const VectorOrder& o) {
  for (std::size_t j = 0; j < o.ambient(); ++j)
    if (sign(o, unit_vector(o.ambient(), j)) == Cmp::Less) return false;
  return true;
}

bool cone_nonnegative(const VectorOrder& o, const Cone& c) {
  if (c.ambient() != o.ambient()) throw Error("DimensionMismatch", "cone and order dimensions differ");
  for (const auto& g : c.generators())
    if (sign(o, g) == Cmp::Less) return false;
  return true;
}

namespace {

// Orthogonal basis of the complement of span(us), scaled to integers.
std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& us, std::size_t n) {
  std::vector<RationalVector> basis;
  for (const auto& k : nullspace(us, n)) {
    RationalVector w = k;
    for (const auto& b : basis) w = sub(w, scale(b, dot(w, b) / dot(b, b)));
    basis.push_back(to_rational(primitive(w)));
  }
  return basis;
}

RationalVector project(const RationalVector& x, const std::vector<RationalVector>& orth) {
  RationalVector p(x.size(), Rational(0));
  for (const auto& b : orth) p = add(p, scale(b, dot(x, b) / dot(b, b)));
  return p;
}

bool nonnegative_on(const RationalVector& u, const std::vector<LatticeVector>& face) {
  for (const auto& f : face)
    if (dot(u, f) < 0) return false;
  return true;
}

}  // namespace

VectorOrder refine_over_cone(const RationalVector& omega, const Cone& c) {
  const std::size_t n = c.ambient();
  if (omega.size() != n) throw Error("DimensionMismatch", "weight and cone dimensions differ");
  if (is_zero(omega)) throw Error("ZeroVector", "omega must be nonzero");
  if (!is_strongly_convex(c)) throw Error("NotStronglyConvex", "cone contains a line");
  auto in_half_space = [&](const Cone& k) {
    for (const auto& g : k.generators())
      if (dot(omega, g) < 0) return false;
    return true;
  };
  if (!in_half_space(c)) throw Error("ConeNotInHalfSpace", "some generator pairs negatively with omega");
  Cone target = cone_join(c, Cone::orthant(n));
  if (!target.strongly_convex() || !in_half_space(target)) target = c;

  std::vector<RationalVector> us{omega};
  while (rank(us, n) < n) {
    std::vector<LatticeVector> face;
    for (const auto& g : target.generators()) {
      bool zero = true;
      for (const auto& u : us) zero = zero && dot(u, g) == 0;
      if (zero) face.push_back(g);
    }
    std::vector<RationalVector> orth = orthogonal_complement(us, n);
    std::vector<RationalVector> candidates;
    for (const auto& b : orth) {
      candidates.push_back(b);
      candidates.push_back(scale(b, -1));
    }
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector p = project(to_rational(unit_vector(n, j)), orth);
      if (is_zero(p)) continue;
      p = to_rational(primitive(p));
      candidates.push_back(p);
      candidates.push_back(scale(p, -1));
    }
    std::optional<RationalVector> pick;
    for (const auto& cand : candidates) {
      if (nonnegative_on(cand, face)) {
        pick = cand;
        break;
      }
    }
    if (!pick) {
      // Relative interior point of the face's dual inside span(us)^perp.
      std::vector<LatticeVector> gens = face;
      for (const auto& u : us) {
        gens.push_back(primitive(u));
        gens.push_back(scale(primitive(u), -1));
      }
      RationalVector s(n, Rational(0));
      for (const auto& r : dual_generators(n, gens)) s = add(s, to_rational(r));
      s = project(s, orth);
      if (is_zero(s) || !nonnegative_on(s, face)) throw Error("InternalError", "no refining vector found");
      pick = to_rational(primitive(s));
    }
    us.push_back(*pick);
  }
  VectorOrder o(us);
  if (!cone_nonnegative(o, c)) throw Error("InternalError", "refined order is negative on the cone");
  return o;
}

bool signflip_relint_test(const Cone& c, const RationalVector& omega, const std::vector<RationalVector>& basis) {
  const std::size_t n = c.ambient();
  if (omega.size() != n || basis.size() + 1 != n) throw Error("BadBasis", "basis must have n-1 vectors");
  std::vector<RationalVector> all{omega};
  for (const auto& b : basis) {
    if (b.size() != n || dot(b, omega) != 0) throw Error("BadBasis", "basis vectors must be orthogonal to omega");
    all.push_back(b);
  }
  if (rank(all, n) != n) throw Error("BadBasis", "basis does not span the orthogonal complement");
  for (unsigned long mask = 0; mask < (1UL << basis.size()); ++mask) {
    std::vector<RationalVector> us{omega};
    for (std::size_t i = 0; i < basis.size(); ++i) us.push_back((mask >> i) & 1 ? scale(basis[i], -1) : basis[i]);
    if (!cone_nonnegative(VectorOrder(us), c)) return false;
  }
  return true;
}

}  // namespace coneseries
