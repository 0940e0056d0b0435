#pragma once

#include <vector>

#include "coneseries/rational.hpp"

namespace coneseries {

/// Largest ambient dimension for which duals are computed.
inline constexpr std::size_t kMaxConeDimension = 4;

/// Finitely generated rational polyhedral cone in R^n.
///
/// The generator list is canonical: for a pointed cone it is the sorted list
/// of primitive extreme rays; otherwise it is a signed basis of the lineality
/// space followed by the extreme rays of the pointed quotient. Two cones are
/// equal as sets iff their generator lists are equal (n <= 4).
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t n, std::vector<LatticeVector> generators);

  static Cone orthant(std::size_t n);
  static Cone zero(std::size_t n);
  static Cone ray(const LatticeVector& v);

  std::size_t ambient() const { return n_; }
  const std::vector<LatticeVector>& generators() const { return gens_; }
  /// Dimension of the linear span.
  std::size_t dimension() const { return dim_; }
  bool strongly_convex() const { return pointed_; }

  /// Generators of the dual cone, not canonicalized.
  const std::vector<LatticeVector>& halfspaces() const;
  bool contains(const RationalVector& x) const;
  bool contains(const LatticeVector& x) const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.n_ == b.n_ && a.gens_ == b.gens_; }

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  bool pointed_ = true;
  bool has_dual_ = false;
  std::vector<LatticeVector> gens_;
  std::vector<LatticeVector> dual_;
};

/// Raw generators of {y : y.g >= 0 for all g}; exact enumeration of the
/// facets of the rowspace cone plus a signed lineality basis.
std::vector<LatticeVector> dual_generators(std::size_t n, const std::vector<LatticeVector>& gens);

Cone dual_cone(const Cone& c);
bool is_strongly_convex(const Cone& c);
/// omega . g > 0 for every nonzero generator; c must be strongly convex.
bool relint_dual_contains(const Cone& c, const RationalVector& omega);
Cone cone_join(const Cone& a, const Cone& b);
Cone cone_intersection(const Cone& a, const Cone& b);

/// Some gamma with gamma1 - gamma and gamma2 - gamma in c1 ∩ c2.
LatticeVector shift_containment(const LatticeVector& gamma1, const Cone& c1, const LatticeVector& gamma2,
                                const Cone& c2);

/// omega in tau's dual with 0 < omega.v < -omega_j v_j for each j with v_j < 0.
RationalVector separating_omega(const Cone& tau, const LatticeVector& v);

}  // namespace coneseries
