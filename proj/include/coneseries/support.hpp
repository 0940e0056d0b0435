#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coneseries/cone.hpp"
#include "coneseries/index_set.hpp"
#include "coneseries/order.hpp"

namespace coneseries {

/// Points gamma + m v for m in `indices`.
struct RayComponent {
  LatticeVector origin;
  LatticeVector direction;  // primitive
  IndexSet indices;
  friend bool operator==(const RayComponent&, const RayComponent&) = default;
};

/// Every lattice point of gamma + cone is a potential support point.
struct TailComponent {
  LatticeVector origin;
  Cone cone;  // strongly convex
  friend bool operator==(const TailComponent&, const TailComponent&) = default;
};

/// Symbolic subset of (1/k)Z^n. Coordinates are stored multiplied by the
/// ramification k, so every stored vector is integral.
class SupportSpec {
 public:
  SupportSpec() = default;
  explicit SupportSpec(std::size_t n, Integer ramification = 1);

  void add_point(const LatticeVector& p);
  /// A non-primitive direction d*v is stored as v with indices scaled by d.
  void add_ray(const LatticeVector& origin, const LatticeVector& direction, const IndexSet& indices);
  void add_tail(const LatticeVector& origin, const Cone& cone);

  std::size_t ambient() const { return n_; }
  const Integer& ramification() const { return k_; }
  const std::vector<LatticeVector>& points() const { return points_; }
  const std::vector<RayComponent>& rays() const { return rays_; }
  const std::vector<TailComponent>& tails() const { return tails_; }
  bool empty() const;

  /// Same set with stored coordinates over a ramification multiple of k.
  SupportSpec with_ramification(const Integer& k) const;
  /// True when the stored vector can be a support point (tails and
  /// bounded-gap rays answer for their potential points).
  bool may_contain(const LatticeVector& stored) const;

  friend bool operator==(const SupportSpec&, const SupportSpec&) = default;

 private:
  std::size_t n_ = 0;
  Integer k_ = 1;
  std::vector<LatticeVector> points_;
  std::vector<RayComponent> rays_;
  std::vector<TailComponent> tails_;
};

/// Union; the ramification becomes the lcm of the two.
SupportSpec merge(const SupportSpec& a, const SupportSpec& b);

struct SlabCount {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Finite;
  Integer bound = 0;   // number of points when Finite
  bool exact = true;   // false when `bound` is only an upper bound
};

/// Number of support points alpha with alpha . omega <= level.
SlabCount slab_count(const SupportSpec& s, const RationalVector& omega, const Rational& level);

struct TauClass {
  enum class Kind { InTau0, InTau1, Boundary, Unknown };
  Kind kind = Kind::Unknown;
  Rational lambda0 = 0;  // sup A_omega, meaningful for Boundary
};

const char* to_string(SlabCount::Kind k);
const char* to_string(TauClass::Kind k);

TauClass tau_classify(const SupportSpec& s, const RationalVector& omega);

/// gamma and a strongly convex cone containing the first orthant, the ray
/// directions and the tail cones, with s inside gamma + cone.
std::optional<std::pair<LatticeVector, Cone>> shifted_cone_hull(const SupportSpec& s);

/// gamma and an o-non-negative rational cone with s inside gamma + cone
/// (stored coordinates), when one exists.
std::optional<std::pair<LatticeVector, Cone>> field_family_witness(const SupportSpec& s, const VectorOrder& o);
bool in_field_family(const SupportSpec& s, const VectorOrder& o);

/// o-minimal potential support point, in stored coordinates.
LatticeVector min_support(const SupportSpec& s, const VectorOrder& o);

bool in_localized_ring(const SupportSpec& s);

/// All support points inside the stored-coordinate box [-w, w]^n.
/// Throws WindowTooLarge when more than `cap` points would be produced.
std::vector<LatticeVector> materialize_window(const SupportSpec& s, const Integer& w, std::size_t cap);

}  // namespace coneseries
