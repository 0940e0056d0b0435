#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "coneseries/support.hpp"

namespace coneseries {

/// Where the stored coefficients are exact: everywhere, or for every exponent
/// alpha (real coordinates) with omega . alpha < horizon.
struct KnownRegion {
  bool everywhere = true;
  RationalVector omega;
  Rational horizon = 0;
  friend bool operator==(const KnownRegion&, const KnownRegion&) = default;
};

/// Closed-form infinite part: coefficient * sum over m in indices of x^(origin + m direction).
struct RayTerm {
  LatticeVector origin;
  LatticeVector direction;
  IndexSet indices;
  Rational coefficient = 1;
  friend bool operator==(const RayTerm&, const RayTerm&) = default;
};

using TermMap = std::map<LatticeVector, Rational>;

/// Sparse Laurent (Puiseux) series. Exponents are stored multiplied by the
/// ramification k. Ray terms are only allowed when the value is known
/// everywhere; they must be disjoint from each other and from the finite terms.
class LaurentSeriesValue {
 public:
  LaurentSeriesValue() = default;
  explicit LaurentSeriesValue(std::size_t n, Integer ramification = 1);

  static LaurentSeriesValue monomial(const LatticeVector& exponent, const Rational& c, Integer ramification = 1);
  static LaurentSeriesValue constant(std::size_t n, const Rational& c);

  void add_term(const LatticeVector& exponent, const Rational& c);
  void add_ray(const RayTerm& ray);
  /// Restricts exactness to omega . alpha < horizon, materializing ray terms
  /// and dropping stored terms at or above the horizon.
  void truncate(const RationalVector& omega, const Rational& horizon);
  /// Replaces the derived support by a caller-supplied potential support,
  /// which must contain every stored exponent.
  void set_support(const SupportSpec& s);

  std::size_t ambient() const { return n_; }
  const Integer& ramification() const { return k_; }
  const TermMap& terms() const { return terms_; }
  const std::vector<RayTerm>& rays() const { return rays_; }
  const SupportSpec& support() const { return support_; }
  const KnownRegion& known() const { return known_; }
  bool has_custom_support() const { return custom_support_; }

  /// Coefficient at a stored exponent; HorizonExceedsKnowledge outside the
  /// known region.
  Rational coefficient(const LatticeVector& stored) const;
  /// Same value over a ramification multiple of k.
  LaurentSeriesValue with_ramification(const Integer& k) const;

  friend bool operator==(const LaurentSeriesValue&, const LaurentSeriesValue&) = default;

 private:
  std::size_t n_ = 0;
  Integer k_ = 1;
  TermMap terms_;
  std::vector<RayTerm> rays_;
  SupportSpec support_;
  KnownRegion known_;
  bool custom_support_ = false;
};

/// Bound B such that every coefficient with omega . alpha < B is known;
/// nullopt when everything is known. Throws HorizonExceedsKnowledge when the
/// known region cannot be transferred to omega.
std::optional<Rational> known_below(const LaurentSeriesValue& f, const RationalVector& omega);

/// All nonzero terms with omega . alpha < bound (real coordinates).
TermMap terms_below(const LaurentSeriesValue& f, const RationalVector& omega, const Rational& bound);

/// min omega . alpha over the (potential) support; NoMinimum when unbounded.
Rational nu_omega(const SupportSpec& s, const RationalVector& omega);
/// min omega . alpha over the nonzero terms.
Rational nu_omega(const LaurentSeriesValue& f, const RationalVector& omega);

/// Sub-series of the terms on the minimal omega-level (known everywhere).
LaurentSeriesValue initial_part(const LaurentSeriesValue& f, const RationalVector& omega);

struct RayPart {
  std::function<Rational(const Integer&)> coefficient;  // G(m)
  bool on_ray = false;  // the whole series lives on gamma + Z>=0 v
  std::vector<Rational> prefix(std::size_t count) const;
};

/// G(m) = coefficient of x^(gamma + m v), stored coordinates.
RayPart ray_part(const LaurentSeriesValue& f, const LatticeVector& gamma, const LatticeVector& v);

enum class SeriesOp { Add, Multiply };

/// f op g, exact for omega . alpha < horizon.
LaurentSeriesValue combine(const LaurentSeriesValue& f, const LaurentSeriesValue& g, SeriesOp op,
                           const RationalVector& omega, const Rational& horizon);

}  // namespace coneseries
