#pragma once

#include <optional>
#include <vector>

#include "coneseries/series.hpp"

namespace coneseries {

/// P(T) = a_0 + a_1 T + ... + a_d T^d with series coefficients, a_d != 0.
struct PolyOverSeries {
  std::vector<LaurentSeriesValue> coefficients;
  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// Validates d >= 1, a common ambient dimension and a nonzero leading coefficient.
void validate(const PolyOverSeries& p);

/// A monomial c x^alpha solving the omega-initial equation of P.
struct InitialRoot {
  Rational t;             // omega . alpha
  RationalVector alpha;   // real coordinates
  Rational c;
  int multiplicity = 1;
  Integer ramification = 1;  // minimal k with k alpha integral
  friend bool operator==(const InitialRoot&, const InitialRoot&) = default;
};

/// Slopes of the nu_omega Newton polygon and the rational monomial roots of
/// the initial equations, sorted by (t, alpha, c). Irrational roots of an
/// initial equation are skipped.
std::vector<InitialRoot> newton_polygon_initials(const PolyOverSeries& p, const RationalVector& omega);

struct HenselResult {
  LaurentSeriesValue root;  // exact strictly below `root_horizon`
  Rational root_horizon;
  TermMap residual;          // P(root) in stored coordinates
  bool residual_complete = false;  // false: only levels <= D were computed (and vanish)
  std::optional<Rational> residual_nu;  // nullopt when the computed residual is zero
  LatticeVector shift;       // stored coordinates
  Cone cone;                 // root support lies in shift + cone
  bool order_nonnegative = false;  // cone_nonnegative(o, cone)
  std::size_t steps = 0;
};

/// Lifts c x^alpha to a root with nu_omega(P(root)) > D, where omega is the
/// first vector of `o`. When all realized exponents lie on one ray the support
/// is reported as a bounded-gap ray; `gap_bound` overrides the observed gap.
HenselResult hensel_lift(const PolyOverSeries& p, const RationalVector& alpha, const Rational& c,
                         const VectorOrder& o, const Rational& horizon,
                         std::optional<Integer> gap_bound = std::nullopt);

}  // namespace coneseries
