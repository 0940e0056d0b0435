#pragma once

#include <optional>
#include <vector>

#include "coneseries/algebraic.hpp"
#include "coneseries/ratfun.hpp"

namespace coneseries {

/// sum_b p_b(T) F^(b) = 0; p_b is the coefficient of the b-th derivative.
struct LinearOde {
  std::vector<UniPoly> coefficients;
  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  friend bool operator==(const LinearOde&, const LinearOde&) = default;
};

/// sum_j Q_j(m + j) a_(m+j) = 0 for every m >= valid_from.
struct PRecurrence {
  std::vector<UniPoly> qs;
  Integer valid_from = 0;
  std::size_t span() const { return qs.empty() ? 0 : qs.size() - 1; }
  friend bool operator==(const PRecurrence&, const PRecurrence&) = default;
};

struct GapBound {
  Integer n;        // recurrence span N
  Integer r;        // largest |integer root|
  Integer run;      // N + r
  Integer c_per_step;  // 2(N + r)
  Rational c;       // 2(N + r) omega.v
  std::optional<Integer> r_cauchy;  // audit: bound over all complex roots
  std::optional<Rational> c_cauchy;
};

/// Homogeneous ODE of minimal order annihilating every root of Q, with
/// integer coprime coefficients and the top coefficient's lowest nonzero
/// coefficient positive. Throws NotSquarefree.
LinearOde algebraic_to_ode(const BiPoly& q);

/// Coefficients 0..len-1-order of the ODE applied to a truncated series.
TruncatedSeries ode_residual(const LinearOde& ode, const TruncatedSeries& f);

PRecurrence ode_to_recurrence(const LinearOde& ode);

/// sum_j Q_j(m + j) a_(m+j); a must have at least m + span + 1 entries.
Rational recurrence_residual(const PRecurrence& rec, const TruncatedSeries& a, std::size_t m);

/// r is taken over integer roots of Q_j(z) and of Q_j(m + j).
GapBound gap_constant(const PRecurrence& rec, const RationalVector& omega, const LatticeVector& v,
                      bool cauchy_audit = false);

}  // namespace coneseries
