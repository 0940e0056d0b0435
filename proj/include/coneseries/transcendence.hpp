#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coneseries/algebraic.hpp"
#include "coneseries/support.hpp"

namespace coneseries {

/// Coefficient a_m of a ray series, for m in the ray's index set.
struct CoefficientRule {
  enum class Kind { Constant, Explicit, Algebraic };
  Kind kind = Kind::Constant;
  Rational constant = 1;
  std::vector<Rational> values;  // Explicit: a_m = values[m], unknown beyond
  BiPoly q;                      // Algebraic: Taylor coefficients of the root of q through y0
  Rational y0 = 0;
  friend bool operator==(const CoefficientRule&, const CoefficientRule&) = default;
};

/// x^gamma * sum over m in `indices` of a_m x^(m v), integral exponents.
struct RaySeries {
  LatticeVector gamma;
  LatticeVector v;
  IndexSet indices;
  CoefficientRule coefficients;
  friend bool operator==(const RaySeries&, const RaySeries&) = default;
};

enum class Verdict {
  NotAlgebraicGap,
  NotAlgebraicLiouville,
  ConsistentToHorizon,
  DiophantineA1Holds,
  DiophantineA1Fails
};

const char* to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::ConsistentToHorizon;
  std::string check;       // "gap", "liouville", "dioph"
  std::string conclusion;  // what the verdict asserts
  RationalVector omega;
  nlohmann::json inputs;   // serialized arguments, enough to replay
  nlohmann::json witness;
};

/// Level-gap test on the omega-levels of a support.
Certificate gap_certificate(const SupportSpec& s, const RationalVector& omega);

/// Truncation approximants f_N / x^(beta_N) of a ray series.
Certificate liouville_certificate(const RaySeries& xi, const RationalVector& omega, const Rational& a_max,
                                  std::size_t n_max);

/// omega . (m0 v + gamma) with m0 the first index with a_m != 0 whose
/// exponent m v + beta + gamma leaves the first orthant. Throws NoBlockedIndex.
Rational dioph_sup_nu(const RaySeries& xi, const LatticeVector& beta, const RationalVector& omega);

Certificate dioph_a1_scan(const RaySeries& xi, const RationalVector& omega, const Integer& beta_box,
                          const Rational& b_guess);

/// Recomputes a serialized certificate from its inputs; true when every
/// field, digests included, is reproduced.
bool replay(const nlohmann::json& certificate);

}  // namespace coneseries
