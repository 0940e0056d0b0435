#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coneseries/poly.hpp"
#include "coneseries/rational.hpp"

namespace coneseries {

/// Symbolic set of ray indices m >= 0. The elements are factor * s where s
/// ranges over the distinct values of the defining sequence term(0), term(1), ...
///
/// BoundedGapTail(from, max_gap) is the one inexact variant: an infinite set
/// whose elements are not known individually, only that every interval
/// [x, x + max_gap] with x >= from meets it. Hensel lifts report their ray
/// supports this way.
class IndexSet {
 public:
  enum class Kind { All, Arithmetic, PolynomialValues, FactorialValues, Explicit, BoundedGapTail };

  static IndexSet all();
  static IndexSet arithmetic(const Integer& start, const Integer& step);
  /// p must be integer valued and strictly increasing on Z>=0 with p(0) >= 0.
  static IndexSet polynomial(const UniPoly& p);
  static IndexSet factorial();
  static IndexSet explicit_values(std::vector<Integer> values);
  static IndexSet bounded_gap_tail(const Integer& from, const Integer& max_gap);

  Kind kind() const { return kind_; }
  const Integer& factor() const { return factor_; }
  const Integer& start() const { return a_; }
  const Integer& step() const { return b_; }
  const UniPoly& poly() const { return poly_; }
  const std::vector<Integer>& values() const { return values_; }

  /// Same set multiplied by d > 0.
  IndexSet scaled(const Integer& d) const;

  bool infinite() const { return kind_ != Kind::Explicit; }
  bool empty() const { return kind_ == Kind::Explicit && values_.empty(); }
  /// False only for BoundedGapTail.
  bool enumerable() const { return kind_ != Kind::BoundedGapTail; }

  /// i-th term of the defining sequence (with repetitions for factorials).
  Integer term(const Integer& i) const;
  /// Smallest element >= x, nullopt when there is none.
  std::optional<Integer> first_at_least(const Integer& x) const;
  /// Number of elements <= x.
  Integer count_le(const Integer& x) const;
  /// Upper bound on count_le that is valid for every variant.
  Integer count_le_bound(const Integer& x) const;
  /// Sorted elements <= limit.
  std::vector<Integer> elements_up_to(const Integer& limit) const;
  std::optional<Integer> min_element() const;

  /// Differences between consecutive elements are bounded.
  bool gaps_bounded() const;
  /// Ratio of consecutive elements is unbounded (only factorial values).
  bool ratio_unbounded() const;

  std::string describe() const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  Integer raw_first_at_least(const Integer& x, bool& found) const;
  Integer raw_count_le(const Integer& x) const;

  Kind kind_ = Kind::All;
  Integer a_ = 0;  // Arithmetic start, BoundedGapTail from
  Integer b_ = 1;  // Arithmetic step, BoundedGapTail max_gap
  UniPoly poly_;
  std::vector<Integer> values_;
  Integer factor_ = 1;
};

const char* to_string(IndexSet::Kind k);

Integer factorial_of(const Integer& i);

}  // namespace coneseries
