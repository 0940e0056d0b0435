#pragma once

#include <string>
#include <vector>

#include "coneseries/poly.hpp"

namespace coneseries {

/// Polynomial in (T, Y) stored by powers of Y; entry j is the coefficient
/// of Y^j as a polynomial in T.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> y_coefficients);

  int degree_y() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<UniPoly>& y_coefficients() const { return coeffs_; }
  const UniPoly& coeff(std::size_t j) const;
  bool is_zero() const { return coeffs_.empty(); }

  BiPoly partial_y() const;
  BiPoly partial_t() const;
  /// Q(t0, y0)
  Rational operator()(const Rational& t0, const Rational& y0) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;
  std::string to_string() const;

 private:
  std::vector<UniPoly> coeffs_;
};

/// Power series in T truncated to a fixed number of coefficients.
using TruncatedSeries = std::vector<Rational>;

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t length);
/// 1/a mod T^length; requires a[0] != 0.
TruncatedSeries series_inverse(const TruncatedSeries& a, std::size_t length);
/// Q(T, y(T)) mod T^length.
TruncatedSeries substitute(const BiPoly& q, const TruncatedSeries& y, std::size_t length);

/// First D+1 Taylor coefficients of the unique power-series root Y(T) of Q
/// with Y(0) = y0, by quadratic Newton iteration. Throws NotARoot when
/// Q(0, y0) != 0 and NotSimpleRoot when dQ/dY(0, y0) = 0.
TruncatedSeries taylor_of_algebraic(const BiPoly& q, const Rational& y0, std::size_t degree);

}  // namespace coneseries
