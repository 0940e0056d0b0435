#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coneseries/rational.hpp"

namespace coneseries {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Canonical: no trailing zero coefficients (the zero polynomial is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  static UniPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  /// p(x + s)
  UniPoly shifted(const Rational& s) const;
  UniPoly monic() const;
  /// Positive rational multiple with coprime integer coefficients.
  UniPoly primitive_part() const;
  std::vector<Integer> integer_coefficients() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "m") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// All integer roots of `p`, ascending, by rational-root-theorem divisor
/// enumeration. Throws Error("ZeroPolynomial") for p = 0.
std::vector<Integer> poly_integer_roots(const UniPoly& p);

/// Rational roots with multiplicities, ascending. Throws ZeroPolynomial.
std::vector<std::pair<Rational, int>> poly_rational_roots(const UniPoly& p);

/// Ceiling of 1 + max |a_i / a_n|: every complex root has modulus below it.
Integer cauchy_root_bound(const UniPoly& p);

}  // namespace coneseries
