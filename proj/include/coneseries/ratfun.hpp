#pragma once

#include <string>
#include <vector>

#include "coneseries/poly.hpp"

namespace coneseries {

/// Element of Q(T): num/den with gcd(num, den) = 1 and den monic.
class RatFun {
 public:
  RatFun() : den_(UniPoly::constant(1)) {}
  RatFun(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}  // NOLINT
  RatFun(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}              // NOLINT
  RatFun(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun derivative() const;
  RatFun inverse() const;

  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  std::string to_string(const std::string& var = "T") const;

 private:
  UniPoly num_;
  UniPoly den_;
};

using RatFunVector = std::vector<RatFun>;
using RatFunMatrix = std::vector<RatFunVector>;

/// Basis of the right kernel {v : M v = 0} over Q(T). Each basis vector is
/// returned with polynomial entries of trivial gcd and a monic first nonzero
/// entry. Elimination is fraction-free: rows are cleared of denominators and
/// reduced by cross-multiplication, then divided by their polynomial content.
std::vector<RatFunVector> ratfun_kernel(const RatFunMatrix& m, std::size_t columns);

/// M v, used by tests and by the ODE search to verify dependencies.
RatFunVector multiply(const RatFunMatrix& m, const RatFunVector& v);

}  // namespace coneseries
