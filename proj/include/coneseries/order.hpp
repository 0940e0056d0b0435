#pragma once

#include <vector>

#include "coneseries/cone.hpp"
#include "coneseries/rational.hpp"

namespace coneseries {

enum class Cmp { Less, Equal, Greater };

const char* to_string(Cmp c);

/// Lexicographic preorder: alpha <= beta iff (u1.alpha, ..., us.alpha) <=lex
/// (u1.beta, ..., us.beta).
class VectorOrder {
 public:
  VectorOrder() = default;
  explicit VectorOrder(std::vector<RationalVector> vectors);

  const std::vector<RationalVector>& vectors() const { return vectors_; }
  std::size_t ambient() const { return vectors_.front().size(); }
  /// True when the vectors span R^n, i.e. the preorder is an order.
  bool total() const { return total_; }

  friend bool operator==(const VectorOrder&, const VectorOrder&) = default;

 private:
  std::vector<RationalVector> vectors_;
  bool total_ = false;
};

Cmp compare(const VectorOrder& o, const RationalVector& alpha, const RationalVector& beta);
/// compare(o, alpha, 0)
Cmp sign(const VectorOrder& o, const RationalVector& alpha);
Cmp sign(const VectorOrder& o, const LatticeVector& alpha);

bool is_positive(const VectorOrder& o);
bool cone_nonnegative(const VectorOrder& o, const Cone& c);

/// Total order whose first vector is omega and under which `c` is
/// non-negative. When c joined with the first orthant still lies in the
/// half-space of omega, the result is also positive.
VectorOrder refine_over_cone(const RationalVector& omega, const Cone& c);

/// Checks cone_nonnegative for all 2^(n-1) orders (omega, ±u2, ..., ±un).
bool signflip_relint_test(const Cone& c, const RationalVector& omega, const std::vector<RationalVector>& basis);

}  // namespace coneseries
