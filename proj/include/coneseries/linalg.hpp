#pragma once

#include <optional>
#include <vector>

#include "coneseries/rational.hpp"

namespace coneseries {

using RationalMatrix = std::vector<RationalVector>;  // row-major

struct Echelon {
  RationalMatrix rows;               // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form over Q; `columns` is needed for empty input.
Echelon rref(const RationalMatrix& m, std::size_t columns);
std::size_t rank(const RationalMatrix& m, std::size_t columns);

/// Basis of {x : m x = 0}, one vector per free column, free entry set to 1.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns);

/// Some solution of `a x = b`, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b,
                                    std::size_t columns);

RationalMatrix to_rational(const std::vector<LatticeVector>& rows);

}  // namespace coneseries
