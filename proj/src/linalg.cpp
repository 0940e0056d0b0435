#include "coneseries/linalg.hpp"

#include "coneseries/error.hpp"

namespace coneseries {

Echelon rref(const RationalMatrix& m, std::size_t columns) {
  RationalMatrix a = m;
  for (const auto& row : a) {
    if (row.size() != columns) throw Error("DimensionMismatch", "ragged matrix");
  }
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < columns; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& m, std::size_t columns) { return rref(m, columns).pivots.size(); }

RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns) {
  Echelon e = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(columns, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b, std::size_t columns) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "solve: rhs length");
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(aug, columns + 1);
  RationalVector x(columns, Rational(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == columns) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][columns];
  }
  return x;
}

RationalMatrix to_rational(const std::vector<LatticeVector>& rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(coneseries::to_rational(r));
  return m;
}

}  // namespace coneseries
