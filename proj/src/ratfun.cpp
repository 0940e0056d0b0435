#include "coneseries/ratfun.hpp"

#include "coneseries/error.hpp"

namespace coneseries {

RatFun::RatFun(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw Error("ZeroDenominator", "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  UniPoly g = gcd(num, den);
  num = UniPoly::divmod(num, g).first;
  den = UniPoly::divmod(den, g).first;
  Rational lead = den.leading();
  num_ = (1 / lead) * num;
  den_ = (1 / lead) * den;
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of the zero rational function");
  return RatFun(den_, num_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

std::string RatFun::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

using PolyRow = std::vector<UniPoly>;

UniPoly row_content(const PolyRow& row) {
  UniPoly g;
  for (const auto& p : row) g = gcd(g, p);
  return g;
}

void make_primitive(PolyRow& row) {
  UniPoly g = row_content(row);
  if (g.is_zero() || g.degree() == 0) {
    // Still normalise the rational scalar content to keep numbers small.
    for (const auto& p : row) {
      if (!p.is_zero()) {
        Rational s = p.primitive_part().leading() / p.leading();
        for (auto& q : row) q = s * q;
        break;
      }
    }
    return;
  }
  for (auto& p : row) p = UniPoly::divmod(p, g).first;
}

}  // namespace

std::vector<RatFunVector> ratfun_kernel(const RatFunMatrix& m, std::size_t columns) {
  if (columns == 0) throw Error("EmptyMatrix", "ratfun_kernel needs at least one column");
  std::vector<PolyRow> rows;
  for (const auto& r : m) {
    if (r.size() != columns) throw Error("DimensionMismatch", "ragged rational-function matrix");
    UniPoly l = UniPoly::constant(1);
    for (const auto& x : r) l = UniPoly::divmod(l * x.den(), gcd(l, x.den())).first;
    PolyRow row;
    for (const auto& x : r) row.push_back(x.num() * UniPoly::divmod(l, x.den()).first);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    // Prefer the lowest-degree nonzero pivot.
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      if (rows[p][c].is_zero() || rows[i][c].degree() < rows[p][c].degree()) p = i;
    }
    if (rows[p][c].is_zero()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      UniPoly a = rows[r][c], b = rows[i][c];
      UniPoly g = gcd(a, b);
      UniPoly fa = UniPoly::divmod(a, g).first, fb = UniPoly::divmod(b, g).first;
      for (std::size_t j = 0; j < columns; ++j) rows[i][j] = fa * rows[i][j] - fb * rows[r][j];
      make_primitive(rows[i]);
    }
    make_primitive(rows[r]);
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RatFunVector> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    RatFunVector v(columns, RatFun(Rational(0)));
    v[f] = RatFun(Rational(1));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = RatFun(-rows[i][f], rows[i][pivot_cols[i]]);
    }
    // Clear denominators, remove polynomial content, make first entry monic.
    UniPoly l = UniPoly::constant(1);
    for (const auto& x : v) l = UniPoly::divmod(l * x.den(), gcd(l, x.den())).first;
    PolyRow polys;
    for (const auto& x : v) polys.push_back(x.num() * UniPoly::divmod(l, x.den()).first);
    UniPoly g = row_content(polys);
    for (auto& p : polys) p = UniPoly::divmod(p, g).first;
    for (const auto& p : polys) {
      if (p.is_zero()) continue;
      Rational s = 1 / p.leading();
      for (auto& q : polys) q = s * q;
      break;
    }
    RatFunVector out;
    for (auto& p : polys) out.emplace_back(std::move(p));
    basis.push_back(std::move(out));
  }
  return basis;
}

RatFunVector multiply(const RatFunMatrix& m, const RatFunVector& v) {
  RatFunVector out;
  for (const auto& row : m) {
    if (row.size() != v.size()) throw Error("DimensionMismatch", "matrix-vector product");
    RatFun acc(Rational(0));
    for (std::size_t j = 0; j < v.size(); ++j) acc = acc + row[j] * v[j];
    out.push_back(acc);
  }
  return out;
}

}  // namespace coneseries
