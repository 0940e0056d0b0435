#include "coneseries/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coneseries/error.hpp"

namespace coneseries {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error("ZeroPolynomial", "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::shifted(const Rational& s) const {
  // Horner with the linear polynomial (x + s).
  UniPoly result;
  UniPoly lin{s, Rational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * lin + constant(*it);
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return (1 / leading()) * *this;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer den = 1, num = 0;
  for (const auto& c : coeffs_) den = lcm_of(den, c.get_den());
  std::vector<Integer> ints;
  for (const auto& c : coeffs_) ints.push_back(Integer(c.get_num() * (den / c.get_den())));
  for (const auto& z : ints) num = gcd_of(num, z);
  if (ints.back() < 0) num = -num;
  std::vector<Rational> out;
  for (const auto& z : ints) out.emplace_back(Integer(z / num));
  return UniPoly(std::move(out));
}

std::vector<Integer> UniPoly::integer_coefficients() const {
  Integer den = 1;
  for (const auto& c : coeffs_) den = lcm_of(den, c.get_den());
  std::vector<Integer> out;
  for (const auto& c : coeffs_) out.push_back(Integer(c.get_num() * (den / c.get_den())));
  return out;
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  std::vector<Rational> r = a.coeffs_;
  for (auto& x : r) x *= c;
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error("ZeroPolynomial", "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[k] * inv;
    if (c == 0) continue;
    quo[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs_of(c);
    if (i == 0 || a != 1) os << coneseries::to_string(a);
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = UniPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

Integer eval_integer(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

constexpr unsigned long kMaxDivisorScan = 20'000'000;

}  // namespace

Integer cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial", "root bound of the zero polynomial");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_of(p.coeff(i) / p.leading()));
  return ceil_of(Rational(1 + m));
}

std::vector<Integer> poly_integer_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial", "integer roots of the zero polynomial");
  std::vector<Integer> c = p.integer_coefficients();
  std::set<Integer> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.insert(Integer(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() > 1) {
    // Any integer root z != 0 divides c[0] and satisfies |z| < Cauchy bound.
    Integer c0 = abs(c[0]);
    Integer bound = std::min(cauchy_root_bound(UniPoly(std::vector<Rational>(c.begin(), c.end()))), c0);
    auto test = [&](const Integer& d) {
      if (eval_integer(c, d) == 0) roots.insert(d);
      Integer neg = -d;
      if (eval_integer(c, neg) == 0) roots.insert(neg);
    };
    if (bound <= kMaxDivisorScan) {
      for (Integer d = 1; d <= bound; ++d) {
        if (c0 % d == 0) test(d);
      }
    } else {
      Integer s = sqrt(c0);
      if (s > kMaxDivisorScan) {
        throw Error("RootBoundTooLarge", "constant term too large for divisor enumeration");
      }
      for (Integer d = 1; d <= s; ++d) {
        if (c0 % d != 0) continue;
        if (d <= bound) test(d);
        Integer e = c0 / d;
        if (e <= bound) test(e);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<std::pair<Rational, int>> poly_rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial", "rational roots of the zero polynomial");
  // With a = lead, a^(d-1) p(z / a) is monic with integer coefficients.
  std::vector<Integer> c = p.integer_coefficients();
  const int d = p.degree();
  Integer a = c.back();
  std::vector<Rational> monic(c.size());
  Integer pw = 1;
  for (int j = d - 1; j >= 0; --j) {
    monic[j] = Rational(c[j] * pw);
    pw *= a;
  }
  monic[d] = 1;
  std::vector<std::pair<Rational, int>> out;
  UniPoly rest = p;
  for (const auto& z : poly_integer_roots(UniPoly(monic))) {
    Rational r = Rational(z) / Rational(a);
    UniPoly lin{-r, 1};
    int mult = 0;
    while (rest.degree() > 0) {
      auto [q, rem] = UniPoly::divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q;
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  return out;
}

}  // namespace coneseries
