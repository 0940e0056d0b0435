#include "coneseries/algebraic.hpp"

#include <sstream>

#include "coneseries/error.hpp"

namespace coneseries {

BiPoly::BiPoly(std::vector<UniPoly> y_coefficients) : coeffs_(std::move(y_coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const UniPoly& BiPoly::coeff(std::size_t j) const {
  static const UniPoly zero;
  return j < coeffs_.size() ? coeffs_[j] : zero;
}

BiPoly BiPoly::partial_y() const {
  std::vector<UniPoly> d;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d.push_back(Rational(static_cast<long>(j)) * coeffs_[j]);
  return BiPoly(std::move(d));
}

BiPoly BiPoly::partial_t() const {
  std::vector<UniPoly> d;
  for (const auto& c : coeffs_) d.push_back(c.derivative());
  return BiPoly(std::move(d));
}

Rational BiPoly::operator()(const Rational& t0, const Rational& y0) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y0 + (*it)(t0);
  return acc;
}

std::string BiPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[j].to_string("T") << ")";
    if (j > 0) os << "*Y";
    if (j > 1) os << "^" << j;
    first = false;
  }
  return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t length) {
  TruncatedSeries r(length, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < length; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < length; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& a, std::size_t length) {
  if (a.empty() || a[0] == 0) throw Error("NotInvertible", "series with zero constant term");
  TruncatedSeries inv(length, Rational(0));
  Rational c = 1 / a[0];
  for (std::size_t n = 0; n < length; ++n) {
    Rational s = n == 0 ? Rational(1) : Rational(0);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) s -= a[k] * inv[n - k];
    inv[n] = s * c;
  }
  return inv;
}

TruncatedSeries substitute(const BiPoly& q, const TruncatedSeries& y, std::size_t length) {
  TruncatedSeries acc(length, Rational(0));
  const auto& cs = q.y_coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = series_mul(acc, y, length);
    for (std::size_t i = 0; i < it->coefficients().size() && i < length; ++i) acc[i] += it->coefficients()[i];
  }
  return acc;
}

TruncatedSeries taylor_of_algebraic(const BiPoly& q, const Rational& y0, std::size_t degree) {
  if (q(0, y0) != 0) throw Error("NotARoot", "Q(0, y0) != 0");
  BiPoly qy = q.partial_y();
  if (qy(0, y0) == 0) throw Error("NotSimpleRoot", "dQ/dY(0, y0) = 0");
  const std::size_t target = degree + 1;
  TruncatedSeries y{y0};
  std::size_t prec = 1;
  while (prec < target) {
    prec = std::min(2 * prec, target);
    y.resize(prec, Rational(0));
    TruncatedSeries f = substitute(q, y, prec);
    TruncatedSeries fp = substitute(qy, y, prec);
    TruncatedSeries step = series_mul(f, series_inverse(fp, prec), prec);
    for (std::size_t i = 0; i < prec; ++i) y[i] -= step[i];
  }
  y.resize(target, Rational(0));
  return y;
}

}  // namespace coneseries
