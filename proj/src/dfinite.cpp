#include "coneseries/dfinite.hpp"

#include <algorithm>

#include "coneseries/error.hpp"

namespace coneseries {

namespace {

// Polynomials in Y over Q(T), ascending powers.
using RPoly = std::vector<RatFun>;

void trim(RPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RPoly sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

RPoly mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  trim(out);
  return out;
}

std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  RPoly q;
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    RatFun f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

RPoly mod(const RPoly& a, const RPoly& q) { return divmod(a, q).second; }

std::size_t degree(const RPoly& a) { return a.empty() ? 0 : a.size() - 1; }

// s with s a = 1 mod q, when gcd(a, q) = 1.
std::optional<RPoly> inverse_mod(const RPoly& a, const RPoly& q) {
  RPoly r0 = q, r1 = mod(a, q), s0, s1{RatFun(1)};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    RPoly s2 = sub(s0, mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) return std::nullopt;
  RPoly inv = mul(s0, RPoly{r0[0].inverse()});
  return mod(inv, q);
}

RPoly from_bipoly(const BiPoly& q) {
  RPoly out;
  for (const auto& c : q.y_coefficients()) out.emplace_back(c);
  trim(out);
  return out;
}

// Derivation d/dT on Q(T)[Y]/(q), with dY/dT = dy.
RPoly derive(const RPoly& a, const RPoly& dy, const RPoly& q) {
  RPoly out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j].derivative();
  trim(out);
  RPoly da;
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (da.size() < j) da.resize(j);
    da[j - 1] = RatFun(a[j].num() * UniPoly::constant(static_cast<long>(j)), a[j].den());
  }
  trim(da);
  RPoly sum = out;
  RPoly chain = mul(da, dy);
  if (sum.size() < chain.size()) sum.resize(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) sum[i] = sum[i] + chain[i];
  trim(sum);
  return mod(sum, q);
}

UniPoly falling(std::size_t b) {
  UniPoly p = UniPoly::constant(1);
  for (std::size_t i = 0; i < b; ++i) p = p * UniPoly{-Rational(static_cast<long>(i)), 1};
  return p;
}

// Scales to coprime integer coefficients.
void integer_content_scale(std::vector<UniPoly>& ps) {
  Integer den = 1;
  for (const auto& p : ps)
    for (const auto& c : p.coefficients()) den = lcm_of(den, c.get_den());
  Integer g = 0;
  for (auto& p : ps) {
    p = Rational(den) * p;
    for (const auto& c : p.coefficients()) g = gcd_of(g, c.get_num());
  }
  if (g > 1)
    for (auto& p : ps) p = Rational(1) / Rational(g) * p;
}

void verify_on_branches(const BiPoly& q, const LinearOde& ode) {
  std::vector<Rational> at0;
  for (const auto& c : q.y_coefficients()) at0.push_back(c(0));
  UniPoly q0(at0);
  if (q0.is_zero()) return;
  BiPoly qy = q.partial_y();
  for (const auto& [y0, mult] : poly_rational_roots(q0)) {
    if (mult != 1 || qy(0, y0) == 0) continue;
    TruncatedSeries f = taylor_of_algebraic(q, y0, 20);
    for (const auto& x : ode_residual(ode, f))
      if (x != 0) throw Error("InternalError", "derived ODE does not annihilate the Taylor prefix");
  }
}

}  // namespace

LinearOde algebraic_to_ode(const BiPoly& q) {
  RPoly qq = from_bipoly(q);
  if (qq.size() < 2) throw Error("BadPolynomial", "need positive degree in Y");
  RPoly qy = from_bipoly(q.partial_y());
  RPoly qt = from_bipoly(q.partial_t());
  auto inv = inverse_mod(qy, qq);
  if (!inv) throw Error("NotSquarefree", "gcd(Q, dQ/dY) is not constant");
  RPoly neg_qt;
  for (const auto& c : qt) neg_qt.push_back(-c);
  RPoly dy = mod(mul(neg_qt, *inv), qq);

  const std::size_t d = degree(qq);
  std::vector<RPoly> derivs{mod(RPoly{RatFun(0), RatFun(1)}, qq)};
  for (std::size_t r = 0; r <= d; ++r) {
    // Columns F, F', ..., F^(r) in the basis 1, Y, ..., Y^(d-1).
    RatFunMatrix m(d, RatFunVector(r + 1));
    for (std::size_t b = 0; b <= r; ++b)
      for (std::size_t j = 0; j < derivs[b].size(); ++j) m[j][b] = derivs[b][j];
    auto kernel = ratfun_kernel(m, r + 1);
    if (!kernel.empty()) {
      RatFunVector v = kernel.front();
      UniPoly den = UniPoly::constant(1);
      for (const auto& x : v) den = den * x.den();
      LinearOde ode;
      for (const auto& x : v) ode.coefficients.push_back((x * RatFun(den)).num());
      while (!ode.coefficients.empty() && ode.coefficients.back().is_zero()) ode.coefficients.pop_back();
      UniPoly g;
      for (const auto& p : ode.coefficients) g = gcd(g, p);
      for (auto& p : ode.coefficients) p = UniPoly::divmod(p, g).first;
      integer_content_scale(ode.coefficients);
      const UniPoly& top = ode.coefficients.back();
      std::size_t lo = 0;
      while (top.coeff(lo) == 0) ++lo;
      if (top.coeff(lo) < 0)
        for (auto& p : ode.coefficients) p = -p;
      verify_on_branches(q, ode);
      return ode;
    }
    derivs.push_back(derive(derivs.back(), dy, qq));
  }
  throw Error("InternalError", "no dependency among d + 1 derivatives");
}

TruncatedSeries ode_residual(const LinearOde& ode, const TruncatedSeries& f) {
  const std::size_t r = ode.order();
  if (f.size() <= r) return {};
  const std::size_t len = f.size() - r;
  TruncatedSeries out(len);
  TruncatedSeries deriv = f;
  for (std::size_t b = 0; b <= r; ++b) {
    const UniPoly& p = ode.coefficients[b];
    for (std::size_t n = 0; n < len; ++n)
      for (int a = 0; a <= p.degree() && static_cast<std::size_t>(a) <= n; ++a)
        if (n - a < deriv.size()) out[n] += p.coeff(a) * deriv[n - a];
    TruncatedSeries next;
    for (std::size_t i = 1; i < deriv.size(); ++i) next.push_back(Rational(static_cast<long>(i)) * deriv[i]);
    deriv = std::move(next);
  }
  return out;
}

PRecurrence ode_to_recurrence(const LinearOde& ode) {
  if (ode.coefficients.empty()) throw Error("BadOde", "empty ODE");
  // T^a F^(b) contributes c_ab (m + j)^(b falling) a_(m+j) with j = b - a - smin.
  std::optional<long> smin, smax;
  for (std::size_t b = 0; b < ode.coefficients.size(); ++b)
    for (int a = 0; a <= ode.coefficients[b].degree(); ++a) {
      if (ode.coefficients[b].coeff(a) == 0) continue;
      long s = static_cast<long>(b) - a;
      if (!smin || s < *smin) smin = s;
      if (!smax || s > *smax) smax = s;
    }
  if (!smin) throw Error("BadOde", "zero ODE");
  PRecurrence rec;
  rec.qs.resize(static_cast<std::size_t>(*smax - *smin + 1));
  for (std::size_t b = 0; b < ode.coefficients.size(); ++b)
    for (int a = 0; a <= ode.coefficients[b].degree(); ++a) {
      const Rational c = ode.coefficients[b].coeff(a);
      if (c == 0) continue;
      std::size_t j = static_cast<std::size_t>(static_cast<long>(b) - a - *smin);
      rec.qs[j] = rec.qs[j] + c * falling(b);
    }
  rec.valid_from = 0;
  return rec;
}

Rational recurrence_residual(const PRecurrence& rec, const TruncatedSeries& a, std::size_t m) {
  if (m + rec.span() >= a.size()) throw Error("BadIndex", "sequence prefix too short");
  Rational s = 0;
  for (std::size_t j = 0; j < rec.qs.size(); ++j)
    s += rec.qs[j](Rational(static_cast<long>(m + j))) * a[m + j];
  return s;
}

GapBound gap_constant(const PRecurrence& rec, const RationalVector& omega, const LatticeVector& v, bool cauchy_audit) {
  if (omega.size() != v.size()) throw Error("DimensionMismatch", "omega and v of different dimensions");
  Rational step = dot(omega, v);
  if (step <= 0) throw Error("NonpositiveStep", "omega . v must be positive");
  GapBound g;
  g.n = static_cast<unsigned long>(rec.span());
  g.r = 0;
  Integer rc = 0;
  for (std::size_t j = 0; j < rec.qs.size(); ++j) {
    const UniPoly& q = rec.qs[j];
    if (q.degree() < 1) continue;
    for (const UniPoly& p : {q, q.shifted(Rational(static_cast<long>(j)))}) {
      for (const auto& z : poly_integer_roots(p)) g.r = std::max(g.r, Integer(abs(z)));
      if (cauchy_audit) rc = std::max(rc, cauchy_root_bound(p));
    }
  }
  g.run = g.n + g.r;
  g.c_per_step = 2 * g.run;
  g.c = Rational(g.c_per_step) * step;
  if (cauchy_audit) {
    g.r_cauchy = rc;
    g.c_cauchy = Rational(2 * (g.n + rc)) * step;
  }
  return g;
}

}  // namespace coneseries
