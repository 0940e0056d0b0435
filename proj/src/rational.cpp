#include "coneseries/rational.hpp"

#include <algorithm>
#include <cctype>

#include "coneseries/error.hpp"

namespace coneseries {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  auto bad = [&] { throw Error("BadRational", "cannot parse '" + std::string(whole) + "'", Error::Kind::Usage); };
  if (s.empty()) bad();
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) bad();
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("BadRational", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(trim(text.substr(0, slash)), text);
  Integer den = parse_integer(trim(text.substr(slash + 1)), text);
  if (den == 0) throw Error("BadRational", "zero denominator in '" + std::string(text) + "'", Error::Kind::Usage);
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

LatticeVector primitive(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm_of(den, x.get_den());
  LatticeVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(Integer(x.get_num() * (den / x.get_den())));
  return primitive(r);
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd_of(g, x);
  if (g == 0) return v;
  LatticeVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(Integer(x / g));
  return r;
}

RationalVector parse_rational_vector(std::string_view text) {
  RationalVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

LatticeVector parse_lattice_vector(std::string_view text) {
  LatticeVector out;
  for (const auto& q : parse_rational_vector(text)) {
    if (q.get_den() != 1) throw Error("BadVector", "expected integer coordinates in '" + std::string(text) + "'", Error::Kind::Usage);
    out.push_back(q.get_num());
  }
  return out;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vector addition");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vector subtraction");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector scale(const LatticeVector& a, const Integer& s) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vector addition");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vector subtraction");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector scale(const RationalVector& a, const Rational& s) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

LatticeVector unit_vector(std::size_t n, std::size_t j) {
  LatticeVector e(n, Integer(0));
  e[j] = 1;
  return e;
}

Rational rational_gcd(const RationalVector& values) {
  Integer num = 0, den = 1;
  for (const auto& q : values) {
    if (q == 0) continue;
    num = gcd_of(num, q.get_num());
    den = lcm_of(den, q.get_den());
  }
  if (num == 0) return 0;
  return make_rational(num, den);
}

}  // namespace coneseries
