#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace coneseries {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0

using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q". Throws Error("BadRational") on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Rational abs_of(const Rational& q);

Integer gcd_of(const Integer& a, const Integer& b);
Integer lcm_of(const Integer& a, const Integer& b);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);
Integer dot(const LatticeVector& a, const LatticeVector& b);

RationalVector to_rational(const LatticeVector& v);
bool is_zero(const LatticeVector& v);
bool is_zero(const RationalVector& v);

/// Positive multiple of `v` with coprime integer coordinates (zero stays zero).
LatticeVector primitive(const RationalVector& v);
LatticeVector primitive(const LatticeVector& v);

/// Comma-separated list of rationals, as used by the CLI vector flags.
RationalVector parse_rational_vector(std::string_view text);
LatticeVector parse_lattice_vector(std::string_view text);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector scale(const LatticeVector& a, const Integer& s);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& a, const Rational& s);

LatticeVector unit_vector(std::size_t n, std::size_t j);

/// Gcd of a list of positive rationals, i.e. the generator of the subgroup
/// of Q they span (zero entries ignored; returns 0 for an all-zero list).
Rational rational_gcd(const RationalVector& values);

}  // namespace coneseries
