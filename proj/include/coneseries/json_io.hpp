#pragma once

#include <string>

#include "json.hpp"

#include "coneseries/dfinite.hpp"
#include "coneseries/roots.hpp"
#include "coneseries/transcendence.hpp"

namespace coneseries {

using Json = nlohmann::json;

// Rationals are strings in canonical form ("3", "-1/2"); integers are JSON
// numbers when they fit in 64 bits, strings otherwise. Readers accept both.
// Malformed documents raise Error("BadDocument") of usage kind.

Json encode(const Rational& q);
Json encode(const Integer& z);
Json encode(const RationalVector& v);
Json encode(const LatticeVector& v);
Json encode(const UniPoly& p);
Json encode(const BiPoly& p);
Json encode(const Cone& c);
Json encode(const VectorOrder& o);
Json encode(const IndexSet& s);
Json encode(const SupportSpec& s);
Json encode(const LaurentSeriesValue& f);
Json encode(const PolyOverSeries& p);
Json encode(const InitialRoot& r);
Json encode(const HenselResult& h);
Json encode(const LinearOde& ode);
Json encode(const PRecurrence& rec);
Json encode(const GapBound& g);
Json encode(const SlabCount& c);
Json encode(const TauClass& t);
Json encode(const RaySeries& xi);
Json encode(const Certificate& c);

Rational decode_rational(const Json& j);
Integer decode_integer(const Json& j);
RationalVector decode_rational_vector(const Json& j);
LatticeVector decode_lattice_vector(const Json& j);
UniPoly decode_unipoly(const Json& j);
BiPoly decode_bipoly(const Json& j);
Cone decode_cone(const Json& j);
VectorOrder decode_order(const Json& j);
IndexSet decode_index_set(const Json& j);
SupportSpec decode_support(const Json& j);
LaurentSeriesValue decode_series(const Json& j);
PolyOverSeries decode_poly_over_series(const Json& j);
LinearOde decode_ode(const Json& j);
PRecurrence decode_recurrence(const Json& j);
RaySeries decode_ray_series(const Json& j);

/// Deterministic serialization: sorted keys, two-space indent.
std::string canonical_dump(const Json& j);
std::string sha256_hex(const std::string& data);

}  // namespace coneseries
