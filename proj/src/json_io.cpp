#include "coneseries/json_io.hpp"

#include <openssl/evp.h>

#include <cstdio>

#include "coneseries/error.hpp"

namespace coneseries {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("BadDocument", what, Error::Kind::Usage); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) bad(std::string("field '") + key + "' must be an array");
  return a;
}

Json optional_array(const Json& j, const char* key) {
  if (!j.contains(key)) return Json::array();
  const Json& a = j.at(key);
  if (!a.is_array()) bad(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t decode_size(const Json& j) {
  Integer z = decode_integer(j);
  if (z < 0 || !z.fits_ulong_p()) bad("expected a small nonnegative integer");
  return z.get_ui();
}

Json encode_terms(const TermMap& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back({{"exponent", encode(e)}, {"coefficient", encode(c)}});
  return out;
}

}  // namespace

Json encode(const Rational& q) { return to_string(q); }

Json encode(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return z.get_str();
}

Json encode(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode(const UniPoly& p) { return encode(p.coefficients()); }

Json encode(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.y_coefficients()) out.push_back(encode(c));
  return out;
}

Json encode(const Cone& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators()) gens.push_back(encode(g));
  return {{"ambient", c.ambient()}, {"generators", gens}};
}

Json encode(const VectorOrder& o) {
  Json vs = Json::array();
  for (const auto& v : o.vectors()) vs.push_back(encode(v));
  return {{"vectors", vs}};
}

Json encode(const IndexSet& s) {
  Json out{{"kind", to_string(s.kind())}};
  switch (s.kind()) {
    case IndexSet::Kind::All: break;
    case IndexSet::Kind::Arithmetic:
      out["start"] = encode(s.start());
      out["step"] = encode(s.step());
      break;
    case IndexSet::Kind::PolynomialValues: out["poly"] = encode(s.poly()); break;
    case IndexSet::Kind::FactorialValues:
      if (s.factor() != 1) out["factor"] = encode(s.factor());
      break;
    case IndexSet::Kind::Explicit: out["values"] = encode(LatticeVector(s.values())); break;
    case IndexSet::Kind::BoundedGapTail:
      out["from"] = encode(s.start());
      out["max_gap"] = encode(s.step());
      break;
  }
  return out;
}

Json encode(const SupportSpec& s) {
  Json points = Json::array(), rays = Json::array(), tails = Json::array();
  for (const auto& p : s.points()) points.push_back(encode(p));
  for (const auto& r : s.rays())
    rays.push_back({{"origin", encode(r.origin)}, {"direction", encode(r.direction)}, {"indices", encode(r.indices)}});
  for (const auto& t : s.tails()) tails.push_back({{"origin", encode(t.origin)}, {"cone", encode(t.cone)}});
  return {{"ambient", s.ambient()}, {"ramification", encode(s.ramification())},
          {"points", points},       {"rays", rays},
          {"tails", tails}};
}

Json encode(const LaurentSeriesValue& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays())
    rays.push_back({{"origin", encode(r.origin)},
                    {"direction", encode(r.direction)},
                    {"indices", encode(r.indices)},
                    {"coefficient", encode(r.coefficient)}});
  Json known;
  if (f.known().everywhere) known = {{"everywhere", true}};
  else known = {{"everywhere", false}, {"omega", encode(f.known().omega)}, {"horizon", encode(f.known().horizon)}};
  Json out{{"ambient", f.ambient()},
           {"ramification", encode(f.ramification())},
           {"terms", encode_terms(f.terms())},
           {"rays", rays},
           {"known", known}};
  if (f.has_custom_support()) out["support"] = encode(f.support());
  return out;
}

Json encode(const PolyOverSeries& p) {
  Json cs = Json::array();
  for (const auto& a : p.coefficients) cs.push_back(encode(a));
  return {{"coefficients", cs}};
}

Json encode(const InitialRoot& r) {
  return {{"t", encode(r.t)},
          {"alpha", encode(r.alpha)},
          {"c", encode(r.c)},
          {"multiplicity", r.multiplicity},
          {"ramification", encode(r.ramification)}};
}

Json encode(const HenselResult& h) {
  return {{"root", encode(h.root)},
          {"root_horizon", encode(h.root_horizon)},
          {"residual", encode_terms(h.residual)},
          {"residual_complete", h.residual_complete},
          {"residual_nu", h.residual_nu ? encode(*h.residual_nu) : Json(nullptr)},
          {"shift", encode(h.shift)},
          {"cone", encode(h.cone)},
          {"order_nonnegative", h.order_nonnegative},
          {"steps", h.steps}};
}

Json encode(const LinearOde& ode) {
  Json cs = Json::array();
  for (const auto& p : ode.coefficients) cs.push_back(encode(p));
  return {{"coefficients", cs}, {"order", ode.order()}};
}

Json encode(const PRecurrence& rec) {
  Json qs = Json::array();
  for (const auto& p : rec.qs) qs.push_back(encode(p));
  return {{"qs", qs}, {"valid_from", encode(rec.valid_from)}};
}

Json encode(const GapBound& g) {
  Json out{{"N", encode(g.n)},
           {"r", encode(g.r)},
           {"run", encode(g.run)},
           {"C_per_step", encode(g.c_per_step)},
           {"C", encode(g.c)}};
  if (g.r_cauchy) out["r_cauchy"] = encode(*g.r_cauchy);
  if (g.c_cauchy) out["C_cauchy"] = encode(*g.c_cauchy);
  return out;
}

Json encode(const SlabCount& c) {
  return {{"kind", to_string(c.kind)}, {"bound", encode(c.bound)}, {"exact", c.exact}};
}

Json encode(const TauClass& t) {
  Json out{{"kind", to_string(t.kind)}};
  if (t.kind == TauClass::Kind::Boundary) out["lambda0"] = encode(t.lambda0);
  return out;
}

Json encode(const RaySeries& xi) {
  Json coeff;
  switch (xi.coefficients.kind) {
    case CoefficientRule::Kind::Constant:
      coeff = {{"kind", "Constant"}, {"value", encode(xi.coefficients.constant)}};
      break;
    case CoefficientRule::Kind::Explicit:
      coeff = {{"kind", "Explicit"}, {"values", encode(xi.coefficients.values)}};
      break;
    case CoefficientRule::Kind::Algebraic:
      coeff = {{"kind", "Algebraic"}, {"q", encode(xi.coefficients.q)}, {"y0", encode(xi.coefficients.y0)}};
      break;
  }
  return {{"gamma", encode(xi.gamma)}, {"v", encode(xi.v)}, {"indices", encode(xi.indices)}, {"coefficients", coeff}};
}

Json encode(const Certificate& c) {
  Json digests = Json::object();
  for (const auto& [k, v] : c.inputs.items()) digests[k] = sha256_hex(canonical_dump(v));
  return {{"verdict", to_string(c.verdict)}, {"check", c.check},   {"conclusion", c.conclusion},
          {"omega", encode(c.omega)},        {"inputs", c.inputs}, {"witness", c.witness},
          {"digests", digests}};
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
  if (!j.is_string()) bad("expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    bad(e.detail());
  }
}

Integer decode_integer(const Json& j) {
  Rational q = decode_rational(j);
  if (q.get_den() != 1) bad("expected an integer");
  return q.get_num();
}

RationalVector decode_rational_vector(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(decode_rational(x));
  return out;
}

LatticeVector decode_lattice_vector(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  LatticeVector out;
  for (const auto& x : j) out.push_back(decode_integer(x));
  return out;
}

UniPoly decode_unipoly(const Json& j) { return UniPoly(decode_rational_vector(j)); }

BiPoly decode_bipoly(const Json& j) {
  if (!j.is_array()) bad("expected an array of polynomials");
  std::vector<UniPoly> cs;
  for (const auto& x : j) cs.push_back(decode_unipoly(x));
  return BiPoly(cs);
}

Cone decode_cone(const Json& j) {
  std::vector<LatticeVector> gens;
  for (const auto& g : array_field(j, "generators")) gens.push_back(decode_lattice_vector(g));
  std::size_t n = j.contains("ambient") ? decode_size(j.at("ambient")) : 0;
  if (!j.contains("ambient")) {
    if (gens.empty()) bad("an empty cone needs 'ambient'");
    n = gens.front().size();
  }
  for (const auto& g : gens)
    if (g.size() != n) bad("generator of wrong dimension");
  return Cone(n, gens);
}

VectorOrder decode_order(const Json& j) {
  std::vector<RationalVector> vs;
  for (const auto& v : array_field(j, "vectors")) vs.push_back(decode_rational_vector(v));
  return VectorOrder(vs);
}

IndexSet decode_index_set(const Json& j) {
  if (j.is_string()) return decode_index_set(Json{{"kind", j}});
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "All") return IndexSet::all();
  if (kind == "Arithmetic") return IndexSet::arithmetic(decode_integer(field(j, "start")), decode_integer(field(j, "step")));
  if (kind == "PolynomialValues") return IndexSet::polynomial(decode_unipoly(field(j, "poly")));
  if (kind == "FactorialValues") {
    IndexSet s = IndexSet::factorial();
    if (j.contains("factor")) s = s.scaled(decode_integer(j.at("factor")));
    return s;
  }
  if (kind == "Explicit") {
    LatticeVector v = decode_lattice_vector(field(j, "values"));
    return IndexSet::explicit_values(std::vector<Integer>(v.begin(), v.end()));
  }
  if (kind == "BoundedGapTail")
    return IndexSet::bounded_gap_tail(decode_integer(field(j, "from")), decode_integer(field(j, "max_gap")));
  bad("unknown index set kind '" + kind + "'");
}

SupportSpec decode_support(const Json& j) {
  std::size_t n = decode_size(field(j, "ambient"));
  Integer k = j.contains("ramification") ? decode_integer(j.at("ramification")) : Integer(1);
  if (k < 1) bad("ramification must be positive");
  SupportSpec s(n, k);
  auto vec = [&](const Json& x) {
    LatticeVector v = decode_lattice_vector(x);
    if (v.size() != n) bad("vector of wrong dimension");
    return v;
  };
  for (const auto& p : optional_array(j, "points")) s.add_point(vec(p));
  for (const auto& r : optional_array(j, "rays"))
    s.add_ray(vec(field(r, "origin")), vec(field(r, "direction")), decode_index_set(field(r, "indices")));
  for (const auto& t : optional_array(j, "tails")) {
    Cone c = decode_cone(field(t, "cone"));
    if (c.ambient() != n) bad("tail cone of wrong dimension");
    s.add_tail(vec(field(t, "origin")), c);
  }
  return s;
}

LaurentSeriesValue decode_series(const Json& j) {
  std::size_t n = decode_size(field(j, "ambient"));
  Integer k = j.contains("ramification") ? decode_integer(j.at("ramification")) : Integer(1);
  if (k < 1) bad("ramification must be positive");
  LaurentSeriesValue f(n, k);
  auto vec = [&](const Json& x) {
    LatticeVector v = decode_lattice_vector(x);
    if (v.size() != n) bad("exponent of wrong dimension");
    return v;
  };
  for (const auto& r : optional_array(j, "rays")) {
    Rational c = r.contains("coefficient") ? decode_rational(r.at("coefficient")) : Rational(1);
    f.add_ray(RayTerm{vec(field(r, "origin")), vec(field(r, "direction")), decode_index_set(field(r, "indices")), c});
  }
  for (const auto& t : optional_array(j, "terms")) f.add_term(vec(field(t, "exponent")), decode_rational(field(t, "coefficient")));
  if (j.contains("known")) {
    const Json& kn = j.at("known");
    bool everywhere = kn.contains("everywhere") ? kn.at("everywhere").get<bool>() : false;
    if (!everywhere) {
      RationalVector w = decode_rational_vector(field(kn, "omega"));
      if (w.size() != n) bad("known-region omega of wrong dimension");
      f.truncate(w, decode_rational(field(kn, "horizon")));
    }
  }
  if (j.contains("support")) f.set_support(decode_support(j.at("support")));
  return f;
}

PolyOverSeries decode_poly_over_series(const Json& j) {
  PolyOverSeries p;
  const Json& cs = j.is_array() ? j : array_field(j, "coefficients");
  for (const auto& c : cs) p.coefficients.push_back(decode_series(c));
  return p;
}

LinearOde decode_ode(const Json& j) {
  LinearOde ode;
  for (const auto& p : array_field(j, "coefficients")) ode.coefficients.push_back(decode_unipoly(p));
  return ode;
}

PRecurrence decode_recurrence(const Json& j) {
  PRecurrence rec;
  for (const auto& p : array_field(j, "qs")) rec.qs.push_back(decode_unipoly(p));
  if (j.contains("valid_from")) rec.valid_from = decode_integer(j.at("valid_from"));
  return rec;
}

RaySeries decode_ray_series(const Json& j) {
  RaySeries xi;
  xi.gamma = decode_lattice_vector(field(j, "gamma"));
  xi.v = decode_lattice_vector(field(j, "v"));
  if (xi.gamma.size() != xi.v.size()) bad("gamma and v of different dimensions");
  xi.indices = j.contains("indices") ? decode_index_set(j.at("indices")) : IndexSet::all();
  if (j.contains("coefficients")) {
    const Json& c = j.at("coefficients");
    const std::string kind = field(c, "kind").get<std::string>();
    if (kind == "Constant") {
      xi.coefficients.kind = CoefficientRule::Kind::Constant;
      xi.coefficients.constant = decode_rational(field(c, "value"));
    } else if (kind == "Explicit") {
      xi.coefficients.kind = CoefficientRule::Kind::Explicit;
      xi.coefficients.values = decode_rational_vector(field(c, "values"));
    } else if (kind == "Algebraic") {
      xi.coefficients.kind = CoefficientRule::Kind::Algebraic;
      xi.coefficients.q = decode_bipoly(field(c, "q"));
      xi.coefficients.y0 = decode_rational(field(c, "y0"));
    } else {
      bad("unknown coefficient rule '" + kind + "'");
    }
  }
  return xi;
}

std::string canonical_dump(const Json& j) { return j.dump(2); }

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace coneseries
