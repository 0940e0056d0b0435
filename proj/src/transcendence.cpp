#include "coneseries/transcendence.hpp"

#include <algorithm>
#include <functional>

#include "coneseries/dfinite.hpp"
#include "coneseries/error.hpp"
#include "coneseries/json_io.hpp"

namespace coneseries {

namespace {

constexpr long kScanCap = 1000000;

[[noreturn]] void inconclusive(const std::string& why) { throw Error("Inconclusive", why); }

std::string conclusion_of(Verdict v) {
  switch (v) {
    case Verdict::NotAlgebraicGap: return "not algebraic over K[[x]]";
    case Verdict::NotAlgebraicLiouville: return "not algebraic over K((x))";
    case Verdict::ConsistentToHorizon: return "no refutation within the checked range";
    case Verdict::DiophantineA1Holds: return "nu(xi - g/x^beta) <= omega.beta + b for all beta >= 0";
    case Verdict::DiophantineA1Fails: return "nu(xi - g/x^beta) - omega.beta is unbounded";
  }
  return "";
}

Certificate make(Verdict v, const std::string& check, const RationalVector& omega, Json inputs, Json witness) {
  return Certificate{v, check, conclusion_of(v), omega, std::move(inputs), std::move(witness)};
}

// Nonzero pattern of a ray series' coefficients.
class Coefficients {
 public:
  explicit Coefficients(const RaySeries& xi) : xi_(xi) {
    if (xi.coefficients.kind == CoefficientRule::Kind::Algebraic) {
      PRecurrence rec = ode_to_recurrence(algebraic_to_ode(xi.coefficients.q));
      GapBound g = gap_constant(rec, RationalVector{1}, LatticeVector{1});
      span_ = g.n;
      r_ = g.r;
      // A polynomial root has degree at most max deg_T of the coefficients.
      const BiPoly& q = xi.coefficients.q;
      int dq = 0;
      for (const auto& c : q.y_coefficients()) dq = std::max(dq, c.degree());
      TruncatedSeries p = taylor_of_algebraic(q, xi.coefficients.y0, static_cast<std::size_t>(dq));
      std::size_t len = static_cast<std::size_t>(dq) * static_cast<std::size_t>(q.degree_y() + 1) + 1;
      TruncatedSeries value = substitute(q, p, len);
      polynomial_ = std::all_of(value.begin(), value.end(), [](const Rational& x) { return x == 0; });
    }
  }

  Rational at(const Integer& m) const {
    const CoefficientRule& c = xi_.coefficients;
    switch (c.kind) {
      case CoefficientRule::Kind::Constant: return c.constant;
      case CoefficientRule::Kind::Explicit:
        if (m >= c.values.size()) inconclusive("explicit coefficients end at index " + std::to_string(c.values.size()));
        return c.values[m.get_ui()];
      case CoefficientRule::Kind::Algebraic:
        if (m > kScanCap) inconclusive("coefficient index beyond the scan cap");
        if (m >= taylor_.size()) {
          std::size_t len = std::max<std::size_t>(32, taylor_.size());
          while (len <= m.get_ui()) len *= 2;
          taylor_ = taylor_of_algebraic(c.q, c.y0, len);
        }
        return taylor_[m.get_ui()];
    }
    return 0;
  }

  /// First m >= x in the index set with a_m != 0.
  std::optional<Integer> first_nonzero_at_least(const Integer& x) const {
    const CoefficientRule& c = xi_.coefficients;
    const IndexSet& s = xi_.indices;
    if (!s.enumerable()) inconclusive("the index set is not enumerable");
    if (c.kind == CoefficientRule::Kind::Constant) {
      if (c.constant == 0) return std::nullopt;
      return s.first_at_least(std::max(x, Integer(0)));
    }
    if (c.kind == CoefficientRule::Kind::Explicit) {
      for (auto e = s.first_at_least(std::max(x, Integer(0))); e; e = s.first_at_least(*e + 1))
        if (at(*e) != 0) return e;
      return std::nullopt;
    }
    // Algebraic: N consecutive zero Taylor coefficients ending beyond r force
    // every later coefficient to vanish.
    Integer run = 0;
    for (Integer m = 0;; ++m) {
      if (m > r_ && run >= span_) return std::nullopt;
      if (m > kScanCap) inconclusive("no nonzero coefficient within the scan cap");
      bool zero = at(m) == 0;
      run = zero ? run + 1 : Integer(0);
      if (m >= x && !zero) {
        auto e = s.first_at_least(m);
        if (e && *e == m) return m;
      }
    }
  }

  /// Nonzero coefficients occur for infinitely many indices.
  bool infinitely_many() const {
    const IndexSet& s = xi_.indices;
    if (!s.infinite()) return false;
    const CoefficientRule& c = xi_.coefficients;
    if (c.kind == CoefficientRule::Kind::Constant) return c.constant != 0;
    if (c.kind == CoefficientRule::Kind::Explicit) inconclusive("explicit coefficients on an infinite index set");
    if (polynomial_) return false;
    if (s.kind() != IndexSet::Kind::All) inconclusive("algebraic coefficients restricted to a sparse index set");
    return true;
  }

  /// Upper bound on (first nonzero index >= M) - M, valid for every M.
  std::optional<Integer> slack() const {
    const CoefficientRule& c = xi_.coefficients;
    const IndexSet& s = xi_.indices;
    if (c.kind == CoefficientRule::Kind::Algebraic) {
      if (s.kind() != IndexSet::Kind::All) return std::nullopt;
      return r_ + span_;
    }
    if (c.kind != CoefficientRule::Kind::Constant) return std::nullopt;
    switch (s.kind()) {
      case IndexSet::Kind::All: return Integer(0);
      case IndexSet::Kind::Arithmetic: return s.start() + s.step() - 1;
      case IndexSet::Kind::PolynomialValues:
        if (s.poly().degree() == 1) return s.poly().coeff(0).get_num() + s.poly().leading().get_num() - 1;
        return std::nullopt;
      default: return std::nullopt;
    }
  }

 private:
  const RaySeries& xi_;
  mutable TruncatedSeries taylor_;
  Integer span_ = 0;
  Integer r_ = 0;
  bool polynomial_ = false;
};

Rational step_of(const RaySeries& xi, const RationalVector& omega) {
  if (omega.size() != xi.v.size() || xi.gamma.size() != xi.v.size())
    throw Error("DimensionMismatch", "omega, gamma and v must share a dimension");
  Rational w = dot(omega, xi.v);
  if (w <= 0) throw Error("NonpositiveStep", "omega . v must be positive");
  return w;
}

Integer max_index_gap(const IndexSet& s) {
  switch (s.kind()) {
    case IndexSet::Kind::All: return 1;
    case IndexSet::Kind::Arithmetic: return s.step();
    case IndexSet::Kind::BoundedGapTail: return s.step();
    case IndexSet::Kind::PolynomialValues: return s.poly().leading().get_num();
    default: return 0;
  }
}

Json gap_row(const Integer& i, const Rational& a, const Rational& b) {
  return {{"i", encode(i)}, {"k_i", encode(a)}, {"k_next", encode(b)}, {"gap", encode(Rational(b - a))}};
}

Certificate gap_impl(const SupportSpec& s, const RationalVector& omega) {
  Json inputs{{"support", encode(s)}, {"omega", encode(omega)}};
  if (omega.size() != s.ambient()) throw Error("DimensionMismatch", "omega of wrong dimension");
  for (const auto& x : omega)
    if (x <= 0) throw Error("PreconditionFailed", "omega must be strictly positive");
  if (in_localized_ring(s)) throw Error("PreconditionLocalized", "the support lies in a localized power series ring");
  if (!s.tails().empty()) inconclusive("tail components have unknown level structure");
  TauClass tau = tau_classify(s, omega);
  if (tau.kind != TauClass::Kind::InTau0 && tau.kind != TauClass::Kind::Boundary)
    inconclusive(std::string("omega is classified ") + to_string(tau.kind));

  const Rational k(s.ramification());
  std::vector<const RayComponent*> infinite;
  Rational finite_top = 0;
  bool have_finite = false;
  auto consider = [&](const Rational& l) {
    if (!have_finite || l > finite_top) finite_top = l;
    have_finite = true;
  };
  for (const auto& p : s.points()) consider(dot(omega, p) / k);
  for (const auto& r : s.rays()) {
    if (r.indices.infinite()) {
      infinite.push_back(&r);
      continue;
    }
    for (const auto& m : r.indices.values()) consider(dot(omega, add(r.origin, scale(r.direction, m))) / k);
  }

  for (std::size_t idx = 0; idx < infinite.size(); ++idx) {
    const RayComponent& r = *infinite[idx];
    if (!r.indices.gaps_bounded()) continue;
    Rational w = dot(omega, r.direction) / k;
    Json witness{{"ray", idx},
                 {"indices", r.indices.describe()},
                 {"level_step", encode(w)},
                 {"level_gap_bound", encode(Rational(w * Rational(max_index_gap(r.indices))))},
                 {"closed_form", "k(i+1) - k(i) <= " + to_string(Rational(w * Rational(max_index_gap(r.indices))))},
                 {"tau", to_string(tau.kind)}};
    return make(Verdict::ConsistentToHorizon, "gap", omega, inputs, witness);
  }

  Json closed = Json::array();
  for (const auto* rp : infinite) {
    const RayComponent& r = *rp;
    Rational w = dot(omega, r.direction) / k;
    Rational base = dot(omega, r.origin) / k;
    std::string form;
    if (r.indices.kind() == IndexSet::Kind::PolynomialValues) {
      UniPoly d = w * (r.indices.poly().shifted(1) - r.indices.poly());
      form = d.to_string("i");
    } else {
      form = to_string(Rational(w * Rational(r.indices.factor()))) + "*i*i!";
    }
    closed.push_back({{"indices", r.indices.describe()},
                      {"level", "k(i) = " + to_string(base) + " + " + to_string(w) + "*term(i)"},
                      {"gap", "k(i+1) - k(i) = " + form}});
  }

  Json table = Json::array();
  if (infinite.size() == 1) {
    const RayComponent& r = *infinite.front();
    Rational w = dot(omega, r.direction) / k;
    Rational base = dot(omega, r.origin) / k;
    auto lvl = [&](const Integer& i) -> Rational { return base + w * Rational(r.indices.term(i)); };
    Integer i0 = 1;
    while (have_finite && lvl(i0) < finite_top) ++i0;
    for (Integer i = i0; i < i0 + 3; ++i) table.push_back(gap_row(i, lvl(i), lvl(i + 1)));
  } else {
    // Record gaps of the merged level sequence above every finite level.
    Integer limit = 16;
    while (table.size() < 3) {
      std::vector<Rational> levels;
      for (const auto* rp : infinite) {
        Rational w = dot(omega, rp->direction) / k, base = dot(omega, rp->origin) / k;
        for (const auto& m : rp->indices.elements_up_to(limit)) levels.push_back(base + w * Rational(m));
      }
      std::sort(levels.begin(), levels.end());
      levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
      table = Json::array();
      Rational record = 0;
      for (std::size_t q = 0; q + 1 < levels.size() && table.size() < 3; ++q) {
        if (have_finite && levels[q] < finite_top) continue;
        Rational g = levels[q + 1] - levels[q];
        if (g > record) {
          record = g;
          table.push_back(gap_row(Integer(static_cast<unsigned long>(q)), levels[q], levels[q + 1]));
        }
      }
      limit *= 4;
      if (limit > kScanCap) inconclusive("merged level sequence too sparse to instantiate");
    }
  }
  Json witness{{"closed_forms", closed}, {"instances", table}, {"tau", to_string(tau.kind)}};
  return make(Verdict::NotAlgebraicGap, "gap", omega, inputs, witness);
}

Certificate liouville_impl(const RaySeries& xi, const RationalVector& omega, const Rational& a_max,
                           std::size_t n_max) {
  Json inputs{{"series", encode(xi)}, {"omega", encode(omega)}, {"a_max", encode(a_max)}, {"n_max", n_max}};
  const Rational w = step_of(xi, omega);
  if (!xi.indices.enumerable()) inconclusive("the index set is not enumerable");
  if (n_max < 1) throw Error("BadArgument", "n_max must be at least 1");
  Rational b_rate = 0;
  for (std::size_t j = 0; j < xi.v.size(); ++j)
    if (xi.v[j] < 0) b_rate += omega[j] * Rational(-xi.v[j]);
  if (b_rate == 0) inconclusive("nu(g_N) does not grow: v has no negative coordinate");

  Coefficients coeffs(xi);
  const Rational wg = dot(omega, xi.gamma);
  auto first = coeffs.first_nonzero_at_least(0);
  if (!first) throw Error("EmptySeries", "the series is zero");
  Json table = Json::array();
  bool exceeded = false, exact = false;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Integer top = xi.indices.term(Integer(static_cast<unsigned long>(n)));
    if (xi.indices.count_le(top) > kScanCap) inconclusive("prefix too long");
    // Largest included nonzero index; after removing zero coefficients the
    // extreme coordinates come from the first and last included index.
    std::optional<Integer> last;
    for (const auto& m : xi.indices.elements_up_to(top))
      if (coeffs.at(m) != 0) last = m;
    if (!last) continue;
    Rational nu_g = 0;
    for (std::size_t j = 0; j < xi.v.size(); ++j) {
      Integer e1 = -(xi.gamma[j] + *first * xi.v[j]), e2 = -(xi.gamma[j] + *last * xi.v[j]);
      Integer beta = std::max({Integer(0), e1, e2});
      nu_g += omega[j] * Rational(beta);
    }
    auto next = coeffs.first_nonzero_at_least(top + 1);
    if (!next) {
      exact = true;  // the series equals its truncation
      break;
    }
    Rational nu_res = wg + w * Rational(*next);
    Json row{{"N", n}, {"nu_residual", encode(nu_res)}, {"nu_g", encode(nu_g)}};
    if (nu_g > 0) {
      Rational ratio = nu_res / nu_g;
      row["ratio"] = encode(ratio);
      if (ratio > a_max) exceeded = true;
    } else {
      row["ratio"] = nullptr;
    }
    table.push_back(row);
  }

  bool constant_nonzero = xi.coefficients.kind == CoefficientRule::Kind::Constant && xi.coefficients.constant != 0;
  if (!exact && constant_nonzero && xi.indices.ratio_unbounded()) {
    Json witness{{"table", Json(std::vector<Json>(table.begin(), table.begin() + std::min<long>(3, table.size())))},
                 {"steps_checked", table.size()},
                 {"level_step", encode(w)},
                 {"denominator_rate", encode(b_rate)},
                 {"closed_form", "ratio(N) ~ (" + to_string(Rational(w / b_rate)) + ") * term(N+1)/term(N)"},
                 {"growth", "term(N+1)/term(N) = N+1 is unbounded"}};
    return make(Verdict::NotAlgebraicLiouville, "liouville", omega, inputs, witness);
  }
  if (exceeded) inconclusive("ratios exceed a_max but are not provably unbounded");
  Json witness{{"table", table}, {"a_max", encode(a_max)}, {"n_max", n_max}, {"terminates", exact}};
  return make(Verdict::ConsistentToHorizon, "liouville", omega, inputs, witness);
}

std::optional<Integer> blocked_index(const RaySeries& xi, const LatticeVector& beta, const Coefficients& coeffs) {
  const std::size_t n = xi.v.size();
  if (beta.size() != n) throw Error("DimensionMismatch", "beta of wrong dimension");
  // m is blocked when some coordinate of m v + beta + gamma is negative:
  // m < lead (coordinates with v_j >= 0) or m >= tail (v_j < 0).
  std::optional<Integer> lead = Integer(0), tail;
  for (std::size_t j = 0; j < n; ++j) {
    Integer c = beta[j] + xi.gamma[j];
    if (xi.v[j] > 0) {
      if (c < 0 && lead) lead = std::max(*lead, ceil_of(make_rational(-c, xi.v[j])));
    } else if (xi.v[j] == 0) {
      if (c < 0) lead.reset();  // every m is blocked
    } else {
      Integer t = c < 0 ? Integer(0) : Integer(floor_of(make_rational(c, -xi.v[j])) + 1);
      if (!tail || t < *tail) tail = t;
    }
  }
  auto early = coeffs.first_nonzero_at_least(0);
  if (!early) return std::nullopt;
  if (!lead || *early < *lead) return early;
  if (tail) return coeffs.first_nonzero_at_least(*tail);
  return std::nullopt;
}

Certificate dioph_impl(const RaySeries& xi, const RationalVector& omega, const Integer& box, const Rational& b_guess) {
  Json inputs{{"series", encode(xi)}, {"omega", encode(omega)}, {"beta_box", encode(box)}, {"b_guess", encode(b_guess)}};
  const Rational w = step_of(xi, omega);
  const std::size_t n = xi.v.size();
  if (box < 0) throw Error("BadArgument", "beta_box must be nonnegative");
  Integer total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= box + 1;
  if (total > kScanCap) throw Error("BoxTooLarge", "beta box has too many points");
  Coefficients coeffs(xi);
  const Rational wg = dot(omega, xi.gamma);

  std::optional<Rational> best;
  LatticeVector best_beta;
  Json table = Json::array();
  long unblocked = 0;
  LatticeVector beta(n, Integer(0));
  while (true) {
    auto m0 = blocked_index(xi, beta, coeffs);
    if (m0) {
      Rational s = wg + w * Rational(*m0) - dot(omega, beta);
      table.push_back({{"beta", encode(beta)}, {"m0", encode(*m0)}, {"excess", encode(s)}});
      if (!best || s > *best) {
        best = s;
        best_beta = beta;
      }
    } else {
      ++unblocked;
    }
    std::size_t j = 0;
    while (j < n && beta[j] == box) beta[j++] = 0;
    if (j == n) break;
    ++beta[j];
  }

  Json witness{{"box", encode(box)},
               {"b_guess", encode(b_guess)},
               {"unblocked", unblocked},
               {"table", table},
               {"b", best ? encode(*best) : Json(nullptr)},
               {"attained_at", best ? encode(best_beta) : Json(nullptr)}};
  if (best) witness["b_guess_sufficient"] = b_guess >= *best;

  bool nonneg = std::all_of(omega.begin(), omega.end(), [](const Rational& x) { return x >= 0; });
  if (!coeffs.infinitely_many()) {
    if (!nonneg) inconclusive("omega has a negative coordinate");
    // Only indices up to the last nonzero coefficient can be blocked.
    Integer last = 0;
    for (auto e = coeffs.first_nonzero_at_least(0); e; e = coeffs.first_nonzero_at_least(*e + 1)) last = *e;
    witness["b_tail"] = encode(Rational(wg + w * Rational(last)));
    witness["tail_argument"] = "finitely many nonzero coefficients";
    return make(Verdict::DiophantineA1Holds, "dioph", omega, inputs, witness);
  }

  // Slope of the lower bound along beta_j, for each coordinate with v_j < 0.
  std::vector<std::pair<std::size_t, RationalVector>> slopes;
  for (std::size_t j = 0; j < n; ++j) {
    if (xi.v[j] >= 0) continue;
    RationalVector s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = -omega[i];
    s[j] += w / Rational(-xi.v[j]);
    slopes.emplace_back(j, s);
  }
  if (slopes.empty()) inconclusive("v has no negative coordinate");

  if (nonneg) {
    if (auto slack = coeffs.slack()) {
      for (const auto& [j, s] : slopes) {
        if (!std::all_of(s.begin(), s.end(), [](const Rational& x) { return x <= 0; })) continue;
        Rational shift = std::max(Rational(0), Rational(w * Rational(xi.gamma[j]) / Rational(-xi.v[j])));
        Rational tail = wg + w * Rational(1 + *slack) + shift;
        witness["b_tail"] = encode(tail);
        witness["tail_coordinate"] = j;
        witness["tail_argument"] = "m0 <= (beta_j + gamma_j)/(-v_j) + 1 + " + to_string(*slack) +
                                   " and omega.v <= -omega_j v_j";
        return make(Verdict::DiophantineA1Holds, "dioph", omega, inputs, witness);
      }
    }
  }

  // Search for a direction d >= 0 along which the lower bound diverges.
  LatticeVector d(n, Integer(0));
  while (true) {
    std::size_t j = 0;
    while (j < n && d[j] == 2) d[j++] = 0;
    if (j == n) break;
    ++d[j];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (xi.v[i] >= 0 && xi.gamma[i] < 0 && d[i] == 0) ok = false;
    std::optional<Rational> rate;
    for (const auto& [jj, s] : slopes) {
      Rational r = dot(s, d);
      if (!rate || r < *rate) rate = r;
    }
    if (!ok || *rate <= 0) continue;
    Json growth = Json::array();
    for (long t = 1; t <= 16; t *= 2) {
      LatticeVector b = scale(d, Integer(t));
      auto m0 = blocked_index(xi, b, coeffs);
      if (!m0) continue;
      growth.push_back({{"beta", encode(b)}, {"excess", encode(Rational(wg + w * Rational(*m0) - dot(omega, b)))}});
    }
    witness["divergent_direction"] = encode(d);
    witness["growth_rate"] = encode(*rate);
    witness["growth"] = growth;
    return make(Verdict::DiophantineA1Fails, "dioph", omega, inputs, witness);
  }
  inconclusive("neither a uniform bound nor a divergent direction was found");
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotAlgebraicGap: return "NotAlgebraicGap";
    case Verdict::NotAlgebraicLiouville: return "NotAlgebraicLiouville";
    case Verdict::ConsistentToHorizon: return "ConsistentToHorizon";
    case Verdict::DiophantineA1Holds: return "DiophantineA1Holds";
    case Verdict::DiophantineA1Fails: return "DiophantineA1Fails";
  }
  return "?";
}

Certificate gap_certificate(const SupportSpec& s, const RationalVector& omega) { return gap_impl(s, omega); }

Certificate liouville_certificate(const RaySeries& xi, const RationalVector& omega, const Rational& a_max,
                                  std::size_t n_max) {
  return liouville_impl(xi, omega, a_max, n_max);
}

Rational dioph_sup_nu(const RaySeries& xi, const LatticeVector& beta, const RationalVector& omega) {
  const Rational w = step_of(xi, omega);
  for (const auto& b : beta)
    if (b < 0) throw Error("BadArgument", "beta must be nonnegative");
  Coefficients coeffs(xi);
  auto m0 = blocked_index(xi, beta, coeffs);
  if (!m0) throw Error("NoBlockedIndex", "every exponent m v + beta + gamma stays in the first orthant");
  return dot(omega, xi.gamma) + w * Rational(*m0);
}

Certificate dioph_a1_scan(const RaySeries& xi, const RationalVector& omega, const Integer& beta_box,
                          const Rational& b_guess) {
  return dioph_impl(xi, omega, beta_box, b_guess);
}

bool replay(const Json& certificate) {
  try {
    const Json& in = certificate.at("inputs");
    const std::string check = certificate.at("check").get<std::string>();
    Certificate c;
    if (check == "gap") {
      c = gap_certificate(decode_support(in.at("support")), decode_rational_vector(in.at("omega")));
    } else if (check == "liouville") {
      c = liouville_certificate(decode_ray_series(in.at("series")), decode_rational_vector(in.at("omega")),
                                decode_rational(in.at("a_max")), in.at("n_max").get<std::size_t>());
    } else if (check == "dioph") {
      c = dioph_a1_scan(decode_ray_series(in.at("series")), decode_rational_vector(in.at("omega")),
                        decode_integer(in.at("beta_box")), decode_rational(in.at("b_guess")));
    } else {
      return false;
    }
    return encode(c) == certificate;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace coneseries
