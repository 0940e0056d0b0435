#include "coneseries/index_set.hpp"

#include <algorithm>
#include <sstream>

#include "coneseries/error.hpp"

namespace coneseries {

namespace {

Integer eval_int(const UniPoly& p, const Integer& i) {
  Rational v = p(Rational(i));
  return v.get_num();
}

Integer ceil_div(const Integer& a, const Integer& b) { return ceil_of(make_rational(a, b)); }
Integer floor_div(const Integer& a, const Integer& b) { return floor_of(make_rational(a, b)); }

void not_enumerable() {
  throw Error("IndexSetNotEnumerable", "a bounded-gap tail has no individually known elements");
}

}  // namespace

const char* to_string(IndexSet::Kind k) {
  switch (k) {
    case IndexSet::Kind::All: return "All";
    case IndexSet::Kind::Arithmetic: return "Arithmetic";
    case IndexSet::Kind::PolynomialValues: return "PolynomialValues";
    case IndexSet::Kind::FactorialValues: return "FactorialValues";
    case IndexSet::Kind::Explicit: return "Explicit";
    case IndexSet::Kind::BoundedGapTail: return "BoundedGapTail";
  }
  return "?";
}

Integer factorial_of(const Integer& i) {
  Integer r = 1;
  for (Integer k = 2; k <= i; ++k) r *= k;
  return r;
}

IndexSet IndexSet::all() { return IndexSet(); }

IndexSet IndexSet::arithmetic(const Integer& start, const Integer& step) {
  if (start < 0 || step < 1) throw Error("BadIndexSet", "arithmetic index set needs start >= 0 and step >= 1");
  IndexSet s;
  s.kind_ = Kind::Arithmetic;
  s.a_ = start;
  s.b_ = step;
  return s;
}

IndexSet IndexSet::polynomial(const UniPoly& p) {
  if (p.degree() < 1) throw Error("BadIndexSet", "polynomial index set needs degree >= 1");
  for (int i = 0; i <= p.degree(); ++i)
    if (p(Rational(i)).get_den() != 1) throw Error("BadIndexSet", "polynomial is not integer valued");
  if (p.leading() < 0 || p.coeff(0) < 0) throw Error("BadIndexSet", "polynomial must be increasing from p(0) >= 0");
  UniPoly diff = p.shifted(1) - p;
  Integer bound = diff.degree() >= 1 ? cauchy_root_bound(diff) : Integer(0);
  for (Integer i = 0; i <= bound; ++i)
    if (diff(Rational(i)) <= 0) throw Error("BadIndexSet", "polynomial is not strictly increasing on Z>=0");
  IndexSet s;
  s.kind_ = Kind::PolynomialValues;
  s.poly_ = p;
  return s;
}

IndexSet IndexSet::factorial() {
  IndexSet s;
  s.kind_ = Kind::FactorialValues;
  return s;
}

IndexSet IndexSet::explicit_values(std::vector<Integer> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw Error("BadIndexSet", "explicit indices must be nonnegative");
    if (i > 0 && values[i] <= values[i - 1]) throw Error("BadIndexSet", "explicit indices must be strictly increasing");
  }
  IndexSet s;
  s.kind_ = Kind::Explicit;
  s.values_ = std::move(values);
  return s;
}

IndexSet IndexSet::bounded_gap_tail(const Integer& from, const Integer& max_gap) {
  if (from < 0 || max_gap < 1) throw Error("BadIndexSet", "bounded-gap tail needs from >= 0 and max_gap >= 1");
  IndexSet s;
  s.kind_ = Kind::BoundedGapTail;
  s.a_ = from;
  s.b_ = max_gap;
  return s;
}

IndexSet IndexSet::scaled(const Integer& d) const {
  if (d < 1) throw Error("BadIndexSet", "index scaling must be positive");
  IndexSet s = *this;
  switch (kind_) {
    case Kind::All: return d == 1 ? s : arithmetic(0, d);
    case Kind::Arithmetic: return arithmetic(a_ * d, b_ * d);
    case Kind::PolynomialValues: return polynomial(Rational(d) * poly_);
    case Kind::Explicit:
      for (auto& v : s.values_) v *= d;
      return s;
    case Kind::BoundedGapTail: return bounded_gap_tail(a_ * d, b_ * d);
    case Kind::FactorialValues: s.factor_ *= d; return s;
  }
  return s;
}

Integer IndexSet::term(const Integer& i) const {
  if (i < 0) throw Error("BadIndex", "sequence index must be nonnegative");
  switch (kind_) {
    case Kind::All: return i;
    case Kind::Arithmetic: return a_ + i * b_;
    case Kind::PolynomialValues: return eval_int(poly_, i);
    case Kind::FactorialValues: return factor_ * factorial_of(i);
    case Kind::Explicit:
      if (i >= values_.size()) throw Error("BadIndex", "index beyond the explicit list");
      return values_[i.get_ui()];
    case Kind::BoundedGapTail: not_enumerable();
  }
  return 0;
}

Integer IndexSet::raw_first_at_least(const Integer& x, bool& found) const {
  found = true;
  switch (kind_) {
    case Kind::All: return std::max(x, Integer(0));
    case Kind::Arithmetic:
      if (x <= a_) return a_;
      return a_ + ceil_div(x - a_, b_) * b_;
    case Kind::PolynomialValues: {
      if (eval_int(poly_, 0) >= x) return eval_int(poly_, 0);
      Integer lo = 0, hi = 1;
      while (eval_int(poly_, hi) < x) hi *= 2;
      while (hi - lo > 1) {  // p(lo) < x <= p(hi)
        Integer mid = (lo + hi) / 2;
        if (eval_int(poly_, mid) < x) lo = mid;
        else hi = mid;
      }
      return eval_int(poly_, hi);
    }
    case Kind::FactorialValues: {
      Integer f = 1, i = 1;
      while (f < x) {
        ++i;
        f *= i;
      }
      return f;
    }
    case Kind::Explicit: {
      auto it = std::lower_bound(values_.begin(), values_.end(), x);
      if (it == values_.end()) {
        found = false;
        return 0;
      }
      return *it;
    }
    case Kind::BoundedGapTail: not_enumerable();
  }
  return 0;
}

std::optional<Integer> IndexSet::first_at_least(const Integer& x) const {
  bool found = true;
  Integer r = raw_first_at_least(ceil_div(x, factor_), found);
  if (!found) return std::nullopt;
  return r * factor_;
}

Integer IndexSet::raw_count_le(const Integer& x) const {
  if (x < 0) return 0;
  switch (kind_) {
    case Kind::All: return x + 1;
    case Kind::Arithmetic: return x < a_ ? Integer(0) : Integer(floor_div(x - a_, b_) + 1);
    case Kind::PolynomialValues: {
      if (eval_int(poly_, 0) > x) return 0;
      Integer lo = 0, hi = 1;
      while (eval_int(poly_, hi) <= x) hi *= 2;
      while (hi - lo > 1) {  // p(lo) <= x < p(hi)
        Integer mid = (lo + hi) / 2;
        if (eval_int(poly_, mid) <= x) lo = mid;
        else hi = mid;
      }
      return lo + 1;
    }
    case Kind::FactorialValues: {
      Integer count = 0, f = 1, i = 1;
      while (f <= x) {
        ++count;
        ++i;
        f *= i;
      }
      return count;
    }
    case Kind::Explicit:
      return Integer(static_cast<unsigned long>(std::upper_bound(values_.begin(), values_.end(), x) - values_.begin()));
    case Kind::BoundedGapTail: not_enumerable();
  }
  return 0;
}

Integer IndexSet::count_le(const Integer& x) const { return raw_count_le(floor_div(x, factor_)); }

Integer IndexSet::count_le_bound(const Integer& x) const {
  if (kind_ == Kind::BoundedGapTail) return x < 0 ? Integer(0) : Integer(x + 1);
  return count_le(x);
}

std::vector<Integer> IndexSet::elements_up_to(const Integer& limit) const {
  std::vector<Integer> out;
  Integer x = 0;
  while (true) {
    auto e = first_at_least(x);
    if (!e || *e > limit) break;
    out.push_back(*e);
    x = *e + 1;
  }
  return out;
}

std::optional<Integer> IndexSet::min_element() const {
  if (kind_ == Kind::BoundedGapTail) return std::nullopt;
  return first_at_least(0);
}

bool IndexSet::gaps_bounded() const {
  switch (kind_) {
    case Kind::All:
    case Kind::Arithmetic:
    case Kind::Explicit:
    case Kind::BoundedGapTail: return true;
    case Kind::PolynomialValues: return poly_.degree() <= 1;
    case Kind::FactorialValues: return false;
  }
  return true;
}

bool IndexSet::ratio_unbounded() const { return kind_ == Kind::FactorialValues; }

std::string IndexSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::All: os << "All"; break;
    case Kind::Arithmetic: os << "Arithmetic(" << a_ << "," << b_ << ")"; break;
    case Kind::PolynomialValues: os << "PolynomialValues(" << poly_.to_string("i") << ")"; break;
    case Kind::FactorialValues: os << "FactorialValues"; break;
    case Kind::Explicit: {
      os << "Explicit[";
      for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
      os << "]";
      break;
    }
    case Kind::BoundedGapTail: os << "BoundedGapTail(from=" << a_ << ",max_gap=" << b_ << ")"; break;
  }
  if (factor_ != 1) os << "*" << factor_;
  return os.str();
}

}  // namespace coneseries
