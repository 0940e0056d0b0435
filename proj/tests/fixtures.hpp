#pragma once

#include <random>
#include <vector>

#include "coneseries/cone.hpp"
#include "coneseries/rational.hpp"

namespace fixtures {

using namespace coneseries;

inline LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Cone cone(std::size_t n, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<LatticeVector> g;
  for (auto& x : gens) g.push_back(lv(x));
  return Cone(n, g);
}

inline LatticeVector random_vector(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  LatticeVector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
  return v;
}

inline Cone random_cone(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, static_cast<int>(n) + 2);
  std::vector<LatticeVector> g;
  int k = count(rng);
  for (int i = 0; i < k; ++i) g.push_back(random_vector(rng, n, -3, 3));
  return Cone(n, g);
}

}  // namespace fixtures

namespace fixtures {

inline std::vector<coneseries::LatticeVector> gens(std::initializer_list<coneseries::LatticeVector> xs) {
  return std::vector<coneseries::LatticeVector>(xs);
}

}  // namespace fixtures

#include "coneseries/roots.hpp"

namespace fixtures {

using Terms = std::initializer_list<std::pair<std::initializer_list<long>, long>>;

inline coneseries::LaurentSeriesValue laurent(Terms ts, long k = 1) {
  coneseries::LaurentSeriesValue f(ts.begin()->first.size(), k);
  for (auto& [e, c] : ts) f.add_term(lv(e), c);
  return f;
}

inline coneseries::PolyOverSeries poly_t(std::initializer_list<coneseries::LaurentSeriesValue> cs) {
  return coneseries::PolyOverSeries{std::vector<coneseries::LaurentSeriesValue>(cs)};
}

inline coneseries::LaurentSeriesValue zero2() { return coneseries::LaurentSeriesValue(2); }

// T^2 - (x1 + x2)
inline coneseries::PolyOverSeries sqrt_of_sum() {
  return poly_t({laurent({{{1, 0}, -1}, {{0, 1}, -1}}), zero2(), laurent({{{0, 0}, 1}})});
}

// x2 T^2 - (x1 + x2), whose root through 1 is sqrt(1 + x1/x2)
inline coneseries::PolyOverSeries sqrt_of_ratio() {
  return poly_t({laurent({{{1, 0}, -1}, {{0, 1}, -1}}), zero2(), laurent({{{0, 1}, 1}})});
}

// T^3 - (x1 + x2)
inline coneseries::PolyOverSeries cbrt_of_sum() {
  return poly_t({laurent({{{1, 0}, -1}, {{0, 1}, -1}}), zero2(), zero2(), laurent({{{0, 0}, 1}})});
}

// (x2 - x1) T - x2, root 1/(1 - x1/x2)
inline coneseries::PolyOverSeries geometric_ratio() {
  return poly_t({laurent({{{0, 1}, -1}}), laurent({{{0, 1}, 1}, {{1, 0}, -1}})});
}

}  // namespace fixtures
