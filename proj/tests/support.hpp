#pragma once
// Shared helpers for the unit tests: seeded random data and brute-force oracles.

#include <cmath>
#include <random>

#include "thetalift/lattice/lattice.hpp"
#include "thetalift/qseries/series.hpp"

namespace testing_support {

using namespace thetalift;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// A random truncated series with integral exponents in [lo, trunc) and small rational coefficients.
inline FracPowerSeries random_series(long lo, long trunc) {
  std::map<Rational, Rational> t;
  for (long e = lo; e < trunc; ++e)
    if (uniform(0, 2) != 0) t[Rational(e)] = make_rational(uniform(-9, 9), uniform(1, 4));
  return FracPowerSeries::from_terms(t, Rational(trunc));
}

/// A random unit series 1 + ... (nonzero constant term).
inline FracPowerSeries random_unit(long trunc) {
  std::map<Rational, Rational> t{{Rational(0), make_rational(uniform(1, 5), uniform(1, 3))}};
  for (long e = 1; e < trunc; ++e) t[Rational(e)] = Rational(uniform(-5, 5));
  return FracPowerSeries::from_terms(t, Rational(trunc));
}

/// Random nondegenerate even Gram matrix of the given rank with entries in
/// [-10, 10] and |det| at most det_cap.
inline EvenLattice random_even_lattice(std::size_t rank, long det_cap = 400) {
  for (;;) {
    IntMatrix g(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
      g(i, i) = 2 * uniform(-5, 5);
      for (std::size_t j = i + 1; j < rank; ++j) g(i, j) = g(j, i) = uniform(-10, 10);
    }
    Integer det = determinant(g);
    if (det != 0 && abs(det) <= det_cap) return EvenLattice(g, "random");
  }
}

/// Counts of x in Z^n with x^T G x <= bound, by norm, using a box search.
inline std::map<Rational, Integer> box_count(const IntMatrix& g, const Rational& bound) {
  const std::size_t n = g.rows();
  RatMatrix inv = inverse_or_throw(to_rational(g));
  std::vector<long> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<long>(std::sqrt(bound.get_d() * inv(i, i).get_d())) + 1;
  std::map<Rational, Integer> out;
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -r[i];
  for (;;) {
    Rational v = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v += Rational(g(i, j)) * x[i] * x[j];
    if (v <= bound) out[v] += 1;
    std::size_t k = 0;
    while (k < n && x[k] == r[k]) x[k] = -r[k], ++k;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

}  // namespace testing_support
