#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalift/qseries/expr.hpp"
#include "thetalift/qseries/zagier.hpp"

using namespace thetalift;
using testing_support::random_series;
using testing_support::random_unit;

namespace {

FracPowerSeries series(std::initializer_list<std::pair<Rational, Rational>> terms, long trunc) {
  return FracPowerSeries::from_terms(std::map<Rational, Rational>(terms.begin(), terms.end()), Rational(trunc));
}

void expect_coefficients(const FracPowerSeries& s, const std::vector<Rational>& want, long first = 0) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    const Rational e(first + static_cast<long>(i));
    ASSERT_TRUE(s.knows(e)) << "q^" << e << " unknown in " << s.to_string();
    EXPECT_EQ(s.coefficient(e), want[i]) << "q^" << e;
  }
}

// sum_{d | n} d
long sigma1(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

}  // namespace

TEST(Series, TruncationIsMinimumOfOperands) {
  FracPowerSeries a = series({{0, 1}, {1, 2}}, 5);
  FracPowerSeries b = series({{-1, 1}}, 3);
  EXPECT_EQ((a + b).truncation(), Rational(3));
  // min(5 + val(b), 3 + val(a)) = min(4, 3)
  EXPECT_EQ((a * b).truncation(), Rational(3));
  EXPECT_FALSE(a.knows(5));
}

TEST(Series, DeltaTimesInverseIsOne) {
  FracPowerSeries d = delta(12);
  FracPowerSeries one = (d * d.inverse(10)).truncated(10);
  EXPECT_TRUE(one.agrees_with(FracPowerSeries::constant(1).truncated(10)));
  expect_coefficients(d, {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480});
}

TEST(Series, JExpansion) {
  FracPowerSeries j = j_invariant(3);
  expect_coefficients(j, {1, 744, 196884, 21493760}, -1);
}

TEST(Series, EtaQuotient) {
  FracPowerSeries s = (eta_power(1, 16, 8) * eta_power(2, 8, 8).inverse(6)).truncated(6);
  expect_coefficients(s, {1, -16, 112, -448, 1136, -2016});
  FracPowerSeries f = (eta_power(2, 8, 5) * eta_power(1, 16, 5).inverse(3)).scaled(8).truncated(3);
  expect_coefficients(f, {8, 128, 1152});
}

TEST(Series, EtaPowerTwentyFourIsDelta) {
  EXPECT_TRUE(eta(1, 8).pow(24, 7).truncated(7).agrees_with(delta(7)));
}

TEST(Series, EulerProductMatchesPentagonalNumbers) {
  const long prec = 60;
  std::map<Rational, Rational> t;
  for (long k = -10; k <= 10; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e < prec) t[Rational(e)] += k % 2 == 0 ? 1 : -1;
  }
  FracPowerSeries oracle = FracPowerSeries::from_terms(t, Rational(prec));
  EXPECT_TRUE(euler_product(prec).agrees_with(oracle));
  EXPECT_TRUE(eta(1, prec).agrees_with(oracle.shifted(make_rational(1, 24))));
}

TEST(Series, Eisenstein) {
  expect_coefficients(eisenstein(2, 4), {1, -24, -72, -96});
  expect_coefficients(eisenstein(4, 3), {1, 240, 2160});
  expect_coefficients(eisenstein(6, 3), {1, -504, -16632});
  EXPECT_TRUE(eisenstein(8, 10).agrees_with((eisenstein(4, 10) * eisenstein(4, 10)).truncated(10)));
  FracPowerSeries e4 = eisenstein(4, 10), e6 = eisenstein(6, 10);
  EXPECT_TRUE((e4 * e4 * e4 - e6 * e6).truncated(10).agrees_with(delta(10).scaled(1728)));
  EXPECT_THROW(eisenstein(3, 4), DomainError);
}

TEST(Bernoulli, Polynomials) {
  for (long n = -4; n <= 4; ++n) {
    Rational x = make_rational(n, 3);
    EXPECT_EQ(bernoulli_polynomial(2, x), x * x - x + make_rational(1, 6));
  }
  EXPECT_EQ(periodic_bernoulli(1, 0), 0);
  EXPECT_EQ(periodic_bernoulli(2, make_rational(5, 4)), make_rational(-1, 48));
  EXPECT_EQ(bernoulli_number(12), make_rational(-691, 2730));
}

TEST(Bernoulli, PeriodicFunctionsHavePeriodOne) {
  for (long m = 1; m <= 6; ++m)
    for (long n = -7; n <= 7; ++n) {
      Rational x = make_rational(n, 5);
      EXPECT_EQ(periodic_bernoulli(m, x), periodic_bernoulli(m, x + 1)) << m << " " << x;
      EXPECT_EQ(periodic_bernoulli(m, x), periodic_bernoulli(m, x - 3)) << m << " " << x;
    }
}

TEST(Hurwitz, SmallValues) {
  auto h = hurwitz_class_numbers(24);
  EXPECT_EQ(h[0], make_rational(-1, 12));
  EXPECT_EQ(h[1], 0);
  EXPECT_EQ(h[2], 0);
  EXPECT_EQ(h[3], make_rational(1, 3));
  EXPECT_EQ(h[4], make_rational(1, 2));
  EXPECT_EQ(h[12], make_rational(4, 3));
  EXPECT_EQ(h[23], 3);
}

TEST(Hurwitz, KroneckerRelation) {
  // sum_{t^2 <= 4n} H(4n - t^2) = 2 sigma(n) - sum_{d | n} min(d, n/d)
  const long nmax = 40;
  auto h = hurwitz_class_numbers(4 * nmax);
  for (long n = 1; n <= nmax; ++n) {
    Rational lhs = 0;
    for (long t = -2 * n; t <= 2 * n; ++t)
      if (t * t <= 4 * n) lhs += h[static_cast<std::size_t>(4 * n - t * t)];
    long lambda = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) lambda += std::min(d, n / d);
    EXPECT_EQ(lhs, Rational(2 * sigma1(n) - lambda)) << n;
  }
}

TEST(Hurwitz, GeneratingSeriesAndComponents) {
  const FracPowerSeries expected = series({{0, make_rational(-1, 12)},
                                           {3, make_rational(1, 3)},
                                           {4, make_rational(1, 2)},
                                           {7, 1},
                                           {8, 1},
                                           {11, 1},
                                           {12, make_rational(4, 3)}},
                                          13);
  EXPECT_TRUE(hurwitz_generating_series(13).agrees_with(expected));

  VectorValuedForm g1 = zagier_g1(4);
  const FracPowerSeries& e0 = g1.component({0});
  const FracPowerSeries& e1 = g1.component({1});
  EXPECT_EQ(e0.coefficient(2), 1);
  EXPECT_EQ(e1.coefficient(make_rational(7, 4)), 1);
  FracPowerSeries reassembled = (e0.rescaled(4) + e1.rescaled(4)).truncated(13);
  EXPECT_TRUE(reassembled.agrees_with(expected)) << reassembled.to_string();
}

TEST(Series, RingAxioms) {
  for (int trial = 0; trial < 40; ++trial) {
    FracPowerSeries a = random_series(-2, 6), b = random_series(0, 7), c = random_series(-1, 5);
    EXPECT_TRUE((a + b).agrees_with(b + a));
    EXPECT_TRUE((a * b).agrees_with(b * a));
    EXPECT_TRUE(((a * b) * c).agrees_with(a * (b * c)));
    EXPECT_TRUE((a * (b + c)).agrees_with(a * b + a * c));
    EXPECT_TRUE((a - a).empty());
  }
}

TEST(Series, InverseIsTwoSided) {
  for (int trial = 0; trial < 30; ++trial) {
    FracPowerSeries u = random_unit(8).shifted(testing_support::uniform(-2, 2));
    FracPowerSeries inv = u.inverse();
    FracPowerSeries one = FracPowerSeries::constant(1);
    EXPECT_TRUE((u * inv).agrees_with(one)) << u.to_string();
    EXPECT_TRUE((inv * u).agrees_with(one));
  }
  EXPECT_THROW(FracPowerSeries().inverse(), DomainError);
}

TEST(Series, Rescaling) {
  FracPowerSeries t = jacobi_theta(10);
  FracPowerSeries t4 = t.rescaled(make_rational(1, 4));
  EXPECT_EQ(t4.coefficient(make_rational(1, 4)), 2);
  EXPECT_EQ(t4.truncation(), make_rational(5, 2));
  EXPECT_TRUE(t4.rescaled(4).agrees_with(t));
}

TEST(Expressions, Evaluate) {
  EXPECT_TRUE(evaluate_series("E4^3 / Delta", 3).agrees_with(j_invariant(3)));
  EXPECT_TRUE(evaluate_series("eta^16 / eta(2)^8", 6).agrees_with(
      (eta_power(1, 16, 8) * eta_power(2, 8, 8).inverse(6)).truncated(6)));
  EXPECT_TRUE(evaluate_series("(1 + q)^-1", 5).agrees_with(series({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}, 5)));
  EXPECT_TRUE(evaluate_series("1/2 * theta - 3", 4).agrees_with(series({{0, make_rational(-5, 2)}, {1, 1}}, 4)));
  EXPECT_THROW(evaluate_series("E4 +", 3), InputError);
  EXPECT_THROW(evaluate_series("foo", 3), InputError);
  EXPECT_THROW(evaluate_series("E5", 3), DomainError);
}
