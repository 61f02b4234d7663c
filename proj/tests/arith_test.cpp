#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalift/arith/cyclotomic.hpp"
#include "thetalift/arith/matrix.hpp"

using namespace thetalift;
using testing_support::uniform;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(make_rational(4, -6).get_str(), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}

TEST(Rational, FloorCeilFrac) {
  EXPECT_EQ(floor_of(make_rational(-3, 2)), -2);
  EXPECT_EQ(ceil_of(make_rational(-3, 2)), -1);
  EXPECT_EQ(frac(make_rational(-1, 4)), make_rational(3, 4));
}

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(e(0), CyclotomicNumber(1));
  EXPECT_EQ(e(make_rational(1, 2)), CyclotomicNumber(-1));
  EXPECT_EQ(e(make_rational(1, 8)) * e(make_rational(1, 8)), e(make_rational(1, 4)));
  EXPECT_TRUE((CyclotomicNumber(1) + e(make_rational(1, 3)) + e(make_rational(2, 3))).is_zero());
  EXPECT_EQ(e(make_rational(1, 5)) * e(make_rational(4, 5)), CyclotomicNumber(1));
  EXPECT_EQ(e(make_rational(1, 8)).conj(), e(make_rational(7, 8)));
}

TEST(Cyclotomic, ProductOfRootsIsRootOfSum) {
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = make_rational(uniform(-30, 30), uniform(1, 24));
    Rational y = make_rational(uniform(-30, 30), uniform(1, 24));
    EXPECT_EQ(e(x) * e(y), e(x + y)) << x << " " << y;
    EXPECT_EQ(e(x) * e(x).conj(), CyclotomicNumber(1)) << x;
  }
}

TEST(Cyclotomic, ReductionIsIdempotent) {
  for (int trial = 0; trial < 100; ++trial) {
    const long order = uniform(1, 30);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    for (auto& v : c) v = uniform(-4, 4);
    CyclotomicNumber a = CyclotomicNumber::from_powers(order, c);
    CyclotomicNumber b = CyclotomicNumber::from_powers(a.order(), a.lifted(a.order()).coefficients());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.coefficients(), b.coefficients());
  }
}

TEST(Cyclotomic, InverseAndPowers) {
  CyclotomicNumber a = CyclotomicNumber(2) + e(make_rational(1, 7));
  EXPECT_EQ(a * a.inverse(), CyclotomicNumber(1));
  EXPECT_EQ(e(make_rational(1, 12)).pow(12), CyclotomicNumber(1));
  EXPECT_EQ(e(make_rational(1, 12)).pow(-3), e(make_rational(-1, 4)));
}

TEST(Matrix, SmithFormDiagonalizes) {
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = uniform(-6, 6);
    SmithForm s = smith_normal_form(a);
    IntMatrix d = s.left * a * s.right;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i != j) { EXPECT_EQ(d(i, j), 0); }
      }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
      if (s.diagonal[i + 1] != 0) { EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0); }
  }
}

TEST(Matrix, InverseAndDeterminant) {
  IntMatrix g(2, 2);
  g(0, 0) = 2;
  g(0, 1) = g(1, 0) = 1;
  g(1, 1) = 2;
  EXPECT_EQ(determinant(g), 3);
  RatMatrix inv = inverse_or_throw(to_rational(g));
  EXPECT_EQ(inv(0, 0), make_rational(2, 3));
  EXPECT_EQ(inv(0, 1), make_rational(-1, 3));
}
