#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalift/corpus.hpp"
#include "thetalift/products/expansion.hpp"

using namespace thetalift;

namespace {

RationalVector odd(std::vector<long> x) { return corpus::from_odd_coordinates(x); }

// Level-two cusp of the even sublattice of I2,10 with an inner cusp in K = II1,9.
ProductDatum level_two_datum(const Rational& prec, const VectorValuedForm* form = nullptr) {
  EvenLattice m = corpus::lattice("I2,10even");
  VectorValuedForm f = form ? *form : corpus::level_two_product_form(prec);
  return ProductDatum(m, f, to_integer(odd({3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})), odd({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                      odd({3, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0}));
}

// II2,26 = Leech(-1) + II1,1 + II1,1 with 1/Delta; the outer cusp is the last plane.
ProductDatum fake_monster_datum() {
  EvenLattice m = corpus::lattice("II2,26");
  IntegerVector z(28, 0);
  RationalVector zp(28, 0), inner(28, 0), inner_p(28, 0);
  z[26] = 1;
  zp[27] = 1;
  inner[24] = 1;
  inner_p[25] = 1;
  return ProductDatum(m, corpus::scalar_form(m, delta(4).inverse(3), -12), z, zp, inner, inner_p);
}

}  // namespace

TEST(Products, LevelTwoWeightAndZeros) {
  ProductDatum datum = level_two_datum(4);
  LiftWeight w = lift_weight(datum);
  EXPECT_EQ(w.weight, 4);
  EXPECT_EQ(w.singular_weight, 4);
  EXPECT_TRUE(w.singular());
  // A norm -1 vector of M' picks up the q^(-1/2) term of the q = 1/2 component.
  RationalVector lambda = odd({0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(corpus::lattice("I2,10even").norm(lambda), -1);
  EXPECT_EQ(zero_order(datum, lambda), 1);
  EXPECT_EQ(zero_order(datum, Rational(2) * lambda), 1);
  EXPECT_THROW(zero_order(datum, odd({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})), DomainError);
}

TEST(Products, ScalarConstants) {
  ProductDatum datum = level_two_datum(4);
  ScalarConstant c = scalar_constant(datum);
  // delta = 1 reads the -f component, constant -8: (1 - (-1))^(-4).
  EXPECT_FALSE(c.squared);
  EXPECT_EQ(c.value, CyclotomicNumber(make_rational(1, 16)));
  EXPECT_EQ(scalar_constant(fake_monster_datum()).value, CyclotomicNumber(1));
}

TEST(Products, LevelTwoRayIsEtaQuotient) {
  const Rational prec = 6;
  ProductDatum datum = level_two_datum(prec);
  RationalVector h = datum.base_point();
  RationalVector w0 = datum.inner().z_rational();
  const EvenLattice& k = datum.outer().reduced_lattice();
  EXPECT_EQ(k.norm(w0), 0);
  GroupRingSeries s = product_expansion(datum, h, prec * k.inner(w0, h), w0);
  FracPowerSeries ray = ray_series(datum, s, w0);
  FracPowerSeries expected = (eta_power(1, 16, prec + 1) * eta_power(2, 8, prec + 2).inverse(prec + 1)).truncated(prec);
  EXPECT_TRUE(ray.agrees_with(expected)) << ray.to_string();
  ASSERT_TRUE(ray.truncation());
  EXPECT_GE(*ray.truncation(), prec);
  const std::vector<Rational> head = {1, -16, 112, -448};
  for (long n = 0; n < 4; ++n) EXPECT_EQ(ray.coefficient(n), head[static_cast<std::size_t>(n)]);
}

TEST(Products, LevelTwoExpansionHasSingularSupport) {
  ProductDatum datum = level_two_datum(6);
  RationalVector h = datum.base_point() + Rational(4) * datum.inner().z_rational();
  GroupRingSeries s = product_expansion(datum, h, 4);
  EXPECT_TRUE(singular_weight_support(datum, s).empty());
  for (const auto& t : product_terms(datum, s)) {
    EXPECT_TRUE(is_integral(t.coefficient));
    EXPECT_LE(t.height, 4);
    EXPECT_TRUE(t.phase == 0 || t.phase == make_rational(1, 2));
  }

  // One injected coefficient at a vector of nonzero norm is reported.
  const EvenLattice& k = datum.outer().reduced_lattice();
  IntegerVector y(k.rank(), 0);
  for (;;) {
    RationalVector lam = s.offset + mat_vec(k.inverse_gram(), to_rational(y));
    if (k.norm(lam) != 0 && !s.terms.count(y)) break;
    y[0] += 1;
  }
  s.terms[y] = CyclotomicNumber(1);
  auto bad = singular_weight_support(datum, s);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_NE(bad[0].norm, 0);
}

TEST(Products, LevelOneRayMatchesSignRule) {
  const Rational prec = 6;
  EvenLattice m = corpus::lattice("I2,10even");
  ProductDatum datum(m, corpus::level_two_product_form(prec), to_integer(odd({1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0})),
                     odd({1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}), odd({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(datum.level(), 1);
  const RationalVector& rho = datum.weyl().vector;
  RationalVector h = datum.base_point();
  const EvenLattice& k = datum.outer().reduced_lattice();
  FracPowerSeries ray = ray_series(datum, product_expansion(datum, h, prec * k.inner(rho, h), rho), rho);
  // q prod (1 - q^n)^((-1)^n 8)
  FracPowerSeries prod = euler_product(prec).rescaled(2).pow(16, prec) * euler_product(prec).pow(8, prec).inverse(prec);
  FracPowerSeries expected = (FracPowerSeries::monomial(1, 1) * prod).truncated(prec);
  EXPECT_TRUE(ray.agrees_with(expected)) << ray.to_string();
  EXPECT_EQ(ray.coefficient(2), 8);
  EXPECT_EQ(ray.coefficient(3), 28);
}

TEST(Products, ZeroFormGivesTrivialProduct) {
  DiscPtr d = make_discriminant(corpus::lattice("I2,10even"));
  VectorValuedForm zero(d, -4, 0, {});
  ProductDatum datum = level_two_datum(4, &zero);
  EXPECT_EQ(lift_weight(datum).weight, 0);
  EXPECT_FALSE(lift_weight(datum).singular());
  EXPECT_TRUE(is_zero(datum.weyl().vector));
  GroupRingSeries s = product_expansion(datum, datum.base_point(), 5);
  ASSERT_EQ(s.terms.size(), 1u);
  EXPECT_EQ(s.terms.begin()->second, CyclotomicNumber(1));
  EXPECT_THROW(singular_weight_support(datum, s), DomainError);
}

TEST(Products, FakeMonster) {
  ProductDatum datum = fake_monster_datum();
  LiftWeight w = lift_weight(datum);
  EXPECT_EQ(w.weight, 12);
  EXPECT_TRUE(w.singular());
  RationalVector lambda(28, 0);
  lambda[24] = 1;
  lambda[25] = -1;
  EXPECT_EQ(zero_order(datum, lambda), 1);

  RationalVector h_ambient(28, 0);
  h_ambient[25] = 1;
  h_ambient[24] = 2;
  GroupRingSeries s = product_expansion(datum, datum.to_k(h_ambient), 3);
  EXPECT_TRUE(singular_weight_support(datum, s).empty());
  EXPECT_EQ(product_terms(datum, s).size(), 4u);
  for (const auto& t : product_terms(datum, s)) EXPECT_TRUE(is_integral(t.coefficient));
}

TEST(Products, ExpansionsAgreeAcrossWall) {
  // II2,2 with j - 744: the lift is j(sigma) - j(tau). The two chambers of K = II1,1
  // are separated by the wall of r = (1, -1), exponent c(-1) = 1, so the
  // products must differ by the crossing factor -1 on every common monomial.
  EvenLattice m = even_unimodular(2, 2);
  VectorValuedForm f = corpus::scalar_form(m, (j_invariant(4) - FracPowerSeries::constant(744)).truncated(4), 0);
  IntegerVector z{0, 0, 1, 0};
  RationalVector zp{0, 0, 0, 1}, e0{1, 0, 0, 0}, e1{0, 1, 0, 0};
  ProductDatum first(m, f, z, zp, e0, e1), second(m, f, z, zp, e1, e0);
  EXPECT_EQ(lift_weight(first).weight, 0);
  EXPECT_EQ(first.weyl().vector - second.weyl().vector,
            wall_crossing_delta(first.outer().reduced_lattice(), first.reduced_form(), {1, -1}, first.base_point()));

  const Rational bound = 3;
  const RationalVector h1 = first.base_point(), h2 = second.base_point();
  auto collect = [](const ProductDatum& d, const RationalVector& h, const Rational& b) {
    std::map<RationalVector, Rational> out;
    for (const auto& t : product_terms(d, product_expansion(d, h, b))) out[t.lambda] += t.coefficient;
    return out;
  };
  auto a = collect(first, h1, bound), b = collect(second, h2, bound);
  const EvenLattice& k = first.outer().reduced_lattice();
  std::size_t common = 0;
  for (const auto& [lam, c] : a) {
    RationalVector kl = first.to_k(lam);
    if (k.inner(kl, h2) > bound) continue;
    ++common;
    EXPECT_EQ(b.count(lam) ? b.at(lam) : Rational(0), -c);
  }
  for (const auto& [lam, c] : b)
    if (k.inner(first.to_k(lam), h1) <= bound) { EXPECT_TRUE(a.count(lam)); }
  EXPECT_GE(common, 2u);
}

TEST(Products, RejectsBadInputs) {
  EXPECT_THROW(ProductDatum(corpus::lattice("II1,9"), corpus::unimodular_reflective_form(corpus::lattice("II1,9"), 2),
                            IntegerVector(10, 0), RationalVector(10, 0), RationalVector(10, 0)),
               DomainError);
  ProductDatum datum = level_two_datum(4);
  EXPECT_THROW(product_expansion(datum, RationalVector{1}, 3), InputError);
  EXPECT_THROW(product_expansion(datum, datum.base_point(), -100), DomainError);
}

TEST(Products, Binomials) {
  EXPECT_EQ(binomial(-8, 3), -120);
  EXPECT_EQ(binomial(16, 2), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(make_rational(1, 2), 2), make_rational(-1, 8));
}
