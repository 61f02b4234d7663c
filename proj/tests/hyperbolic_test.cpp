#include <gtest/gtest.h>

#include "support.hpp"
#include "thetalift/corpus.hpp"
#include "thetalift/hyperbolic/inner.hpp"
#include "thetalift/hyperbolic/reflective.hpp"
#include "thetalift/qseries/expr.hpp"

using namespace thetalift;

namespace {

VectorValuedForm scalar(const std::string& lattice, const FracPowerSeries& s, long weight) {
  return corpus::scalar_form(corpus::lattice(lattice), s, weight);
}

// II1,1 with j^2 = q^-2 + 1488 q^-1 + 947304 + O(q): walls r^perp for
// r = (-2, 1), (-1, 1), (-1, 2), at slopes 1/2, 1 and 2 in the positive quadrant.
struct PlaneWithWalls {
  EvenLattice m = corpus::lattice("II1,1");
  VectorValuedForm f = corpus::scalar_form(m, evaluate_series("j^2", 1), 0);
  CuspFrame near_first{m, IntegerVector{1, 0}, RationalVector{0, 1}};
  CuspFrame near_second{m, IntegerVector{0, 1}, RationalVector{1, 0}};
};

// II1,1 + A1(-1) with c(-1/4) = 1 on the nontrivial class, so the only wall
// through the cusp is the A1 root direction.
struct RootWall {
  EvenLattice m = direct_sum(corpus::lattice("II1,1"), corpus::lattice("A1(-1)"));
  DiscPtr d = make_discriminant(m);
  VectorValuedForm f{d,
                     make_rational(-1, 2),
                     0,
                     {{d->zero(), FracPowerSeries::from_terms({{0, 10}}, 1)},
                      {d->class_of({0, 0, make_rational(1, 2)}),
                       FracPowerSeries::from_terms({{make_rational(-1, 4), 1}}, make_rational(3, 4))}}};
  CuspFrame frame{m, IntegerVector{1, 0, 0}, RationalVector{0, 1, 0}};
};

}  // namespace

TEST(Definite, PhiConstant) {
  EvenLattice e8 = corpus::lattice("E8(-1)");
  EXPECT_EQ(phi_negdef_constant(DiscriminantForm(e8), scalar("E8(-1)", corpus::e4_power_over_delta(2, 3), -4)), 720);
  EvenLattice leech = corpus::lattice("Leech(-1)");
  EXPECT_EQ(phi_negdef_constant(DiscriminantForm(leech), scalar("Leech(-1)", delta(3).inverse(2), -12)), 0);
  EXPECT_EQ(phi_negdef_constant(DiscriminantForm(e8), scalar("E8(-1)", FracPowerSeries(), -4)), 0);
  EXPECT_THROW(phi_negdef_constant(DiscriminantForm(root_lattice_e8()), scalar("E8", FracPowerSeries::constant(1), -4)),
               DomainError);
}

TEST(Definite, VectorSystems) {
  EvenLattice e8 = corpus::lattice("E8(-1)");
  VectorSystemReport r = vector_system_check(DiscriminantForm(e8), scalar("E8(-1)", corpus::e4_power_over_delta(2, 3), -4));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.index, 30);
  EXPECT_EQ(r.support, 240u);

  EvenLattice leech = corpus::lattice("Leech(-1)");
  r = vector_system_check(DiscriminantForm(leech), scalar("Leech(-1)", delta(3).inverse(2), -12));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.index, 0);
  EXPECT_EQ(r.support, 0u);

  r = vector_system_check(DiscriminantForm(e8), scalar("E8(-1)", FracPowerSeries(), -4));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.index, 0);
}

TEST(Definite, Congruences) {
  EvenLattice e8s = corpus::lattice("E8^3");
  CongruenceReport r = congruence_check(DiscriminantForm(e8s), scalar("E8^3", delta(3).inverse(2), -12));
  EXPECT_EQ(r.constant, 744);
  EXPECT_TRUE(r.divisible);

  VectorValuedForm a1 = corpus::Corpus{}.congruence_form();
  r = congruence_check(*a1.disc(), a1);
  EXPECT_EQ(r.ideal, 2);
  EXPECT_EQ(r.constant, 12);
  EXPECT_EQ(r.product, 24);
  EXPECT_TRUE(r.divisible);

  r = congruence_check(*a1.disc(), VectorValuedForm(a1.disc(), make_rational(-1, 2), 0, {}));
  EXPECT_EQ(r.constant, 0);
  EXPECT_TRUE(r.divisible);

  corpus::Corpus perturbed;
  perturbed.congruence_zero_class = 11;
  VectorValuedForm b = perturbed.congruence_form();
  EXPECT_FALSE(congruence_check(*b.disc(), b).divisible);
}

TEST(Definite, NiemeierCongruences) {
  // Leech, E8^3 and D16+E8 style unimodular definite lattices all satisfy divisibility.
  EvenLattice leech = corpus::lattice("Leech");
  CongruenceReport r = congruence_check(DiscriminantForm(leech), scalar("Leech", delta(3).inverse(2), -12));
  EXPECT_EQ(r.constant, 24);
  EXPECT_TRUE(r.divisible);
}

TEST(Weyl, HyperbolicPlaneWithConstantForm) {
  EvenLattice m = corpus::lattice("II1,1");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::scalar_form(m, FracPowerSeries::constant(1).truncated(2), 0);
  WeylVector w = weyl_vector(frame, f, default_witness(frame, f));
  EXPECT_EQ(w.rho_zprime, make_rational(1, 24));
  EXPECT_EQ(minimal_integral_multiple(m, w.vector, false), 24);
  EXPECT_EQ(Rational(24) * w.vector, (RationalVector{1, 1}));

  // Without walls phi is linear with gradient rho.
  for (const RationalVector& v : {RationalVector{1, 1}, RationalVector{5, 2}, RationalVector{1, 7}})
    EXPECT_EQ(phi_eval_hyperbolic(frame, f, default_witness(frame, f), v).value, m.inner(w.vector, v));
}

TEST(Weyl, UnimodularNorms) {
  const std::vector<std::pair<std::string, Rational>> cases = {{"II1,9", 1240}, {"II1,17", 620}, {"II1,25", 0}};
  for (const auto& [name, expected] : cases) {
    EvenLattice m = corpus::lattice(name);
    CuspFrame frame = corpus::hyperbolic_frame(m);
    VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
    WeylVector w = weyl_vector(frame, f, default_witness(frame, f));
    EXPECT_EQ(w.norm, expected) << name;
    EXPECT_EQ(w.convention, BoundaryConvention::included);
  }
}

TEST(Weyl, ExcludedConventionDiffers) {
  EvenLattice m = corpus::lattice("II1,9");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
  RationalVector wit = default_witness(frame, f);
  WeylVector inc = weyl_vector(frame, f, wit, BoundaryConvention::included);
  WeylVector exc = weyl_vector(frame, f, wit, BoundaryConvention::excluded);
  EXPECT_NE(inc.norm, exc.norm);
  EXPECT_EQ(inc.rho_zprime, exc.rho_zprime);
  EXPECT_EQ(parse_convention(to_string(BoundaryConvention::excluded)), BoundaryConvention::excluded);
  EXPECT_THROW(parse_convention("sideways"), InputError);
}

TEST(Weyl, ZeroFormGivesZeroVector) {
  EvenLattice m = corpus::lattice("II1,9");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::scalar_form(m, FracPowerSeries::zero(Rational(3)), -4);
  WeylVector w = weyl_vector(frame, f, default_witness(frame, f));
  EXPECT_TRUE(is_zero(w.vector));
}

TEST(Weyl, FinitenessOfReducedTerms) {
  EvenLattice m = corpus::lattice("II1,9");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
  auto terms = reduced_terms(frame, f);
  // lambda^2/2 >= -1 on E8(-1): the zero vector and the 240 roots.
  EXPECT_EQ(terms.size(), 241u);
  RatMatrix neg = frame.reduced_lattice().rational_gram();
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  Integer enumerated = 0;
  for (const auto& [v, c] : count_short_vectors(neg, 2 * f.pole_order())) enumerated += c;
  EXPECT_EQ(Integer(static_cast<long>(terms.size())), enumerated);
  for (const auto& t : terms) EXPECT_GE(t.half_norm, -f.pole_order());
}

TEST(Weyl, InnerProductMatchesWeylVector) {
  EvenLattice m = corpus::lattice("II1,9");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
  RationalVector wit = default_witness(frame, f);
  WeylVector w = weyl_vector(frame, f, wit);
  RationalVector lambda = frame.z_rational() + frame.zprime();
  ASSERT_EQ(m.norm(lambda), 2);
  ASSERT_TRUE(in_chamber_closure(frame, f, wit, lambda));
  Rational paired = weyl_inner_product(m, f, lambda);
  EXPECT_EQ(paired, 61);
  EXPECT_EQ(m.inner(w.vector, lambda), paired);
  EXPECT_THROW(weyl_inner_product(m, f, Rational(2) * lambda), DomainError);
}

TEST(Weyl, InnerProductLeechModel) {
  EvenLattice m = corpus::lattice("II1,25");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
  RationalVector lambda = frame.z_rational() + frame.zprime();
  // lambda^perp = Leech(-1) + A1(-1): two dual vectors of norm -1/2 and two of norm -2.
  EXPECT_EQ(weyl_inner_product(m, f, lambda), make_rational(-2, 3) + make_rational(3, 2) + make_rational(2, 12));
}

TEST(WallCrossing, RootWallDelta) {
  RootWall t;
  ASSERT_TRUE(validate_vvf(t.f).empty());
  const RationalVector up{0, 0, 1}, down{0, 0, -1};
  RationalVector side = chamber_base_point(t.frame, t.f, up);
  RationalVector delta = wall_crossing_delta(t.m, t.f, up, side);
  // (up, up) = -2, so the multiple positive on this side is -up/2 and delta = -(-up/2).
  EXPECT_EQ(delta, (RationalVector{0, 0, make_rational(1, 2)}));
  EXPECT_EQ(wall_crossing_delta(t.m, t.f, up, chamber_base_point(t.frame, t.f, down)), Rational(-1) * delta);

  WeylVector w_up = weyl_vector(t.frame, t.f, up);
  WeylVector w_down = weyl_vector(t.frame, t.f, down);
  EXPECT_EQ(w_up.vector - w_down.vector, delta);

  // A wall carrying no coefficient contributes nothing.
  EXPECT_EQ(wall_crossing_delta(t.m, t.f, RationalVector{1, -1, 0}, RationalVector{3, 1, 0}), RationalVector(3, 0));
  EXPECT_THROW(wall_crossing_delta(t.m, t.f, RationalVector{1, 1, 0}, side), DomainError);
}

TEST(WallCrossing, PathIndependence) {
  PlaneWithWalls t;
  RationalVector wit1 = default_witness(t.near_first, t.f), wit2 = default_witness(t.near_second, t.f);
  WeylVector w1 = weyl_vector(t.near_first, t.f, wit1);
  WeylVector w2 = weyl_vector(t.near_second, t.f, wit2);
  // c(0) B2(0)/2 = 947304/24 along z; (947304 - 24*1488 - 72)/24 along z'.
  EXPECT_EQ(w1.vector, (RationalVector{39471, 37980}));
  EXPECT_EQ(w2.vector, (RationalVector{37980, 39471}));

  const RationalVector p1 = chamber_base_point(t.near_first, t.f, wit1);
  const RationalVector p2 = chamber_base_point(t.near_second, t.f, wit2);
  EXPECT_EQ(separating_walls(t.m, t.f, p1, p2).crossed.size(), 3u);
  EXPECT_EQ(transport(t.m, t.f, w1.vector, p1, p2), w2.vector);

  // One chamber at a time: slopes 3/4 and 5/3 sit between consecutive walls.
  const std::vector<RationalVector> path = {p1, {4, 3}, {3, 5}, p2};
  RationalVector rho = w1.vector, telescoped = w1.vector;
  const std::vector<RationalVector> walls = {{-2, 1}, {-1, 1}, {-1, 2}};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    rho = transport(t.m, t.f, rho, path[i], path[i + 1]);
    telescoped = telescoped - wall_crossing_delta(t.m, t.f, walls[i], path[i]);
  }
  EXPECT_EQ(rho, w2.vector);
  EXPECT_EQ(telescoped, w2.vector);
}

TEST(WallCrossing, PhiIsContinuousAcrossWalls) {
  PlaneWithWalls t;
  RationalVector wit = default_witness(t.near_first, t.f);
  const RationalVector on_wall{1, 1};
  PhiValue below = phi_eval_hyperbolic(t.near_first, t.f, wit, {4, 3});
  PhiValue above = phi_eval_hyperbolic(t.near_first, t.f, wit, {3, 4});
  EXPECT_NE(below.rho, above.rho);
  EXPECT_EQ(t.m.inner(below.rho, on_wall), t.m.inner(above.rho, on_wall));
  EXPECT_THROW(phi_eval_hyperbolic(t.near_first, t.f, wit, on_wall), DomainError);
  EXPECT_THROW(phi_eval_hyperbolic(t.near_first, t.f, wit, {1, -1}), DomainError);

  PhiValue base = phi_eval_hyperbolic(t.near_first, t.f, wit, below.base_point);
  EXPECT_TRUE(base.crossed.empty());
  EXPECT_EQ(base.value, t.m.inner(base.base.vector, below.base_point));
}

TEST(Reflective, UnimodularCertificates) {
  EvenLattice m = corpus::lattice("II1,9");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
  ReflectiveReport r = reflective_certificate(frame, f, default_witness(frame, f));
  EXPECT_TRUE(r.reflective());
  EXPECT_EQ(r.weyl.norm, 1240);
  EXPECT_EQ(r.conclusion, "finite index reflection group");
}

TEST(Reflective, LeechModelIsVirtuallyAbelian) {
  EvenLattice m = corpus::lattice("II1,25");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
  ReflectiveReport r = reflective_certificate(frame, f, default_witness(frame, f));
  EXPECT_TRUE(r.reflective());
  EXPECT_EQ(r.weyl.norm, 0);
  EXPECT_EQ(r.conclusion, "virtually abelian quotient");
}

TEST(Reflective, EvenSublatticeWithD6Theta) {
  EvenLattice m = corpus::lattice("I1,19even");
  IntegerVector z = to_integer(corpus::from_odd_coordinates({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  CuspFrame frame = CuspFrame::with_partner(m, z);
  VectorValuedForm f = corpus::d6_reflective_form(3);
  ASSERT_TRUE(validate_vvf(f).empty());
  ReflectiveReport r = reflective_certificate(frame, f, default_witness(frame, f));
  EXPECT_TRUE(r.reflective());
  EXPECT_GT(r.weyl.norm, 0);
  EXPECT_EQ(r.conclusion, "finite index reflection group");
}

TEST(Reflective, ReportsNonReflectiveRoots) {
  // A coefficient at a norm -4 vector of II1,9 whose reflection is not integral.
  EvenLattice m = corpus::lattice("II1,9");
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::scalar_form(m, FracPowerSeries::from_terms({{-2, 1}}, 1), -4);
  ReflectiveReport r = reflective_certificate(frame, f, default_witness(frame, f));
  EXPECT_FALSE(r.reflective());
}
