#pragma once
// Named regression checks over the bundled corpus. Names are dotted and
// grouped by area so a prefix selects a family ("weyl" runs the hyperbolic
// lattice checks only).

#include <functional>
#include <sstream>

#include "thetalift/corpus.hpp"
#include "thetalift/hyperbolic/inner.hpp"
#include "thetalift/hyperbolic/reflective.hpp"
#include "thetalift/products/expansion.hpp"
#include "thetalift/qseries/expr.hpp"
#include "thetalift/qseries/zagier.hpp"
#include "thetalift/shimura/shimura.hpp"
#include "thetalift/weilrep/weil.hpp"

namespace thetalift::regress {

struct CheckResult {
  bool passed = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckResult(const corpus::Corpus&)> run;
};

struct Outcome {
  std::string name;
  CheckResult result;
};

namespace detail {

inline CheckResult verdict(bool ok, std::string detail) { return {ok, std::move(detail)}; }

inline std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

inline std::vector<Rational> coefficients(const FracPowerSeries& s, long from, long to) {
  std::vector<Rational> out;
  for (long n = from; n <= to; ++n) out.push_back(s.coefficient(n));
  return out;
}

inline CheckResult unimodular_weyl_norm(const std::string& name, const Rational& expected) {
  EvenLattice m = corpus::lattice(name);
  CuspFrame frame = corpus::hyperbolic_frame(m);
  VectorValuedForm f = corpus::unimodular_reflective_form(m, 3);
  WeylVector w = weyl_vector(frame, f, default_witness(frame, f));
  return verdict(w.norm == expected, "rho^2 = " + w.norm.get_str() + ", expected " + expected.get_str());
}

/// Counts of vectors of norm -n (n = 1/2, 2) in the dual of lambda^perp.
inline std::pair<Integer, Integer> orthogonal_dual_counts(const EvenLattice& m, const RationalVector& lambda) {
  const std::size_t n = m.rank();
  IntMatrix row(1, n);
  RationalVector gl = mat_vec(m.gram(), lambda);
  for (std::size_t i = 0; i < n; ++i) row(0, i) = Integer(gl[i].get_num());
  IntMatrix basis = integer_kernel(row);
  RatMatrix perp = to_rational(basis) * m.rational_gram() * to_rational(basis).transpose();
  RatMatrix dual = inverse_or_throw(perp);
  RatMatrix form = dual;
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = 0; j < form.cols(); ++j) form(i, j) = -dual(i, j);
  auto counts = count_short_vectors(form, 2);
  auto at = [&](const Rational& v) { return counts.count(v) ? counts.at(v) : Integer(0); };
  return {at(make_rational(1, 2)), at(Rational(2))};
}

inline CheckResult level_two_product() {
  const Rational prec = 6;
  EvenLattice m = corpus::lattice("I2,10even");
  VectorValuedForm f = corpus::level_two_product_form(prec);
  auto v = [](std::vector<long> x) { return corpus::from_odd_coordinates(x); };
  ProductDatum datum(m, f, to_integer(v({3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})), v({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                     v({3, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0}));
  std::ostringstream os;
  bool ok = true;
  LiftWeight lw = lift_weight(datum);
  os << "weight " << lw.weight << (lw.singular() ? " (singular)" : " (not singular)");
  ok = ok && lw.weight == 4 && lw.singular();
  Rational order = zero_order(datum, v({0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  os << "; zero order " << order;
  ok = ok && order == 1;
  RationalVector h = datum.base_point();
  RationalVector w0 = datum.inner().z_rational();
  const EvenLattice& k = datum.outer().reduced_lattice();
  FracPowerSeries ray = ray_series(datum, product_expansion(datum, h, 6 * k.inner(w0, h), w0), w0);
  FracPowerSeries expected =
      (eta_power(1, 16, prec + 1) * eta_power(2, 8, prec + 2).inverse(prec + 1)).truncated(prec);
  os << "; ray " << ray.to_string();
  ok = ok && ray.agrees_with(expected) && ray.truncation() && *ray.truncation() >= prec;
  RationalVector hf = h + Rational(4) * w0;
  auto bad = singular_weight_support(datum, product_expansion(datum, hf, 4));
  os << "; off-norm-0 terms " << bad.size();
  ok = ok && bad.empty();
  return verdict(ok, os.str());
}

inline CheckResult level_one_product() {
  const Rational prec = 6;
  EvenLattice m = corpus::lattice("I2,10even");
  VectorValuedForm f = corpus::level_two_product_form(prec);
  auto v = [](std::vector<long> x) { return corpus::from_odd_coordinates(x); };
  ProductDatum datum(m, f, to_integer(v({1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0})), v({1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}),
                     v({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
  const RationalVector& rho = datum.weyl().vector;
  RationalVector h = datum.base_point();
  const EvenLattice& k = datum.outer().reduced_lattice();
  FracPowerSeries ray = ray_series(datum, product_expansion(datum, h, prec * k.inner(rho, h), rho), rho);
  // q prod (1 - q^n)^((-1)^n 8) = q prod (1 - q^(2n))^16 / (1 - q^n)^8
  FracPowerSeries prod =
      euler_product(prec).rescaled(2).pow(16, prec) * euler_product(prec).pow(8, prec).inverse(prec);
  FracPowerSeries expected = (FracPowerSeries::monomial(1, 1) * prod).truncated(prec);
  bool ok = ray.agrees_with(expected) && ray.truncation() && *ray.truncation() >= prec;
  return verdict(ok, "rho^2 = " + datum.weyl().norm.get_str() + "; ray " + ray.to_string());
}

}  // namespace detail

inline std::vector<Check> paper_checks() {
  using detail::verdict;
  std::vector<Check> c;

  c.push_back({"series.j-expansion", [](const corpus::Corpus& k) {
                 auto j = evaluate_series("E4^3 / Delta", 2);
                 auto got = detail::coefficients(j, 0, 1);
                 return verdict(got == k.j_expected, "q^0, q^1: " + detail::join(got));
               }});
  c.push_back({"series.eta-quotient", [](const corpus::Corpus& k) {
                 auto s = evaluate_series("eta^16 / eta(2)^8", 4);
                 auto got = detail::coefficients(s, 0, 3);
                 return verdict(got == k.eta_quotient_expected, "q^0..q^3: " + detail::join(got));
               }});
  c.push_back({"theta.e8", [](const corpus::Corpus&) {
                 auto th = theta_series(corpus::lattice("E8"), 11);
                 return verdict(th.agrees_with(eisenstein(4, 11)) && *th.truncation() == 11, th.to_string());
               }});
  c.push_back({"theta.leech", [](const corpus::Corpus& k) {
                 auto th = theta_series(corpus::lattice("Leech"), 4);
                 auto e4 = eisenstein(4, 4);
                 auto target = (e4 * e4 * e4 - delta(4).scaled(720)).truncated(4);
                 bool ok = th.coefficient(1) == 0 && th.coefficient(2) == Rational(k.leech_min_count) &&
                           th.agrees_with(target) && *th.truncation() == 4;
                 return verdict(ok, th.to_string());
               }});
  c.push_back({"weil.relations", [](const corpus::Corpus&) {
                 std::string failed;
                 for (const auto& name : corpus::weil_corpus())
                   if (!check_relations(weil_representation(make_discriminant(corpus::lattice(name)))).all())
                     failed += " " + name;
                 return verdict(failed.empty(), failed.empty() ? "relations hold" : "failed:" + failed);
               }});
  c.push_back({"weil.milgram", [](const corpus::Corpus&) {
                 std::string failed;
                 for (const auto& name : corpus::weil_corpus())
                   if (!milgram_check(DiscriminantForm(corpus::lattice(name))).squared_identity) failed += " " + name;
                 return verdict(failed.empty(), failed.empty() ? "squared identity holds" : "failed:" + failed);
               }});
  c.push_back({"weyl.norm.ii1_9", [](const corpus::Corpus& k) {
                 return detail::unimodular_weyl_norm("II1,9", k.weyl_norm_expected[0]);
               }});
  c.push_back({"weyl.norm.ii1_17", [](const corpus::Corpus& k) {
                 return detail::unimodular_weyl_norm("II1,17", k.weyl_norm_expected[1]);
               }});
  c.push_back({"weyl.norm.ii1_25", [](const corpus::Corpus& k) {
                 return detail::unimodular_weyl_norm("II1,25", k.weyl_norm_expected[2]);
               }});
  c.push_back({"weyl.hyperbolic-plane", [](const corpus::Corpus&) {
                 EvenLattice m = corpus::lattice("II1,1");
                 CuspFrame frame = corpus::hyperbolic_frame(m);
                 auto f = corpus::scalar_form(m, FracPowerSeries::constant(1).truncated(2), 0);
                 WeylVector w = weyl_vector(frame, f, default_witness(frame, f));
                 Integer mult = minimal_integral_multiple(m, w.vector, false);
                 RationalVector primitive = Rational(mult) * w.vector;
                 bool ok = mult == 24 && primitive == RationalVector{1, 1};
                 return verdict(ok, "24 rho = (" + primitive[0].get_str() + ", " + primitive[1].get_str() + ")");
               }});
  c.push_back({"weyl.inner-product.ii1_9", [](const corpus::Corpus&) {
                 EvenLattice m = corpus::lattice("II1,9");
                 CuspFrame frame = corpus::hyperbolic_frame(m);
                 auto f = corpus::unimodular_reflective_form(m, 3);
                 RationalVector wit = default_witness(frame, f);
                 WeylVector w = weyl_vector(frame, f, wit);
                 RationalVector lambda = frame.z_rational() + frame.zprime();
                 bool closure = in_chamber_closure(frame, f, wit, lambda);
                 Rational direct = m.inner(w.vector, lambda), paired = weyl_inner_product(m, f, lambda);
                 return verdict(closure && direct == paired,
                                "(rho, lambda) = " + direct.get_str() + ", theta pairing " + paired.get_str());
               }});
  c.push_back({"weyl.inner-product.ii1_25", [](const corpus::Corpus&) {
                 EvenLattice m = corpus::lattice("II1,25");
                 CuspFrame frame = corpus::hyperbolic_frame(m);
                 auto f = corpus::unimodular_reflective_form(m, 3);
                 WeylVector w = weyl_vector(frame, f, default_witness(frame, f));
                 RationalVector lambda = frame.z_rational() + frame.zprime();
                 auto [c_half, c_two] = detail::orthogonal_dual_counts(m, lambda);
                 Rational closed = -Rational(c_half) / 3 + make_rational(3, 2) + Rational(c_two) / 12;
                 Rational paired = weyl_inner_product(m, f, lambda), direct = m.inner(w.vector, lambda);
                 return verdict(closed == paired && paired == direct,
                                "closed form " + closed.get_str() + ", theta pairing " + paired.get_str() +
                                    ", (rho, lambda) " + direct.get_str());
               }});
  c.push_back({"weyl.g1-components", [](const corpus::Corpus&) {
                 auto g = zagier_g1(2);
                 bool ok = g.coefficient({0}, 0) == make_rational(-1, 12) && g.coefficient({0}, 1) == make_rational(1, 2) &&
                           g.coefficient({1}, make_rational(3, 4)) == make_rational(1, 3);
                 return verdict(ok, "e0: " + g.component({0}).to_string() + "; e1: " + g.component({1}).to_string());
               }});
  c.push_back({"weyl.congruence.e8^3", [](const corpus::Corpus&) {
                 EvenLattice k = corpus::lattice("E8^3");
                 auto r = congruence_check(DiscriminantForm(k), corpus::scalar_form(k, delta(3).inverse(2), -12));
                 return verdict(r.divisible && r.constant == 744, "N = " + r.ideal.get_str() + ", constant " + r.constant.get_str());
               }});
  c.push_back({"weyl.congruence.leech", [](const corpus::Corpus&) {
                 EvenLattice k = corpus::lattice("Leech");
                 auto r = congruence_check(DiscriminantForm(k), corpus::scalar_form(k, delta(3).inverse(2), -12));
                 return verdict(r.divisible && r.constant == 24, "N = " + r.ideal.get_str() + ", constant " + r.constant.get_str());
               }});
  c.push_back({"weyl.congruence.a1", [](const corpus::Corpus& k) {
                 auto f = k.congruence_form();
                 auto r = congruence_check(*f.disc(), f);
                 return verdict(r.divisible && r.constant == k.congruence_expected_constant && r.ideal == 2,
                                "N = " + r.ideal.get_str() + ", constant " + r.constant.get_str());
               }});
  c.push_back({"weyl.vector-system.e8", [](const corpus::Corpus&) {
                 EvenLattice k = corpus::lattice("E8(-1)");
                 auto r = vector_system_check(DiscriminantForm(k), corpus::scalar_form(k, corpus::e4_power_over_delta(2, 3), -4));
                 return verdict(r.holds && r.index == 30, "index " + r.index.get_str() + ", support " + std::to_string(r.support));
               }});
  c.push_back({"weyl.vector-system.leech", [](const corpus::Corpus&) {
                 EvenLattice k = corpus::lattice("Leech(-1)");
                 auto r = vector_system_check(DiscriminantForm(k), corpus::scalar_form(k, delta(3).inverse(2), -12));
                 return verdict(r.holds && r.index == 0, "index " + r.index.get_str() + ", support " + std::to_string(r.support));
               }});
  c.push_back({"weyl.reflective.ii1_9", [](const corpus::Corpus& k) {
                 EvenLattice m = corpus::lattice("II1,9");
                 CuspFrame frame = corpus::hyperbolic_frame(m);
                 auto f = corpus::unimodular_reflective_form(m, 3);
                 auto r = reflective_certificate(frame, f, default_witness(frame, f));
                 return verdict(r.reflective() && r.weyl.norm == k.weyl_norm_expected[0] && r.weyl.norm > 0,
                                r.conclusion + ", rho^2 = " + r.weyl.norm.get_str());
               }});
  c.push_back({"weyl.reflective.i1_19", [](const corpus::Corpus&) {
                 EvenLattice m = corpus::lattice("I1,19even");
                 IntegerVector z = to_integer(corpus::from_odd_coordinates({1, 1, 0, 0, 0, 0, 0, 0, 0, 0,
                                                                             0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
                 CuspFrame frame = CuspFrame::with_partner(m, z);
                 auto f = corpus::d6_reflective_form(3);
                 auto r = reflective_certificate(frame, f, default_witness(frame, f));
                 return verdict(r.reflective() && r.weyl.norm > 0, r.conclusion + ", rho^2 = " + r.weyl.norm.get_str());
               }});
  c.push_back({"lift.product.level-two", [](const corpus::Corpus&) { return detail::level_two_product(); }});
  c.push_back({"lift.product.level-one", [](const corpus::Corpus&) { return detail::level_one_product(); }});
  c.push_back({"lift.shimura", [](const corpus::Corpus& k) {
                 ShimuraInput in{k.shimura_mplus, k.shimura_stream, k.shimura_precision};
                 auto lift = shimura_lift(in, 4);
                 auto got = detail::coefficients(lift, 1, 3);
                 auto check = verify_eta_quotient(lift, 3);
                 bool ok = got == k.shimura_lift_expected && check.agrees && check.checked_through == 3 &&
                           lift == shimura_lift_double_sum(in, 4);
                 return verdict(ok, "b(1..3) = " + detail::join(got));
               }});
  c.push_back({"lift.binomial-identity", [](const corpus::Corpus&) {
                 for (long a = 0; a <= 8; ++a)
                   for (long b = 0; b <= 8; ++b)
                     for (long cc = 0; cc <= 8; ++cc) {
                       auto r = binomial_vanishing(a, b, cc);
                       if (r.lhs != r.rhs || (b + cc < a && r.lhs != 0))
                         return verdict(false, "fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                   std::to_string(cc) + ")");
                     }
                 return verdict(true, "grid 0..8 holds");
               }});
  return c;
}

inline bool matches(const std::string& name, const std::string& filter) {
  return filter.empty() || name.compare(0, filter.size(), filter) == 0;
}

/// Runs the checks whose names start with the filter; exceptions count as failures.
inline std::vector<Outcome> run_checks(const corpus::Corpus& data, const std::string& filter,
                                       const std::function<void(const Outcome&)>& on_done = {}) {
  std::vector<Outcome> out;
  for (const auto& check : paper_checks()) {
    if (!matches(check.name, filter)) continue;
    Outcome o{check.name, {}};
    try {
      o.result = check.run(data);
    } catch (const std::exception& e) {
      o.result = {false, std::string("error: ") + e.what()};
    }
    if (on_done) on_done(o);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace thetalift::regress
