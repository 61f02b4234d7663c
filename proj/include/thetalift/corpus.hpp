#pragma once
// Bundled lattices and forms. The Corpus struct holds the explicit
// coefficient data that the regression checks consume; it is a plain value so
// a caller can perturb one entry and watch which checks notice.

#include <functional>

#include "thetalift/lattice/constructors.hpp"
#include "thetalift/lattice/frame.hpp"
#include "thetalift/lattice/theta.hpp"
#include "thetalift/qseries/modular.hpp"
#include "thetalift/weilrep/vvf.hpp"

namespace thetalift::corpus {

inline const std::vector<std::string>& lattice_names() {
  static const std::vector<std::string> names = {
      "A1",    "A1(-1)", "A2",       "E8",          "E8(-1)",  "E8^3",    "Leech",   "Leech(-1)",
      "II1,1", "II1,1(2)", "I2,10even", "I1,19even", "II1,9",  "II1,17", "II1,25", "II2,10", "II2,26"};
  return names;
}

/// The lattices whose Weil representations are checked by default.
inline const std::vector<std::string>& weil_corpus() {
  static const std::vector<std::string> names = {"A1", "A1(-1)", "E8", "II1,1", "II1,1(2)", "I2,10even", "A2"};
  return names;
}

inline EvenLattice lattice(const std::string& name) {
  if (name == "A1") return root_lattice_a(1).named(name);
  if (name == "A1(-1)") return rescale(root_lattice_a(1), -1, name);
  if (name == "A2") return root_lattice_a(2).named(name);
  if (name == "E8") return root_lattice_e8().named(name);
  if (name == "E8(-1)") return rescale(root_lattice_e8(), -1, name);
  if (name == "E8^3") {
    EvenLattice e8 = root_lattice_e8();
    return direct_sum(direct_sum(e8, e8), e8, name);
  }
  if (name == "Leech") return leech_lattice().named(name);
  if (name == "Leech(-1)") return rescale(leech_lattice(), -1, name);
  if (name == "II1,1") return hyperbolic_plane(1);
  if (name == "II1,1(2)") return hyperbolic_plane(2);
  if (name == "I2,10even") return odd_unimodular_even_sublattice(2, 10);
  if (name == "I1,19even") return odd_unimodular_even_sublattice(1, 19);
  if (name == "II1,9") return even_unimodular(1, 9);
  if (name == "II1,17") return even_unimodular(1, 17);
  if (name == "II1,25") return even_unimodular(1, 25, true);
  if (name == "II2,10") return even_unimodular(2, 10);
  if (name == "II2,26") return even_unimodular(2, 26, true);
  throw InputError("unknown lattice \"" + name + "\"");
}

/// A form with a single component on the zero class (unimodular lattices, or
/// forms that vanish off the zero class).
inline VectorValuedForm scalar_form(const EvenLattice& l, FracPowerSeries f, Rational weight) {
  DiscPtr d = make_discriminant(l);
  return VectorValuedForm(d, std::move(weight), 0, {{d->zero(), std::move(f)}});
}

/// E4^a / Delta through q^(prec - 1).
inline FracPowerSeries e4_power_over_delta(long a, const Rational& prec) {
  FracPowerSeries e4 = eisenstein(4, prec + 1);
  FracPowerSeries num = FracPowerSeries::constant(1);
  for (long i = 0; i < a; ++i) num = num * e4;
  return (num * delta(prec + 2).inverse(prec)).truncated(prec);
}

/// Frame on the last hyperbolic plane: z and z' are its two isotropic basis vectors.
inline CuspFrame hyperbolic_frame(const EvenLattice& m) {
  const std::size_t n = m.rank();
  IntegerVector z(n, 0);
  RationalVector zp(n, 0);
  z[n - 2] = 1;
  zp[n - 1] = 1;
  return CuspFrame(m, z, zp);
}

/// II_{1,8k+1} with E4^(3-k) / Delta, weight 1/2 - (8k+1)/2; the Leech model for k = 3.
inline VectorValuedForm unimodular_reflective_form(const EvenLattice& m, const Rational& prec) {
  const long bm = m.signature().second;
  if (bm != 9 && bm != 17 && bm != 25) throw DomainError("needs II1,9, II1,17 or II1,25");
  return scalar_form(m, e4_power_over_delta((25 - bm) / 8, prec), make_rational(1 - bm, 2));
}

/// Theta_{D6} / Delta on the even sublattice of I1,19, matching classes by their norms.
inline VectorValuedForm d6_reflective_form(const Rational& prec) {
  EvenLattice m = lattice("I1,19even");
  DiscPtr d = make_discriminant(m);
  DiscriminantForm dd(root_lattice_d(6));
  auto theta = theta_components(dd, prec + 1);
  FracPowerSeries inv = delta(prec + 2).inverse(prec);
  std::map<DiscElement, FracPowerSeries> comps;
  for (const auto& x : d->elements()) {
    for (const auto& y : dd.elements())
      if (dd.q(y) == d->q(x)) {
        comps[x] = (theta.at(y) * inv).truncated(prec);
        break;
      }
  }
  return VectorValuedForm(d, -9, 0, comps);
}

struct Corpus {
  // Plus-space stream whose lift is 64 Delta / E4^2, known below shimura_precision.
  std::map<long, Rational> shimura_stream = {{-3, 1},           {1, 64},         {4, -32384},
                                              {5, 131535},      {8, -4257024},   {9, 11535936}};
  long shimura_precision = 12;
  long shimura_mplus = 2;
  std::vector<Rational> shimura_lift_expected = {64, -32256, 11536128};  // b(1), b(2), b(3)

  // Form on A1(-1): 10 + O(q) on the zero class, q^(-1/4) + O(q^(3/4)) on the other.
  Rational congruence_zero_class = 10;
  Rational congruence_pole = 1;
  Rational congruence_expected_constant = 12;

  // j = q^-1 + 744 + 196884 q + ...
  std::vector<Rational> j_expected = {744, 196884};
  // eta(tau)^16 / eta(2 tau)^8
  std::vector<Rational> eta_quotient_expected = {1, -16, 112, -448};
  // Weyl vector norms on II1,9, II1,17, II1,25.
  std::vector<Rational> weyl_norm_expected = {1240, 620, 0};
  Integer leech_min_count = 196560;

  VectorValuedForm congruence_form() const {
    EvenLattice k = lattice("A1(-1)");
    DiscPtr d = make_discriminant(k);
    return VectorValuedForm(d, make_rational(-1, 2), 0,
                            {{{0}, FracPowerSeries::from_terms({{0, congruence_zero_class}}, 1)},
                             {{1}, FracPowerSeries::from_terms({{make_rational(-1, 4), congruence_pole}},
                                                               make_rational(3, 4))}});
  }
};

/// The weight -4 form on the even sublattice of I2,10 built from
/// f = 8 eta(2 tau)^8 / eta(tau)^16 and g = eta(tau / 2)^8 / eta(tau)^16:
/// f on the zero class, -f on the other classes with q = 0, f + g on the class with q = 1/2.
inline VectorValuedForm level_two_product_form(const Rational& prec) {
  FracPowerSeries inv = eta_power(1, 16, prec + 2).inverse(prec + 1);
  FracPowerSeries f = (eta_power(2, 8, prec + 2) * inv).scaled(8).truncated(prec);
  FracPowerSeries g = (eta_power(make_rational(1, 2), 8, prec + 2) * inv).truncated(prec);
  EvenLattice m = lattice("I2,10even");
  DiscPtr d = make_discriminant(m);
  std::map<DiscElement, FracPowerSeries> comps;
  for (const auto& x : d->elements())
    comps[x] = x == d->zero() ? f : d->q(x) == 0 ? f.scaled(-1) : (f + g).truncated(prec);
  return VectorValuedForm(d, -4, 0, comps);
}

/// A vector given in the orthonormal coordinates of I_{p,q}, rewritten in the
/// basis of its even sublattice.
inline RationalVector from_odd_coordinates(const std::vector<long>& v) {
  return odd_unimodular_coordinates(RationalVector(v.begin(), v.end()));
}

/// A bundled form with the frame vectors it is usually studied with (ambient coordinates).
struct BundledForm {
  std::string lattice;
  std::function<VectorValuedForm(const Rational&)> build;
  std::optional<IntegerVector> z;
  std::optional<RationalVector> zprime;
  std::optional<RationalVector> inner_z;
};

inline std::map<std::string, BundledForm> bundled_forms() {
  std::map<std::string, BundledForm> out;
  auto unimodular = [&](const std::string& name, const std::string& label) {
    const std::size_t n = name == "II1,9" ? 10 : name == "II1,17" ? 18 : 26;
    IntegerVector z(n, 0);
    RationalVector zp(n, 0);
    z[n - 2] = 1;
    zp[n - 1] = 1;
    out[name + ":" + label] = {name, [name](const Rational& p) { return unimodular_reflective_form(lattice(name), p); },
                               z, zp, std::nullopt};
  };
  unimodular("II1,9", "E4^2/Delta");
  unimodular("II1,17", "E4/Delta");
  unimodular("II1,25", "1/Delta");
  out["I1,19even:ThetaD6/Delta"] = {
      "I1,19even", [](const Rational& p) { return d6_reflective_form(p); },
      to_integer(from_odd_coordinates({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})), std::nullopt,
      std::nullopt};
  out["I2,10even:eta-quotient"] = {"I2,10even", [](const Rational& p) { return level_two_product_form(p); },
                                   to_integer(from_odd_coordinates({3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})),
                                   from_odd_coordinates({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                                   from_odd_coordinates({3, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0})};
  auto definite = [&](const std::string& name, const std::string& label, long a, long weight) {
    out[name + ":" + label] = {name, [name, a, weight](const Rational& p) {
                                 FracPowerSeries s = a < 0 ? delta(p + 2).inverse(p) : e4_power_over_delta(a, p);
                                 return scalar_form(lattice(name), s, weight);
                               },
                               std::nullopt, std::nullopt, std::nullopt};
  };
  definite("E8^3", "1/Delta", -1, -12);
  definite("Leech", "1/Delta", -1, -12);
  definite("E8(-1)", "E4^2/Delta", 2, -4);
  definite("Leech(-1)", "1/Delta", -1, -12);
  out["A1(-1):congruence"] = {"A1(-1)", [](const Rational&) { return Corpus{}.congruence_form(); }, std::nullopt,
                              std::nullopt, std::nullopt};
  return out;
}

}  // namespace thetalift::corpus
