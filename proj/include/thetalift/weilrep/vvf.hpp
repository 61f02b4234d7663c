#pragma once
// Vector-valued modular forms of type rho_L: one truncated q-series per element
// of the discriminant group.

#include <map>
#include <string>
#include <vector>

#include "thetalift/lattice/discriminant.hpp"
#include "thetalift/qseries/series.hpp"

namespace thetalift {

class VectorValuedForm {
 public:
  VectorValuedForm() = default;

  /// Missing components are the exact zero series.
  VectorValuedForm(DiscPtr disc, Rational weight_plus, Rational weight_minus,
                   std::map<DiscElement, FracPowerSeries> components, int parity_plus = 0, int parity_minus = 0)
      : disc_(std::move(disc)),
        weight_plus_(std::move(weight_plus)),
        weight_minus_(std::move(weight_minus)),
        parity_plus_(parity_plus),
        parity_minus_(parity_minus) {
    if (!disc_) throw DomainError("vector-valued form without a discriminant form");
    for (auto& [x, f] : components) {
      if (!disc_->contains(x)) throw InputError("component index is not an element of the discriminant group");
      components_.emplace(x, std::move(f));
    }
  }

  const DiscPtr& disc() const { return disc_; }
  const Rational& weight_plus() const { return weight_plus_; }
  const Rational& weight_minus() const { return weight_minus_; }
  int parity_plus() const { return parity_plus_; }
  int parity_minus() const { return parity_minus_; }
  const std::map<DiscElement, FracPowerSeries>& components() const { return components_; }

  const FracPowerSeries& component(const DiscElement& x) const {
    static const FracPowerSeries zero;
    auto it = components_.find(x);
    return it == components_.end() ? zero : it->second;
  }

  /// c_x(n); throws PrecisionError when n is beyond the component's truncation.
  Rational coefficient(const DiscElement& x, const Rational& n) const { return component(x).coefficient(n); }

  /// max(0, -(smallest exponent with a nonzero coefficient)).
  Rational pole_order() const {
    Rational a = 0;
    for (const auto& [x, f] : components_)
      if (auto v = f.valuation(); v && -*v > a) a = -*v;
    return a;
  }

  /// Smallest truncation over all components (nullopt if every component is exact).
  std::optional<Rational> precision() const {
    std::optional<Rational> p;
    for (const auto& [x, f] : components_) p = FracPowerSeries::min_trunc(p, f.truncation());
    return p;
  }

  bool is_zero() const {
    for (const auto& [x, f] : components_)
      if (!f.empty()) return false;
    return true;
  }

  VectorValuedForm with_weight(Rational plus, Rational minus) const {
    VectorValuedForm f = *this;
    f.weight_plus_ = std::move(plus);
    f.weight_minus_ = std::move(minus);
    return f;
  }

 private:
  DiscPtr disc_;
  Rational weight_plus_ = 0;
  Rational weight_minus_ = 0;
  int parity_plus_ = 0;
  int parity_minus_ = 0;
  std::map<DiscElement, FracPowerSeries> components_;
};

/// Structural checks: exponents of f_x lie in q(x) + Z, and
/// f_{-x} = (-1)^(m+ + m-) f_x on the common precision.
inline std::vector<std::string> validate_vvf(const VectorValuedForm& f) {
  std::vector<std::string> problems;
  const auto& d = *f.disc();
  auto name = [](const DiscElement& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  };
  for (const auto& [x, s] : f.components()) {
    const Rational qx = d.q(x);
    for (const auto& [exp, c] : s.terms())
      if (!is_integral(exp - qx))
        problems.push_back("component " + name(x) + " has exponent " + exp.get_str() + " not congruent to q = " +
                           qx.get_str() + " mod 1");
  }
  const int sign = (f.parity_plus() + f.parity_minus()) % 2 == 0 ? 1 : -1;
  for (const auto& x : d.elements()) {
    DiscElement nx = d.negate(x);
    if (nx < x) continue;
    const auto& a = f.component(x);
    const auto& b = f.component(nx).scaled(sign);
    if (!a.agrees_with(b)) problems.push_back("components " + name(x) + " and " + name(nx) + " violate the symmetry under x -> -x");
  }
  return problems;
}

/// For D = (Z/2)^2 with q values (0, 0, 0, 1/2) (the discriminant form of a
/// hyperbolic plane scaled by 2): lifts a scalar form f = sum c(n) q^n on
/// Gamma0(2) with c(0) = 0 to the vector-valued form with components
///   f_00 = f + sum c(2n) q^n,  f_10 = f_01 = sum c(2n) q^n,  f_11 = sum_{n odd} c(n) q^(n/2).
inline VectorValuedForm gamma0_prime_split(DiscPtr d, const FracPowerSeries& f, const Rational& weight_plus,
                                           const Rational& weight_minus) {
  if (d->invariants() != std::vector<long>{2, 2}) throw DomainError("gamma0_prime_split needs a discriminant group (Z/2)^2");
  if (f.coefficient(0) != 0) throw DomainError("gamma0_prime_split needs a vanishing constant term");
  std::map<Rational, Rational> even, odd;
  for (const auto& [e, c] : f.terms()) {
    if (!is_integral(e)) throw DomainError("gamma0_prime_split needs integral exponents");
    Integer n(e.get_num());
    (n % 2 == 0 ? even : odd)[e / 2] = c;
  }
  std::optional<Rational> half;
  if (f.truncation()) half = *f.truncation() / 2;
  FracPowerSeries ev = FracPowerSeries::from_terms(even, half);
  FracPowerSeries od = FracPowerSeries::from_terms(odd, half);
  std::map<DiscElement, FracPowerSeries> comps;
  int half_count = 0;
  for (const auto& x : d->elements()) {
    if (x == d->zero()) comps[x] = f + ev;
    else if (d->q(x) == 0) comps[x] = ev;
    else if (d->q(x) == make_rational(1, 2)) {
      comps[x] = od;
      ++half_count;
    } else
      throw DomainError("gamma0_prime_split needs q values 0, 0, 0, 1/2");
  }
  if (half_count != 1) throw DomainError("gamma0_prime_split needs exactly one element with q = 1/2");
  return VectorValuedForm(d, weight_plus, weight_minus, comps);
}

}  // namespace thetalift
