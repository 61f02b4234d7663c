#pragma once
// Constant terms of theta pairings against a definite lattice: the
// E2-weighted term giving Weyl vector heights, vector systems, and the
// divisibility-by-24 congruences.

#include "thetalift/lattice/theta.hpp"
#include "thetalift/qseries/modular.hpp"
#include "thetalift/weilrep/vvf.hpp"

namespace thetalift {

namespace detail {

/// sum over classes g of theta_g * f_g, with theta_g = sum_{v in K+g} q^{|v^2|/2}.
inline FracPowerSeries theta_pairing(const DiscriminantForm& d, const VectorValuedForm& f) {
  if (!d.lattice().is_definite()) throw DomainError("theta pairing needs a definite lattice");
  if (f.disc()->invariants() != d.invariants()) throw InputError("form does not live on this discriminant group");
  // Only exponents up to the pole order can reach the constant term; theta
  // exponents lie in (1/2L)Z for L the level.
  Rational prec = f.pole_order() + make_rational(1, 4 * d.level());
  auto theta = theta_components(d, prec);
  FracPowerSeries sum = FracPowerSeries::zero(std::nullopt);
  for (const auto& [g, s] : f.components()) sum += theta.at(g) * s;
  return sum;
}

}  // namespace detail

/// Constant term of conj(Theta_K) F_K E2 for a negative definite K. The
/// height of the Weyl vector along z' is this value divided by 24.
inline Rational phi_negdef_constant(const DiscriminantForm& k, const VectorValuedForm& f) {
  if (k.lattice().rank() > 0 && !k.lattice().is_negative_definite())
    throw DomainError("phi_negdef_constant needs a negative definite lattice");
  if (f.is_zero()) return 0;
  FracPowerSeries pairing = detail::theta_pairing(k, f);
  return (pairing * eisenstein(2, f.pole_order() + 1)).coefficient(0);
}

struct VectorSystemReport {
  bool holds = false;
  Rational index;
  std::size_t support = 0;  // number of lambda with a nonzero coefficient
};

/// Checks sum_lambda c_lambda(lambda^2/2) (lambda, mu)^2 = -2 index mu^2 for
/// mu over a basis of K and all pairwise sums of basis vectors.
inline VectorSystemReport vector_system_check(const DiscriminantForm& k, const VectorValuedForm& f) {
  VectorSystemReport r;
  r.index = phi_negdef_constant(k, f) / 24;
  const EvenLattice& l = k.lattice();
  const std::size_t n = l.rank();
  std::vector<std::pair<RationalVector, Rational>> terms;  // (G lambda, coefficient)
  for_each_dual_vector(l, f.pole_order(), [&](const std::vector<long>& y, const RationalVector& x, const Rational& h) {
    if (h == 0) return;
    Rational c = f.coefficient(k.class_of(x), -h);
    if (c != 0) terms.emplace_back(RationalVector(y.begin(), y.end()), c);
  });
  r.support = terms.size();
  // Second moments in the dual coordinates: (lambda, e_i) = y_i.
  RatMatrix moment(n, n);
  for (const auto& [y, c] : terms)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) moment(i, j) += c * y[i] * y[j];
  r.holds = true;
  for (std::size_t i = 0; i < n && r.holds; ++i)
    for (std::size_t j = i; j < n && r.holds; ++j) {
      // mu = e_i (i == j) or e_i + e_j.
      Rational lhs = i == j ? moment(i, i) : moment(i, i) + 2 * moment(i, j) + moment(j, j);
      Rational mu2 = i == j ? Rational(l.gram()(i, i)) : Rational(l.gram()(i, i) + 2 * l.gram()(i, j) + l.gram()(j, j));
      if (lhs != -2 * r.index * mu2) r.holds = false;
    }
  return r;
}

struct CongruenceReport {
  Integer ideal;      // generator of the ideal spanned by inner products in K
  Rational constant;  // constant term of conj(Theta_K) F
  Rational product;   // ideal * constant
  bool divisible = false;
};

inline CongruenceReport congruence_check(const DiscriminantForm& k, const VectorValuedForm& f) {
  CongruenceReport r;
  const IntMatrix& g = k.lattice().gram();
  r.ideal = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) r.ideal = gcd(r.ideal, g(i, j));
  r.constant = f.is_zero() ? Rational(0) : detail::theta_pairing(k, f).coefficient(0);
  r.product = Rational(r.ideal) * r.constant;
  r.divisible = is_integral(r.product / 24);
  return r;
}

}  // namespace thetalift
