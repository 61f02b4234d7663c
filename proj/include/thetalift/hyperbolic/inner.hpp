#pragma once
// (lambda, rho) for a primitive norm 2 vector lambda as the constant term of
// -F G1 Theta_{M,lambda}, where Theta_{M,lambda} collects the theta series of
// lambda^perp-cosets graded by (v, lambda) mod 2.

#include "thetalift/hyperbolic/weyl.hpp"
#include "thetalift/qseries/zagier.hpp"

namespace thetalift {

/// Components theta_{d, j} = sum q^{-v_perp^2/2} over v in M + d with
/// (v, lambda) = j, 0 <= j < 2N (one representative per coset of Z lambda).
inline std::map<std::pair<DiscElement, long>, FracPowerSeries> graded_theta(const EvenLattice& m,
                                                                           const RationalVector& lambda,
                                                                           const Rational& prec) {
  const Rational l2 = m.norm(lambda);
  if (l2 <= 0) throw DomainError("grading vector must have positive norm");
  if (!is_integral(lambda)) throw DomainError("grading vector must lie in the lattice");
  const Rational two_n = l2;
  const std::size_t n = m.rank();
  const RatMatrix ginv = m.inverse_gram();
  // v = G^-1 y, (v, lambda) = y . lambda, -v^2 + (v, lambda)^2 / N = -v_perp^2 + (v, lambda)^2 / 2N.
  RatMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form(i, j) = -ginv(i, j) + 2 * lambda[i] * lambda[j] / two_n;
  const Rational top = two_n - 1;
  const Rational bound = 2 * prec + top * top / two_n;
  const DiscriminantForm d(m);
  std::map<std::pair<DiscElement, long>, std::map<Rational, Rational>> acc;
  for_each_short_vector(form, bound, [&](const std::vector<long>& y, const Rational& value) {
    Rational j = 0;
    for (std::size_t i = 0; i < n; ++i) j += lambda[i] * y[i];
    if (j < 0 || j >= two_n) return;
    Rational h = (value - j * j / two_n) / 2;
    if (h >= prec) return;
    RationalVector v = mat_vec(ginv, RationalVector(y.begin(), y.end()));
    acc[{d.class_of(v), to_long(j)}][h] += 1;
  });
  std::map<std::pair<DiscElement, long>, FracPowerSeries> out;
  for (const auto& g : d.elements())
    for (long j = 0; Rational(j) < two_n; ++j) out[{g, j}] = FracPowerSeries::from_terms(acc[{g, j}], prec);
  return out;
}

/// Constant term of -F G1 Theta_{M,lambda} for lambda primitive in M of norm 2.
inline Rational weyl_inner_product(const EvenLattice& m, const VectorValuedForm& f, const RationalVector& lambda) {
  require_lorentzian(m);
  if (!is_integral(lambda)) throw DomainError("lambda must lie in the lattice");
  Integer g = 0;
  for (const auto& c : lambda) g = gcd(g, Integer(c.get_num()));
  if (g != 1) throw DomainError("lambda must be primitive");
  if (m.norm(lambda) != 2) throw DomainError("only norm 2 vectors (N = 1) are supported");
  // G1 has no poles, so theta exponents beyond the pole order of F never reach the constant term.
  const Rational prec = f.pole_order() + make_rational(1, 16 * f.disc()->level());
  auto theta = graded_theta(m, lambda, prec);
  VectorValuedForm g1 = zagier_g1(prec);
  FracPowerSeries sum = FracPowerSeries::zero(std::nullopt);
  for (const auto& [key, th] : theta) {
    const FracPowerSeries& fd = f.component(key.first);
    if (fd.empty() && fd.is_exact()) continue;
    sum += fd * g1.component(DiscElement{key.second}) * th;
  }
  return -sum.coefficient(0);
}

}  // namespace thetalift
