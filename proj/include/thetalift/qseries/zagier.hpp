#pragma once
// Zagier's weight 3/2 Eisenstein series split into its two components on the
// discriminant form of A1(-1): e0 = sum H(4n) q^n, e1 = sum H(4n - 1) q^(n - 1/4).

#include "thetalift/lattice/constructors.hpp"
#include "thetalift/qseries/modular.hpp"
#include "thetalift/weilrep/vvf.hpp"

namespace thetalift {

inline VectorValuedForm zagier_g1(const Rational& prec) {
  if (prec <= 0) throw DomainError("precision must be positive");
  const long nmax = to_long(ceil_of(prec));
  auto h = hurwitz_class_numbers(4 * nmax);
  std::map<Rational, Rational> even, odd;
  for (long n = 0; n <= nmax; ++n) {
    even[Rational(n)] = h[static_cast<std::size_t>(4 * n)];
    if (n >= 1) odd[Rational(n) - make_rational(1, 4)] = h[static_cast<std::size_t>(4 * n - 1)];
  }
  DiscPtr d = make_discriminant(rescale(root_lattice_a(1), -1));
  std::map<DiscElement, FracPowerSeries> comps;
  comps[DiscElement{0}] = FracPowerSeries::from_terms(even, prec);
  comps[DiscElement{1}] = FracPowerSeries::from_terms(odd, prec);
  return VectorValuedForm(d, make_rational(3, 2), 0, comps);
}

}  // namespace thetalift
