#pragma once
// Theta series of definite lattices and of their dual cosets.

#include <map>

#include "thetalift/lattice/discriminant.hpp"
#include "thetalift/lattice/enumerate.hpp"
#include "thetalift/qseries/series.hpp"

namespace thetalift {

namespace detail {

inline void require_definite(const EvenLattice& l) {
  if (!l.is_definite()) throw DomainError("theta series need a definite lattice");
}

inline Rational definite_sign(const EvenLattice& l) { return l.is_negative_definite() && l.rank() > 0 ? -1 : 1; }

}  // namespace detail

/// Calls visit(dual_coords, lattice_coords, half_abs_norm) for every v in L'
/// with |v^2|/2 <= bound. dual_coords are the coefficients in the dual basis.
template <class Visit>
void for_each_dual_vector(const EvenLattice& l, const Rational& bound, Visit&& visit, bool strict = false) {
  detail::require_definite(l);
  const Rational sign = detail::definite_sign(l);
  RatMatrix ginv = l.inverse_gram();
  RatMatrix form(l.rank(), l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) form(i, j) = sign * ginv(i, j);
  for_each_short_vector(form, 2 * bound, [&](const std::vector<long>& y, const Rational& value) {
    RationalVector yr(y.begin(), y.end());
    visit(y, mat_vec(ginv, yr), value / 2);
  }, strict);
}

/// sum over v in L' of q^{|v^2|/2}, split by class in L'/L, to O(q^prec).
inline std::map<DiscElement, FracPowerSeries> theta_components(const DiscriminantForm& d, const Rational& prec) {
  const EvenLattice& l = d.lattice();
  std::map<DiscElement, std::map<Rational, Rational>> acc;
  if (d.order() == 1) {
    // Unimodular: count by norm without coordinates.
    detail::require_definite(l);
    RatMatrix form = l.rational_gram();
    Rational sign = detail::definite_sign(l);
    for (std::size_t i = 0; i < l.rank(); ++i)
      for (std::size_t j = 0; j < l.rank(); ++j) form(i, j) *= sign;
    for (const auto& [v, c] : count_short_vectors(form, 2 * prec, true)) acc[d.zero()][v / 2] += Rational(c);
  } else {
    for_each_dual_vector(
        l, prec, [&](const std::vector<long>&, const RationalVector& x, const Rational& h) { acc[d.class_of(x)][h] += 1; },
        true);
  }
  std::map<DiscElement, FracPowerSeries> out;
  for (const auto& g : d.elements()) out[g] = FracPowerSeries::from_terms(acc[g], prec);
  return out;
}

/// Theta series of the coset gamma + L (gamma a dual vector in lattice coordinates).
inline FracPowerSeries theta_series(const EvenLattice& l, const RationalVector& coset, const Rational& prec) {
  DiscriminantForm d(l);
  DiscElement g = d.class_of(coset);
  if (d.order() == 1) return theta_components(d, prec).at(g);
  std::map<Rational, Rational> acc;
  for_each_dual_vector(
      l, prec,
      [&](const std::vector<long>&, const RationalVector& x, const Rational& h) {
        if (d.class_of(x) == g) acc[h] += 1;
      },
      true);
  return FracPowerSeries::from_terms(acc, prec);
}

inline FracPowerSeries theta_series(const EvenLattice& l, const Rational& prec) {
  return theta_series(l, RationalVector(l.rank(), 0), prec);
}

}  // namespace thetalift
