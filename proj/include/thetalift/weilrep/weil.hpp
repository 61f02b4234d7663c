#pragma once
// The Weil representation of Mp2(Z) on C[L'/L], with exact matrices over a
// cyclotomic field, and the Milgram formula.

#include <cmath>
#include <complex>

#include "thetalift/arith/cyclotomic.hpp"
#include "thetalift/lattice/discriminant.hpp"

namespace thetalift {

using CycMatrix = Matrix<CyclotomicNumber>;

/// sum over x in L'/L of e(q(x)).
inline CyclotomicNumber gauss_sum(const DiscriminantForm& d) {
  const long order = d.level();
  std::vector<Integer> counts(static_cast<std::size_t>(order), 0);
  for (const auto& x : d.elements()) {
    Rational qx = d.q(x) * order;
    counts[static_cast<std::size_t>(to_long(qx))] += 1;
  }
  return CyclotomicNumber::from_exponent_counts(order, std::move(counts));
}

struct MilgramReport {
  bool squared_identity = false;  // g^2 = |D| e(sig / 4), exact
  bool phase_identity = false;    // g = sqrt|D| e(sig / 8), floating point tiebreak
  bool holds() const { return squared_identity && phase_identity; }
};

inline MilgramReport milgram_check(const DiscriminantForm& d) {
  MilgramReport r;
  CyclotomicNumber g = gauss_sum(d);
  const int sig = d.lattice().signature_difference();
  const long size = static_cast<long>(d.order());
  r.squared_identity = g * g == e(make_rational(sig, 4)).scaled(size);
  std::complex<double> expected =
      std::sqrt(static_cast<double>(size)) * std::polar(1.0, 2 * std::numbers::pi * sig / 8.0);
  r.phase_identity = std::abs(g.numeric() - expected) < 1e-9 * std::max(1.0, std::sqrt(static_cast<double>(size)));
  return r;
}

struct WeilRepresentation {
  DiscPtr disc;
  std::vector<CyclotomicNumber> t_diagonal;  // T e_x = e(q(x)) e_x
  CycMatrix s;                               // S[y][x]: coefficient of e_y in S e_x
  CycMatrix z;                               // Z = S^2
  CycMatrix t() const {
    CycMatrix m(t_diagonal.size(), t_diagonal.size());
    for (std::size_t i = 0; i < t_diagonal.size(); ++i) m(i, i) = t_diagonal[i];
    return m;
  }
};

/// Builds S e_x = c sum_y e(-(x, y)) e_y with c = conj(gauss sum) / |D|,
/// which equals e((b^- - b^+) / 8) / sqrt|D| by the Milgram formula.
inline WeilRepresentation weil_representation(DiscPtr d) {
  WeilRepresentation w;
  w.disc = d;
  const auto& els = d->elements();
  const std::size_t n = els.size();
  CyclotomicNumber c = gauss_sum(*d).conj().scaled(Rational(1) / Rational(static_cast<long>(n)));
  for (const auto& x : els) w.t_diagonal.push_back(e(d->q(x)));
  w.s = CycMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.s(i, j) = c * e(-d->bilinear(els[i], els[j]));
  w.z = w.s * w.s;
  return w;
}

struct WeilRelations {
  bool s_squared_is_z = false;
  bool st_cubed_is_z = false;
  bool z_fourth_is_identity = false;
  bool z_acts_by_negation = false;  // Z e_x = i^(b^- - b^+) e_-x
  bool s_unitary = false;
  bool all() const { return s_squared_is_z && st_cubed_is_z && z_fourth_is_identity && z_acts_by_negation && s_unitary; }
};

inline WeilRelations check_relations(const WeilRepresentation& w) {
  WeilRelations r;
  const std::size_t n = w.t_diagonal.size();
  const auto& d = *w.disc;
  CycMatrix t = w.t();
  CycMatrix s2 = w.s * w.s;
  CycMatrix st = w.s * t;
  CycMatrix st3 = st * st * st;
  r.s_squared_is_z = s2 == w.z;
  r.st_cubed_is_z = st3 == w.z;
  CycMatrix z2 = w.z * w.z;
  r.z_fourth_is_identity = z2 * z2 == CycMatrix::identity(n);
  auto [bp, bm] = d.signature();
  CyclotomicNumber phase = e(make_rational(bm - bp, 4));
  CycMatrix expected_z(n, n);
  for (std::size_t i = 0; i < n; ++i) expected_z(d.index_of(d.negate(d.elements()[i])), i) = phase;
  r.z_acts_by_negation = w.z == expected_z;
  CycMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = w.s(j, i).conj();
  r.s_unitary = w.s * adj == CycMatrix::identity(n);
  return r;
}

}  // namespace thetalift
