#pragma once
// Standard lattices: root lattices, hyperbolic planes, the Leech lattice,
// even sublattices of odd unimodular lattices, sums and rescalings.

#include <set>
#include <string>
#include <vector>

#include "thetalift/lattice/lattice.hpp"

namespace thetalift {

inline EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b, std::string name = {}) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  if (name.empty()) name = a.name() + "+" + b.name();
  return EvenLattice(g, name);
}

/// L(k): the Gram matrix multiplied by k (k may be negative).
inline EvenLattice rescale(const EvenLattice& l, long k, std::string name = {}) {
  if (k == 0) throw DomainError("rescaling by zero");
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= k;
  if (name.empty()) name = l.name() + "(" + std::to_string(k) + ")";
  return EvenLattice(g, name);
}

inline EvenLattice root_lattice_a(std::size_t n) {
  if (n == 0) throw DomainError("A_n needs n >= 1");
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return EvenLattice(g, "A" + std::to_string(n));
}

/// D_n in the basis e_i - e_{i+1} (i < n), e_{n-1} + e_n.
inline IntMatrix d_type_basis(std::size_t n) {
  IntMatrix b(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b(i, i) = 1;
    b(i, i + 1) = -1;
  }
  if (n >= 2) {
    b(n - 1, n - 2) = 1;
    b(n - 1, n - 1) = 1;
  } else {
    b(0, 0) = 2;
  }
  return b;
}

inline EvenLattice root_lattice_d(std::size_t n) {
  if (n < 2) throw DomainError("D_n needs n >= 2");
  IntMatrix b = d_type_basis(n);
  return EvenLattice(b * b.transpose(), "D" + std::to_string(n));
}

inline EvenLattice root_lattice_e8() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  auto link = [&](std::size_t a, std::size_t b) { g(a - 1, b - 1) = g(b - 1, a - 1) = -1; };
  link(1, 3);
  link(3, 4);
  link(4, 5);
  link(5, 6);
  link(6, 7);
  link(7, 8);
  link(2, 4);
  return EvenLattice(g, "E8");
}

/// The hyperbolic plane with Gram [[0, k], [k, 0]].
inline EvenLattice hyperbolic_plane(long k = 1) {
  IntMatrix g(2, 2);
  g(0, 1) = g(1, 0) = k;
  return EvenLattice(g, k == 1 ? "II1,1" : "II1,1(" + std::to_string(k) + ")");
}

/// Binary extended Golay code, as a generator matrix of 12 rows of length 24.
inline std::vector<std::vector<int>> golay_code_generators() {
  const std::set<int> residues{0, 1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18};  // {0} and squares mod 23
  std::vector<std::vector<int>> rows;
  for (int shift = 0; shift < 23; ++shift) {
    std::vector<int> w(24, 0);
    int weight = 0;
    for (int r : residues) {
      w[static_cast<std::size_t>((r + shift) % 23)] = 1;
      ++weight;
    }
    w[23] = weight % 2;
    rows.push_back(w);
  }
  rows.emplace_back(24, 1);
  return rows;
}

/// The Leech lattice: vectors (1/sqrt 8) x with x built from the Golay code.
inline EvenLattice leech_lattice() {
  std::vector<std::vector<Integer>> gens;
  for (const auto& c : golay_code_generators()) {
    std::vector<Integer> v(24);
    for (std::size_t i = 0; i < 24; ++i) v[i] = 2 * c[i];
    gens.push_back(v);
  }
  for (std::size_t i = 1; i < 24; ++i) {
    std::vector<Integer> v(24, 0);
    v[0] = 4;
    v[i] = 4;
    gens.push_back(v);
    v[i] = -4;
    gens.push_back(v);
  }
  std::vector<Integer> odd(24, 1);
  odd[0] = -3;
  gens.push_back(odd);
  IntMatrix basis = hermite_basis(IntMatrix::from_rows(gens));
  if (basis.rows() != 24) throw std::logic_error("Leech construction lost rank");
  IntMatrix g = basis * basis.transpose();
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) {
      if (g(i, j) % 8 != 0) throw std::logic_error("Leech construction is not integral");
      g(i, j) /= 8;
    }
  return EvenLattice(g, "Leech");
}

/// The even sublattice of I_{p,q} = Z^{p+q} with form diag(+1^p, -1^q),
/// in the D-type basis. Coordinates of a vector of Z^{p+q} in this basis are
/// given by odd_unimodular_coordinates.
inline EvenLattice odd_unimodular_even_sublattice(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  if (n < 2) throw DomainError("even sublattice of I_{p,q} needs p + q >= 2");
  IntMatrix b = d_type_basis(n);
  IntMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i) form(i, i) = i < p ? 1 : -1;
  return EvenLattice(b * form * b.transpose(), "I" + std::to_string(p) + "," + std::to_string(q) + "even");
}

/// Coordinates of x in Q^{p+q} with respect to the D-type basis.
inline RationalVector odd_unimodular_coordinates(const RationalVector& x) {
  IntMatrix b = d_type_basis(x.size());
  return solve_left(to_rational(b), x);
}

/// The even unimodular lattice II_{p,q} (p <= q, q - p = 0 mod 8) as
/// p hyperbolic planes preceded by (q - p) / 8 copies of E8(-1). For q - p = 24
/// with leech = true the negative definite part is Leech(-1).
inline EvenLattice even_unimodular(std::size_t p, std::size_t q, bool leech = false) {
  if (p > q || (q - p) % 8 != 0 || p == 0) throw DomainError("II_{p,q} needs 1 <= p <= q and q - p = 0 mod 8");
  EvenLattice l;
  std::string name = "II" + std::to_string(p) + "," + std::to_string(q);
  if (leech) {
    if (q - p != 24) throw DomainError("the Leech model of II_{p,q} needs q - p = 24");
    l = rescale(leech_lattice(), -1);
  } else {
    for (std::size_t k = 0; k < (q - p) / 8; ++k) l = direct_sum(l, rescale(root_lattice_e8(), -1));
  }
  for (std::size_t k = 0; k < p; ++k) l = direct_sum(l, hyperbolic_plane());
  return l.named(name);
}

}  // namespace thetalift
