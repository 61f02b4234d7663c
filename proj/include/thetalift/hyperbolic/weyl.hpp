#pragma once
// Weyl vectors of Lorentzian lattices (signature (1, b-)) attached to a cusp
// frame and a chamber witness, wall crossing, and the piecewise linear
// function v -> (rho(W(v)), v).

#include <functional>
#include <string>

#include "thetalift/hyperbolic/definite.hpp"
#include "thetalift/lattice/frame.hpp"
#include "thetalift/weilrep/reduce.hpp"

namespace thetalift {

/// Whether lambda = 0 enters the z-component sum (with half weight, since it
/// is its own partner under lambda -> -lambda).
enum class BoundaryConvention { included, excluded };

inline std::string to_string(BoundaryConvention c) {
  return c == BoundaryConvention::included ? "boundary-included" : "boundary-excluded";
}

inline BoundaryConvention parse_convention(const std::string& s) {
  if (s == "boundary-included") return BoundaryConvention::included;
  if (s == "boundary-excluded") return BoundaryConvention::excluded;
  throw InputError("unknown convention '" + s + "'");
}

/// A vector lambda of K' (as a vector of U, in ambient coordinates) together
/// with the nonzero coefficients c_delta(lambda^2/2) of its lifts
/// delta = lambda + t z, 0 <= t < 1.
struct ReducedTerm {
  RationalVector lambda;
  Rational half_norm;
  std::vector<std::pair<Rational, Rational>> lifts;  // (t, coefficient)
  bool has_trivial_lift() const { return !lifts.empty() && lifts.front().first == 0; }
  Rational trivial_lift_coefficient() const { return has_trivial_lift() ? lifts.front().second : Rational(0); }
};

/// All lambda in K' with lambda^2/2 >= -(pole order of F) carrying a nonzero coefficient.
inline std::vector<ReducedTerm> reduced_terms(const CuspFrame& frame, const VectorValuedForm& f) {
  const EvenLattice& k = frame.reduced_lattice();
  if (k.rank() > 0 && !k.is_negative_definite()) throw DomainError("reduced lattice is not negative definite");
  std::vector<ReducedTerm> out;
  const DiscriminantForm& d = *frame.disc();
  for_each_dual_vector(k, f.pole_order(), [&](const std::vector<long>&, const RationalVector& x, const Rational& h) {
    ReducedTerm t;
    t.lambda = frame.from_reduced(x);
    t.half_norm = -h;
    for (const Rational& s : frame.lift_offsets(t.lambda)) {
      Rational c = f.coefficient(d.class_of(t.lambda + s * frame.z_rational()), t.half_norm);
      if (c != 0) t.lifts.emplace_back(s, c);
    }
    if (!t.lifts.empty()) out.push_back(std::move(t));
  });
  return out;
}

struct WeylVector {
  RationalVector rho_k;  // component in U, ambient coordinates
  Rational rho_zprime;
  Rational rho_z;
  RationalVector vector;  // rho_k + rho_zprime z' + rho_z z
  Rational norm;
  RationalVector witness;  // projection of the chamber witness to U
  BoundaryConvention convention = BoundaryConvention::included;
};

inline void require_lorentzian(const EvenLattice& m) {
  if (!m.is_lorentzian()) throw DomainError("lattice must have signature (1, n) with n >= 1");
}

/// A witness in U (ambient coordinates) that pairs nonzero with every
/// relevant lambda: sum of B^i times the i-th basis vector of K, with B
/// larger than twice every dual coordinate that occurs.
inline RationalVector default_witness(const CuspFrame& frame, const VectorValuedForm& f) {
  const EvenLattice& k = frame.reduced_lattice();
  Integer b = 1;
  for_each_dual_vector(k, f.pole_order(), [&](const std::vector<long>& y, const RationalVector&, const Rational&) {
    for (long v : y) b = std::max(b, Integer(2 * std::labs(v) + 1));
  });
  RationalVector coeffs(k.rank());
  Integer p = 1;
  for (std::size_t i = 0; i < k.rank(); ++i, p *= b) coeffs[i] = Rational(p);
  return frame.from_reduced(coeffs);
}

/// The Weyl vector of the chamber whose closure contains z and which meets
/// every neighbourhood of z in the direction of the witness (projected to U).
inline WeylVector weyl_vector(const CuspFrame& frame, const VectorValuedForm& f, const RationalVector& witness,
                              BoundaryConvention convention = BoundaryConvention::included) {
  const EvenLattice& m = frame.lattice();
  require_lorentzian(m);
  WeylVector w;
  w.convention = convention;
  w.witness = frame.project(witness);
  w.rho_k.assign(m.rank(), 0);
  VectorValuedForm fk = reduce_to_smaller(frame, f);
  w.rho_zprime = phi_negdef_constant(*frame.reduced_disc(), fk) / 24;
  Rational zsum = 0;
  for (const auto& t : reduced_terms(frame, f)) {
    Rational weight;
    if (is_zero(t.lambda)) {
      weight = convention == BoundaryConvention::included ? make_rational(1, 2) : Rational(0);
    } else {
      Rational s = m.inner(t.lambda, w.witness);
      if (s == 0) throw DomainError("chamber witness is orthogonal to a vector with a nonzero coefficient");
      weight = s > 0 ? 1 : 0;
    }
    if (weight == 0) continue;
    if (t.has_trivial_lift()) w.rho_k = w.rho_k - (weight * t.trivial_lift_coefficient() / 2) * t.lambda;
    for (const auto& [s, c] : t.lifts) zsum += weight * c * periodic_bernoulli(2, s);
  }
  w.rho_z = -w.rho_zprime * frame.zprime_norm() / 2 + zsum / 2;
  w.vector = w.rho_k + w.rho_zprime * frame.zprime() + w.rho_z * frame.z_rational();
  w.norm = m.norm(w.vector);
  return w;
}

/// A point of the chamber designated by the witness: s mu + z' + n0 z, with
/// s small enough that no wall through z separates it from the witness
/// direction, and n0 large enough that no wall avoiding z separates it from z.
inline RationalVector chamber_base_point(const CuspFrame& frame, const VectorValuedForm& f,
                                         const RationalVector& witness) {
  const EvenLattice& m = frame.lattice();
  RationalVector mu = frame.project(witness);
  const Rational a = f.pole_order();
  Rational s = 1;
  bool walls_through_z = false;
  for (const auto& t : reduced_terms(frame, f)) {
    if (is_zero(t.lambda)) continue;
    walls_through_z = true;
    Rational p = m.inner(t.lambda, mu);
    if (p == 0) throw DomainError("chamber witness is orthogonal to a vector with a nonzero coefficient");
    Rational eps = 1;
    for (const auto& [off, c] : t.lifts)
      if (off != 0) eps = std::min({eps, off, Rational(Rational(1) - off)});
    Rational absp = p < 0 ? Rational(-p) : p;
    s = std::min(s, Rational(eps / (2 * absp)));
  }
  // Without walls through z the offset along mu is not needed.
  if (!walls_through_z) s = 0;
  Rational mu2 = m.norm(mu);
  // Keep s^2 |mu^2| below 1 so the base point stays close to the cusp.
  Rational abs_mu2 = mu2 < 0 ? Rational(-mu2) : mu2;
  Integer root = sqrt(Integer(floor_of(abs_mu2)));
  s = std::min(s, Rational(Rational(1) / Rational(root + 1)));
  Rational zp2 = frame.zprime_norm();
  Rational n0(ceil_of(a + (zp2 < 0 ? Rational(-zp2) : zp2) / 2 + s * s * abs_mu2 / 2 + 1));
  return s * mu + frame.zprime() + n0 * frame.z_rational();
}

struct Wall {
  RationalVector root;  // in M', positive on the starting side
  Rational coefficient;  // c_root(root^2/2)
};

struct WallSearch {
  std::vector<Wall> crossed;  // (root, from) > 0 > (root, to)
  std::vector<Wall> through;  // (root, from) > 0 = (root, to)
};

/// Walls r^perp (r in M', r^2 < 0, c_r(r^2/2) != 0) separating two points of
/// the positive cone. Every such r has bounded majorant 2(r,u)^2/u^2 - r^2
/// for u = from + to, which makes the search a finite enumeration.
/// Enumeration bound on the majorant used by separating_walls, for pole order a.
inline Rational wall_search_bound(const EvenLattice& m, const Rational& a, const RationalVector& from,
                                  const RationalVector& to) {
  const Rational aa = m.norm(from), bb = m.norm(to), cc = m.inner(from, to);
  if (aa <= 0 || bb <= 0) throw DomainError("wall search needs points of positive norm");
  if (cc <= 0) throw DomainError("points lie in opposite cones");
  Rational spread = cc * cc - aa * bb;
  if (spread < 0) spread = 0;
  return 2 * a + 4 * a * spread / (std::min(aa, bb) * m.norm(from + to));
}

inline WallSearch separating_walls(const EvenLattice& m, const VectorValuedForm& f, const RationalVector& from,
                                   const RationalVector& to) {
  WallSearch out;
  const Rational a = f.pole_order();
  if (a == 0) return out;
  const Rational bound = wall_search_bound(m, a, from, to);
  const RationalVector u = from + to;
  const Rational u2 = m.norm(u);
  const RatMatrix ginv = m.inverse_gram();
  const RationalVector gu = mat_vec(m.gram(), u);
  const std::size_t n = m.rank();
  // r = G^-1 y with y integral: (r, u) = y . u and r^2 = y^T G^-1 y.
  RatMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form(i, j) = 2 * u[i] * u[j] / u2 - ginv(i, j);
  const DiscriminantForm d(m);
  for_each_short_vector(form, bound, [&](const std::vector<long>& y, const Rational&) {
    RationalVector r = mat_vec(ginv, RationalVector(y.begin(), y.end()));
    Rational r2 = m.norm(r);
    if (r2 >= 0 || r2 < -2 * a) return;
    Rational alpha = m.inner(r, from);
    if (alpha <= 0) return;
    Rational beta = m.inner(r, to);
    if (beta > 0) return;
    Rational c = f.coefficient(d.class_of(r), r2 / 2);
    if (c == 0) return;
    (beta < 0 ? out.crossed : out.through).push_back({std::move(r), c});
  });
  return out;
}

/// rho(W(to)) from rho(W(from)): each crossed wall r (positive on the
/// starting side) adds c_r(r^2/2) r.
inline RationalVector transport(const EvenLattice& m, const VectorValuedForm& f, const RationalVector& rho_from,
                                const RationalVector& from, const RationalVector& to) {
  WallSearch ws = separating_walls(m, f, from, to);
  if (!ws.through.empty()) throw DomainError("target point lies on a wall");
  RationalVector rho = rho_from;
  for (const auto& w : ws.crossed) rho = rho + w.coefficient * w.root;
  return rho;
}

/// rho(W1) - rho(W2) for adjacent chambers separated by the wall lambda0^perp,
/// with `side` a point of W1: minus the sum of c_lambda(lambda^2/2) lambda over
/// the multiples lambda of lambda0 in M' that are positive on W1.
inline RationalVector wall_crossing_delta(const EvenLattice& m, const VectorValuedForm& f,
                                          const RationalVector& lambda0, const RationalVector& side) {
  Rational n0 = m.norm(lambda0);
  if (n0 >= 0) throw DomainError("wall vector must have negative norm");
  RationalVector y = mat_vec(m.gram(), lambda0);
  Integer den = common_denominator(y);
  Integer g = 0;
  for (auto& v : y) {
    v *= Rational(den);
    g = gcd(g, Integer(v.get_num()));
  }
  for (auto& v : y) v /= Rational(g);
  RationalVector prim = mat_vec(m.inverse_gram(), y);
  Rational side_pairing = m.inner(prim, side);
  if (side_pairing == 0) throw DomainError("reference point lies on the wall");
  if (side_pairing < 0) prim = Rational(-1) * prim;
  const Rational a = f.pole_order();
  const Rational p2 = m.norm(prim);
  const DiscriminantForm d(m);
  RationalVector delta(m.rank(), 0);
  for (long k = 1; Rational(k * k) * p2 / 2 >= -a; ++k) {
    RationalVector v = Rational(k) * prim;
    Rational c = f.coefficient(d.class_of(v), Rational(k * k) * p2 / 2);
    if (c != 0) delta = delta - c * v;
  }
  return delta;
}

struct PhiValue {
  WeylVector base;               // Weyl vector of the witness chamber
  RationalVector base_point;     // a point of that chamber
  RationalVector rho;            // Weyl vector of the chamber of v
  std::vector<Wall> crossed;     // walls between base_point and v
  Rational value;                // (rho, v)
};

/// Evaluates v -> (rho(W(v)), v) for v of positive norm in the cone of z.
inline PhiValue phi_eval_hyperbolic(const CuspFrame& frame, const VectorValuedForm& f, const RationalVector& witness,
                                    const RationalVector& v,
                                    BoundaryConvention convention = BoundaryConvention::included) {
  const EvenLattice& m = frame.lattice();
  if (m.norm(v) <= 0) throw DomainError("evaluation point must have positive norm");
  if (m.inner(v, frame.z_rational()) <= 0) throw DomainError("evaluation point lies in the opposite cone");
  PhiValue out;
  out.base = weyl_vector(frame, f, witness, convention);
  out.base_point = chamber_base_point(frame, f, witness);
  WallSearch ws = separating_walls(m, f, out.base_point, v);
  if (!ws.through.empty()) throw DomainError("evaluation point lies on a wall");
  out.rho = out.base.vector;
  for (const auto& w : ws.crossed) out.rho = out.rho + w.coefficient * w.root;
  out.crossed = std::move(ws.crossed);
  out.value = m.inner(out.rho, v);
  return out;
}

/// Whether v (positive norm) lies in the closure of the chamber of the witness.
inline bool in_chamber_closure(const CuspFrame& frame, const VectorValuedForm& f, const RationalVector& witness,
                               const RationalVector& v) {
  RationalVector base = chamber_base_point(frame, f, witness);
  return separating_walls(frame.lattice(), f, base, v).crossed.empty();
}

/// Smallest k > 0 with k v in the lattice (dual = false) or its dual (dual = true).
inline Integer minimal_integral_multiple(const EvenLattice& m, const RationalVector& v, bool dual) {
  RationalVector w = dual ? mat_vec(m.gram(), v) : v;
  return common_denominator(w);
}

}  // namespace thetalift
