#pragma once
// Certificates that the walls of F are reflection hyperplanes of M, and the
// classification of the Weyl vector by its norm.

#include "thetalift/hyperbolic/weyl.hpp"

namespace thetalift {

struct ReflectiveReport {
  std::vector<std::string> failures;  // one entry per offending (class, norm) pair or sampled wall
  std::size_t classes_checked = 0;
  std::size_t walls_sampled = 0;
  WeylVector weyl;
  std::string conclusion;
  bool reflective() const { return failures.empty(); }
};

/// Whether x -> x - 2 (x, r) / r^2 r maps M to itself, checked on a basis.
inline bool reflection_preserves(const EvenLattice& m, const RationalVector& r) {
  Rational r2 = m.norm(r);
  if (r2 == 0) return false;
  RationalVector gr = mat_vec(m.gram(), r);
  for (const auto& p : gr)
    if (!is_integral(Rational(2 * p / r2) * r)) return false;
  return true;
}

namespace detail {

inline std::string class_name(const DiscElement& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

}  // namespace detail

/// Runs the reflection checks and computes the Weyl vector of the witness chamber.
///
/// A primitive lambda0 in M' of class g and norm 2m gives a reflection of M
/// exactly when 1/m is an integer multiple of the order of g; the check runs
/// over every (g, m) for which some multiple k lambda0 carries a nonzero
/// coefficient. Walls near the base point are also checked one by one.
inline ReflectiveReport reflective_certificate(const CuspFrame& frame, const VectorValuedForm& f,
                                               const RationalVector& witness,
                                               BoundaryConvention convention = BoundaryConvention::included) {
  const EvenLattice& m = frame.lattice();
  require_lorentzian(m);
  const DiscriminantForm& d = *frame.disc();
  ReflectiveReport rep;
  const long level = d.level();
  for (const auto& [g, s] : f.components()) {
    for (const auto& [n, c] : s.terms()) {
      if (n >= 0 || c == 0) continue;
      for (long k = 1; Rational(k * k) <= -n * level; ++k) {
        Rational mm = n / Rational(k * k);
        for (const auto& g0 : d.elements()) {
          if (d.scale(g0, k) != g || d.q(g0) != frac(mm)) continue;
          ++rep.classes_checked;
          Rational inv = 1 / mm;
          long ord = d.element_order(g0);
          if (!is_integral(inv) || !is_integral(inv / ord))
            rep.failures.push_back("class " + detail::class_name(g0) + " with norm " + Rational(2 * mm).get_str() +
                                   ": reflection does not preserve the lattice");
        }
      }
    }
  }
  // Explicit checks on the walls met between the base point and nearby points
  // along each coordinate axis. The step shrinks until the search stays small.
  RationalVector base = chamber_base_point(frame, f, witness);
  const Rational a = f.pole_order();
  std::vector<RationalVector> probes;
  for (std::size_t i = 0; i < m.rank() && a > 0; ++i) {
    RationalVector e(m.rank(), 0);
    e[i] = 1;
    for (Rational step(1, 2); step > Rational(1, 1 << 20); step /= 2) {
      RationalVector p = base + step * e;
      if (m.norm(p) <= 0 || m.inner(p, base) <= 0) continue;
      if (wall_search_bound(m, a, base, p) > 2 * a + 1) continue;
      probes.push_back(std::move(p));
      break;
    }
  }
  for (const auto& p : probes) {
    WallSearch ws = separating_walls(m, f, base, p);
    for (auto* list : {&ws.crossed, &ws.through})
      for (const auto& w : *list) {
        ++rep.walls_sampled;
        if (!reflection_preserves(m, w.root)) rep.failures.push_back("sampled wall of norm " + m.norm(w.root).get_str() +
                                                                     " is not a reflection hyperplane");
      }
  }
  rep.weyl = weyl_vector(frame, f, witness, convention);
  if (!rep.failures.empty())
    rep.conclusion = "no conclusion";
  else if (rep.weyl.norm > 0)
    rep.conclusion = "finite index reflection group";
  else if (rep.weyl.norm == 0 && !is_zero(rep.weyl.vector))
    rep.conclusion = "virtually abelian quotient";
  else
    rep.conclusion = "no conclusion";
  return rep;
}

}  // namespace thetalift
