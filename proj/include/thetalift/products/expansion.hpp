#pragma once
// Truncated infinite product expansions of automorphic forms on lattices of
// signature (2, b-) at a level N cusp, together with their weight, zero
// orders and constant factor.
//
// Two frames are involved: the outer frame (z, z') on M gives the Lorentzian
// lattice K, and an inner frame on K picks the Weyl chamber whose Weyl vector
// anchors the product. Vectors of K are stored in K coordinates; the public
// functions take and return ambient coordinates of M.

#include <optional>
#include <string>
#include <vector>

#include "thetalift/arith/cyclotomic.hpp"
#include "thetalift/hyperbolic/weyl.hpp"

namespace thetalift {

/// Generalized binomial coefficient c (c - 1) ... (c - k + 1) / k!.
inline Rational binomial(const Rational& c, long k) {
  if (k < 0) return 0;
  Rational out = 1;
  for (long i = 0; i < k; ++i) out = out * (c - i) / (i + 1);
  return out;
}

class ProductDatum {
 public:
  /// inner_z (and inner_zprime if given) are ambient vectors orthogonal to z
  /// and z'. The witness, also ambient, selects the chamber of K.
  ProductDatum(EvenLattice m, VectorValuedForm f, IntegerVector z, RationalVector zprime, const RationalVector& inner_z,
               const std::optional<RationalVector>& inner_zprime = std::nullopt,
               const std::optional<RationalVector>& witness = std::nullopt,
               BoundaryConvention convention = BoundaryConvention::included)
      : outer_(std::move(m), std::move(z), std::move(zprime)), f_(std::move(f)) {
    const auto sig = outer_.lattice().signature();
    if (sig.first != 2) throw DomainError("product expansions need a lattice of signature (2, b-)");
    if (f_.disc()->invariants() != outer_.disc()->invariants())
      throw InputError("form does not live on the discriminant group of the lattice");
    for (const auto& [g, s] : f_.components())
      for (const auto& [n, c] : s.terms())
        if (n <= 0 && !is_integral(c)) throw DomainError("coefficients at non-positive exponents must be integers");
    fk_ = reduce_to_smaller(outer_, f_);
    const EvenLattice& k = outer_.reduced_lattice();
    RationalVector zk = to_k(inner_z);
    if (!is_integral(zk)) throw DomainError("inner frame vector is not in the lattice");
    IntegerVector zki = to_integer(zk);
    inner_.emplace(inner_zprime ? CuspFrame(k, zki, to_k(*inner_zprime)) : CuspFrame::with_partner(k, zki));
    witness_ = witness ? to_k(*witness) : default_witness(*inner_, fk_);
    weyl_ = weyl_vector(*inner_, fk_, witness_, convention);
  }

  const CuspFrame& outer() const { return outer_; }
  const CuspFrame& inner() const { return *inner_; }
  const VectorValuedForm& form() const { return f_; }
  /// F_K, the form reduced to K.
  const VectorValuedForm& reduced_form() const { return fk_; }
  /// Weyl vector of the chamber, in K coordinates.
  const WeylVector& weyl() const { return weyl_; }
  const RationalVector& witness() const { return witness_; }
  long level() const { return outer_.level(); }

  /// A point of the chamber in K coordinates.
  RationalVector base_point() const { return chamber_base_point(*inner_, fk_, witness_); }

  RationalVector to_k(const RationalVector& ambient) const {
    if (outer_.project(ambient) != ambient) throw DomainError("vector is not orthogonal to z and z'");
    return outer_.to_reduced(ambient);
  }
  RationalVector to_ambient(const RationalVector& kcoords) const { return outer_.from_reduced(kcoords); }

 private:
  CuspFrame outer_;
  VectorValuedForm f_;
  VectorValuedForm fk_;
  std::optional<CuspFrame> inner_;
  RationalVector witness_;
  WeylVector weyl_;
};

struct LiftWeight {
  Rational weight;
  Rational singular_weight;
  bool singular() const { return weight == singular_weight; }
};

inline LiftWeight lift_weight(const ProductDatum& datum) {
  const EvenLattice& m = datum.outer().lattice();
  const DiscriminantForm& d = *datum.outer().disc();
  LiftWeight w;
  w.weight = datum.form().coefficient(d.zero(), 0) / 2;
  w.singular_weight = make_rational(static_cast<long>(m.signature().second) - 2, 2);
  return w;
}

/// Order of the zero along lambda^perp: the sum of c_{x lambda}(x^2 lambda^2 / 2)
/// over x > 0 with x lambda in M'. lambda is any vector of M' of negative norm.
inline Rational zero_order(const ProductDatum& datum, const RationalVector& lambda) {
  const EvenLattice& m = datum.outer().lattice();
  const DiscriminantForm& d = *datum.outer().disc();
  if (lambda.size() != m.rank()) throw InputError("vector has the wrong dimension");
  const Rational n = m.norm(lambda);
  if (n >= 0) throw DomainError("zero orders need a vector of negative norm");
  // x lambda in M' iff x G lambda is integral; the primitive such multiple is G lambda / content.
  RationalVector gl = mat_vec(m.gram(), lambda);
  Integer den = common_denominator(gl);
  Integer g = 0;
  for (const auto& c : gl) g = gcd(g, Integer(Rational(c * Rational(den)).get_num()));
  const Rational unit = Rational(1) / (Rational(g) / Rational(den));
  const RationalVector prim = unit * lambda;
  const Rational p2 = m.norm(prim);
  const Rational a = datum.form().pole_order();
  Rational total = 0;
  for (long k = 1; Rational(k * k) * p2 / 2 >= -a; ++k) {
    RationalVector v = Rational(k) * prim;
    total += datum.form().coefficient(d.class_of(v), Rational(k * k) * p2 / 2);
  }
  return total;
}

struct ScalarConstant {
  CyclotomicNumber value;  // the constant, or its square when squared is set
  bool squared = false;
};

/// prod over 0 < delta < N of (1 - e(delta/N))^(c_{delta z/N}(0) / 2).
inline ScalarConstant scalar_constant(const ProductDatum& datum) {
  const CuspFrame& fr = datum.outer();
  const long n = fr.level();
  const DiscriminantForm& d = *fr.disc();
  std::vector<Rational> exps;
  bool half = false;
  for (long delta = 1; delta < n; ++delta) {
    RationalVector v = make_rational(delta, n) * fr.z_rational();
    Rational c = datum.form().coefficient(d.class_of(v), 0);
    exps.push_back(c);
    if (!is_integral(c / 2)) half = true;
  }
  ScalarConstant out;
  out.squared = half;
  out.value = CyclotomicNumber(1);
  for (long delta = 1; delta < n; ++delta) {
    Rational c = exps[static_cast<std::size_t>(delta - 1)];
    long p = to_long(half ? c : Rational(c / 2));
    CyclotomicNumber base = CyclotomicNumber(1) - e(make_rational(delta, n));
    out.value *= p >= 0 ? base.pow(p) : base.inverse().pow(-p);
  }
  return out;
}

/// A truncated sum of coefficients times e((Z, rho + lambda)) over lambda in
/// K' (keys are dual coordinates y, lambda = G_K^-1 y) with
/// (rho + lambda, h) <= bound.
struct GroupRingSeries {
  RationalVector height_vector;  // K coordinates
  Rational height_bound;
  RationalVector offset;  // rho, K coordinates
  long phase_order = 1;
  std::map<IntegerVector, CyclotomicNumber> terms;
};

struct ProductTerm {
  RationalVector lambda;  // ambient coordinates
  Rational height;
  Rational norm;
  Rational phase;  // coefficient of e(phase)
  Rational coefficient;
};

namespace detail {

struct ProductFactor {
  IntegerVector y;
  Rational height;
  Rational t;
  Rational exponent;
};

/// Appends the factors at lambda = G^-1 y (one per lift with a nonzero exponent).
inline void add_factors(const ProductDatum& datum, const IntegerVector& y, const Rational& height,
                        std::vector<ProductFactor>& out) {
  const EvenLattice& k = datum.outer().reduced_lattice();
  const DiscriminantForm& d = *datum.outer().disc();
  RationalVector lam = mat_vec(k.inverse_gram(), to_rational(y));
  Rational half = k.norm(lam) / 2;
  if (half < -datum.form().pole_order()) return;
  RationalVector amb = datum.to_ambient(lam);
  for (const Rational& t : datum.outer().lift_offsets(amb)) {
    Rational c = datum.form().coefficient(d.class_of(amb + t * datum.outer().z_rational()), half);
    if (c == 0) continue;
    if (!is_integral(c)) throw DomainError("product exponent " + c.get_str() + " is not an integer");
    out.push_back({y, height, t, c});
  }
}

inline std::vector<ProductFactor> product_factors(const ProductDatum& datum, const RationalVector& h,
                                                  const Rational& room, const std::optional<RationalVector>& ray) {
  const EvenLattice& k = datum.outer().reduced_lattice();
  const std::size_t n = k.rank();
  const Rational h2 = k.norm(h);
  if (h2 <= 0) throw DomainError("height vector must have positive norm");
  std::vector<ProductFactor> out;
  if (datum.form().is_zero()) return out;
  if (ray) {
    // Multiples of the primitive vector of K' on the ray.
    RationalVector gy = mat_vec(k.gram(), *ray);
    Integer den = common_denominator(gy);
    Integer g = 0;
    for (auto& c : gy) {
      c *= Rational(den);
      g = gcd(g, Integer(c.get_num()));
    }
    IntegerVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Integer(gy[i].get_num()) / g;
    const Rational step = dot(to_rational(p), h);
    if (step <= 0) throw DomainError("ray direction must have positive height");
    for (long j = 1; Rational(j) * step <= room; ++j) {
      IntegerVector y = p;
      for (auto& c : y) c *= j;
      add_factors(datum, y, Rational(j) * step, out);
    }
  } else {
    // Majorant 2 (lambda, h)^2 / h^2 - lambda^2 over the dual coordinates.
    const RatMatrix ginv = k.inverse_gram();
    RatMatrix form(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) form(i, j) = 2 * h[i] * h[j] / h2 - ginv(i, j);
    const Rational bound = 2 * room * room / h2 + 2 * datum.form().pole_order();
    for_each_short_vector(form, bound, [&](const std::vector<long>& y, const Rational&) {
      Rational height = 0;
      for (std::size_t i = 0; i < n; ++i) height += h[i] * y[i];
      if (height <= 0 || height > room) return;
      add_factors(datum, IntegerVector(y.begin(), y.end()), height, out);
    });
  }
  std::sort(out.begin(), out.end(), [](const ProductFactor& x, const ProductFactor& y) {
    return std::tie(x.height, x.y, x.t) < std::tie(y.height, y.y, y.t);
  });
  return out;
}

}  // namespace detail

/// Expands e((Z, rho)) prod (1 - e((lambda, Z) + t))^c up to height `bound`
/// with respect to h (K coordinates). With `ray` set, only factors with lambda
/// a positive multiple of the ray direction (K coordinates) are used; along an
/// extremal norm 0 ray of the cone no other factor contributes to the ray.
inline GroupRingSeries product_expansion(const ProductDatum& datum, const RationalVector& h, const Rational& bound,
                                         const std::optional<RationalVector>& ray = std::nullopt) {
  const EvenLattice& k = datum.outer().reduced_lattice();
  if (h.size() != k.rank()) throw InputError("height vector has the wrong dimension");
  if (ray && (ray->size() != k.rank() || is_zero(*ray))) throw InputError("ray direction is invalid");
  GroupRingSeries out;
  out.height_vector = h;
  out.height_bound = bound;
  out.offset = datum.weyl().vector;
  out.phase_order = datum.level();
  const RationalVector gh = mat_vec(k.gram(), h);
  const Rational rho_height = dot(out.offset, gh);
  const Rational room = bound - rho_height;
  if (room < 0) throw DomainError("the Weyl vector's height exceeds the bound");
  // Heights of factors are measured by y . h with y the dual coordinates.
  auto factors = detail::product_factors(datum, h, room, ray);
  std::map<IntegerVector, std::pair<Rational, CyclotomicNumber>> acc;  // key -> (height, coefficient)
  acc.emplace(IntegerVector(k.rank(), 0), std::make_pair(Rational(0), CyclotomicNumber(1)));
  for (const auto& fac : factors) {
    const CyclotomicNumber minus_phase = -e(fac.t);
    std::vector<CyclotomicNumber> powers{CyclotomicNumber(1)};
    for (long j = 1; Rational(j) * fac.height <= room; ++j) powers.push_back(powers.back() * minus_phase);
    std::map<IntegerVector, std::pair<Rational, CyclotomicNumber>> next;
    for (const auto& [key, entry] : acc) {
      const auto& [height, coeff] = entry;
      for (std::size_t j = 0; j < powers.size(); ++j) {
        Rational hj = height + Rational(static_cast<long>(j)) * fac.height;
        if (hj > room) break;
        Rational b = binomial(fac.exponent, static_cast<long>(j));
        if (b == 0) break;
        IntegerVector nk = key;
        for (std::size_t i = 0; i < nk.size(); ++i) nk[i] += Integer(static_cast<long>(j)) * fac.y[i];
        CyclotomicNumber term = (coeff * powers[j]).scaled(b);
        auto it = next.find(nk);
        if (it == next.end()) next.emplace(std::move(nk), std::make_pair(hj, std::move(term)));
        else it->second.second += term;
      }
    }
    acc.clear();
    for (auto& [key, entry] : next)
      if (!entry.second.is_zero()) acc.emplace(key, std::move(entry));
  }
  for (auto& [key, entry] : acc) out.terms.emplace(key, std::move(entry.second));
  return out;
}

/// The expansion as a flat list sorted by height, one entry per phase.
inline std::vector<ProductTerm> product_terms(const ProductDatum& datum, const GroupRingSeries& s) {
  const EvenLattice& k = datum.outer().reduced_lattice();
  const RatMatrix ginv = k.inverse_gram();
  const RationalVector gh = mat_vec(k.gram(), s.height_vector);
  std::vector<ProductTerm> out;
  for (const auto& [y, c] : s.terms) {
    RationalVector lam = s.offset + mat_vec(ginv, to_rational(y));
    Rational height = dot(lam, gh);
    Rational norm = k.norm(lam);
    RationalVector amb = datum.to_ambient(lam);
    CyclotomicNumber lifted = c.lifted(s.phase_order);
    const auto& coeffs = lifted.coefficients();
    for (std::size_t a = 0; a < coeffs.size(); ++a)
      if (coeffs[a] != 0)
        out.push_back({amb, height, norm, make_rational(static_cast<long>(a), s.phase_order), coeffs[a]});
  }
  std::stable_sort(out.begin(), out.end(), [](const ProductTerm& x, const ProductTerm& y) {
    return std::tie(x.height, x.lambda, x.phase) < std::tie(y.height, y.lambda, y.phase);
  });
  return out;
}

/// Coefficients along a ray: the series sum a_r q^r with rho + lambda = r w
/// (w in K coordinates), known for r below bound / (w, h). Terms off the ray
/// are an error.
inline FracPowerSeries ray_series(const ProductDatum& datum, const GroupRingSeries& s, const RationalVector& w) {
  const EvenLattice& k = datum.outer().reduced_lattice();
  const RatMatrix ginv = k.inverse_gram();
  std::size_t piv = 0;
  while (piv < w.size() && w[piv] == 0) ++piv;
  if (piv == w.size()) throw InputError("ray direction is zero");
  const Rational wh = k.inner(w, s.height_vector);
  if (wh <= 0) throw DomainError("ray direction must have positive height");
  std::map<Rational, Rational> terms;
  for (const auto& [y, c] : s.terms) {
    RationalVector lam = s.offset + mat_vec(ginv, to_rational(y));
    Rational r = lam[piv] / w[piv];
    if (r * w != lam) throw DomainError("series has a term off the ray");
    if (!c.is_rational()) throw DomainError("ray coefficient is not rational");
    terms[r] += c.to_rational();
  }
  return FracPowerSeries::from_terms(terms, s.height_bound / wh);
}

/// Terms of the expansion at vectors of nonzero norm (none when the weight is singular).
inline std::vector<ProductTerm> singular_weight_support(const ProductDatum& datum, const GroupRingSeries& s) {
  if (!lift_weight(datum).singular()) throw DomainError("the lift does not have singular weight");
  std::vector<ProductTerm> out;
  for (auto& t : product_terms(datum, s))
    if (t.norm != 0) out.push_back(std::move(t));
  return out;
}

}  // namespace thetalift
