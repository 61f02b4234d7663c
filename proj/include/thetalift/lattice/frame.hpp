#pragma once
// A cusp frame of an indefinite even lattice M: a primitive norm 0 vector z,
// a dual vector z' with (z, z') = 1, and the lattice K = (M cap z^perp) / Z z,
// realised inside U = z^perp cap z'^perp.

#include <optional>
#include <vector>

#include "thetalift/lattice/discriminant.hpp"

namespace thetalift {

class CuspFrame {
 public:
  CuspFrame(EvenLattice m, IntegerVector z, RationalVector zprime)
      : m_(std::move(m)), disc_(make_discriminant(m_)), z_(std::move(z)), zprime_(std::move(zprime)) {
    const std::size_t n = m_.rank();
    if (z_.size() != n || zprime_.size() != n) throw InputError("frame vectors have the wrong dimension");
    zr_ = to_rational(z_);
    if (is_zero(zr_)) throw DomainError("frame vector z is zero");
    Integer g = 0;
    for (const auto& c : z_) g = gcd(g, c);
    if (g != 1) throw DomainError("frame vector z is not primitive");
    if (m_.norm(zr_) != 0) throw DomainError("frame vector z does not have norm 0");
    if (!m_.is_dual_vector(zprime_)) throw DomainError("frame vector z' is not in the dual lattice");
    if (m_.inner(zr_, zprime_) != 1) throw DomainError("frame vectors must satisfy (z, z') = 1");
    zprime_norm_ = m_.norm(zprime_);

    // Gz = N w with w primitive; pick u in Z^n with w . u = 1, so m0 = u has (m0, z) = N.
    RationalVector gz = mat_vec(m_.gram(), zr_);
    IntegerVector gzi = to_integer(gz);
    Integer level = 0;
    for (const auto& c : gzi) level = gcd(level, c);
    level_ = to_long(level);
    IntMatrix row(1, n);
    for (std::size_t i = 0; i < n; ++i) row(0, i) = gzi[i] / level;
    SmithForm s = smith_normal_form(row);
    // row * V = (1, 0, ..., 0) after normalisation, so the first column of V pairs to 1.
    unit_pairing_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) unit_pairing_[i] = Rational(s.right(i, 0)) * Rational(s.left(0, 0));
    gz_over_n_ = (Rational(1) / Rational(level)) * gz;

    // M cap z^perp, then project onto U. z itself maps to 0.
    IntMatrix kernel = integer_kernel(row);
    std::vector<RationalVector> images;
    Integer den = 1;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
      RationalVector v = project(to_rational(kernel.row(r)));
      den = lcm(den, common_denominator(v));
      images.push_back(std::move(v));
    }
    IntMatrix scaled(images.size(), n);
    for (std::size_t r = 0; r < images.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) scaled(r, c) = Integer(Rational(images[r][c] * Rational(den)).get_num());
    IntMatrix hb = hermite_basis(scaled);
    if (hb.rows() + 2 != n) throw std::logic_error("reduced lattice has unexpected rank");
    basis_ = RatMatrix(hb.rows(), n);
    for (std::size_t r = 0; r < hb.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) basis_(r, c) = Rational(hb(r, c)) / Rational(den);
    RatMatrix kg = basis_ * m_.rational_gram() * basis_.transpose();
    IntMatrix kgi(kg.rows(), kg.cols());
    for (std::size_t i = 0; i < kg.rows(); ++i)
      for (std::size_t j = 0; j < kg.cols(); ++j) {
        if (!is_integral(kg(i, j))) throw std::logic_error("reduced lattice is not integral");
        kgi(i, j) = Integer(kg(i, j).get_num());
      }
    k_ = EvenLattice(kgi, m_.name().empty() ? "K" : "K(" + m_.name() + ")");
    k_disc_ = make_discriminant(k_);
    // Coordinates in the K basis: c = (x G B^T) (B G B^T)^-1.
    coord_map_ = m_.rational_gram() * basis_.transpose() * k_.inverse_gram();
  }

  /// A frame whose z' = G^-1 u for an integral u with u . z = 1.
  static CuspFrame with_partner(EvenLattice m, IntegerVector z) {
    if (z.size() != m.rank()) throw InputError("frame vectors have the wrong dimension");
    IntMatrix row(1, z.size());
    for (std::size_t i = 0; i < z.size(); ++i) row(0, i) = z[i];
    SmithForm s = smith_normal_form(row);
    if (s.diagonal.empty() || s.diagonal[0] != 1) throw DomainError("frame vector z is not primitive");
    RationalVector u(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) u[i] = Rational(s.right(i, 0) * s.left(0, 0));
    RationalVector zp = mat_vec(m.inverse_gram(), u);
    // Shifting by a multiple of z brings z'^2 into [0, 2).
    RationalVector zr = to_rational(z);
    zp = zp - Rational(floor_of(m.norm(zp) / 2)) * zr;
    return CuspFrame(std::move(m), std::move(z), std::move(zp));
  }

  const EvenLattice& lattice() const { return m_; }
  const DiscPtr& disc() const { return disc_; }
  const IntegerVector& z() const { return z_; }
  const RationalVector& z_rational() const { return zr_; }
  const RationalVector& zprime() const { return zprime_; }
  const Rational& zprime_norm() const { return zprime_norm_; }
  /// N: the positive generator of (z, M).
  long level() const { return level_; }

  const EvenLattice& reduced_lattice() const { return k_; }
  const DiscPtr& reduced_disc() const { return k_disc_; }
  /// Rows: the basis of K in M coordinates.
  const RatMatrix& reduced_basis() const { return basis_; }

  /// Orthogonal projection onto z^perp cap z'^perp (valid since z^2 = 0, (z, z') = 1).
  RationalVector project(const RationalVector& x) const {
    Rational xz = m_.inner(x, zr_);
    Rational xzp = m_.inner(x, zprime_);
    RationalVector out = x - xz * zprime_;
    return out - (xzp - xz * zprime_norm_) * zr_;
  }

  /// Coordinates in the K basis of a vector of U (given in M coordinates).
  RationalVector to_reduced(const RationalVector& x) const { return vec_mat(x, coord_map_); }
  RationalVector from_reduced(const RationalVector& c) const { return vec_mat(c, basis_); }

  /// The vector lambda + m z' + n z (lambda in K coordinates) in M coordinates.
  RationalVector assemble(const RationalVector& lambda_k, const Rational& m, const Rational& n) const {
    return from_reduced(lambda_k) + m * zprime_ + n * zr_;
  }

  /// For lambda in U (M coordinates): the t in [0, 1) with lambda + t z in M'.
  /// Empty if lambda is not the projection of a dual vector orthogonal to z.
  std::vector<Rational> lift_offsets(const RationalVector& lambda) const {
    // (lambda + t z) in M' iff G lambda + t G z is integral, i.e. G lambda + t N w in Z^n.
    RationalVector gl = mat_vec(m_.gram(), lambda);
    Rational t0 = -dot(gl, unit_pairing_) / Rational(level_);
    RationalVector test = gl + (t0 * Rational(level_)) * gz_over_n_;
    if (!is_integral(test)) return {};
    std::vector<Rational> out;
    for (long k = 0; k < level_; ++k) out.push_back(frac(t0 + make_rational(k, level_)));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The class in K'/K of a class delta of M'/M with (delta, z) = 0 mod N.
  std::optional<DiscElement> restrict_class(const DiscElement& delta) const {
    RationalVector v = disc_->representative(delta);
    Rational a = m_.inner(v, zr_);
    if (!is_integral(a / Rational(level_))) return std::nullopt;
    // Move to (v, z) = 0 using an element of M pairing to N with z.
    v = v - (a / Rational(level_)) * unit_pairing_;
    return k_disc_->class_of(to_reduced(project(v)));
  }

 private:
  EvenLattice m_;
  DiscPtr disc_;
  IntegerVector z_;
  RationalVector zr_;
  RationalVector zprime_;
  Rational zprime_norm_;
  long level_ = 1;
  RationalVector unit_pairing_;  // u in Z^n with (u, z) = N
  RationalVector gz_over_n_;
  RatMatrix basis_;
  RatMatrix coord_map_;
  EvenLattice k_;
  DiscPtr k_disc_;
};

}  // namespace thetalift
