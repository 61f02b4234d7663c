#pragma once
// Even lattices given by an integral Gram matrix.

#include <string>
#include <utility>

#include "thetalift/arith/matrix.hpp"
#include "thetalift/arith/rational.hpp"

namespace thetalift {

/// (positive, negative) counts of an exact symmetric congruence diagonalisation.
inline std::pair<int, int> signature_of(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DomainError("signature of a non-symmetric matrix");
  RatMatrix a = symmetric;
  std::size_t n = a.rows();
  int pos = 0, neg = 0;
  // Symmetric elimination on the trailing block [k, n).
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: use an off-diagonal entry a(i, j) and replace e_i by e_i + e_j.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a(oi, c) += a(oj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, oi) += a(r, oj);
      p = oi;
    }
    a.swap_rows(k, p);
    a.swap_cols(k, p);
    const Rational pivot = a(k, k);
    (pivot > 0 ? pos : neg)++;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational f = a(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t c = k + 1; c < n; ++c) a(k, c) = 0;
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = 0;
  }
  return {pos, neg};
}

class EvenLattice {
 public:
  EvenLattice() : EvenLattice(IntMatrix(0, 0)) {}

  explicit EvenLattice(IntMatrix gram, std::string name = {}) : gram_(std::move(gram)), name_(std::move(name)) {
    if (!gram_.is_square()) throw InputError("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw InputError("Gram matrix must be symmetric");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      if (gram_(i, i) % 2 != 0) throw InputError("lattice is not even: odd diagonal entry");
    det_ = rank() == 0 ? Integer(1) : determinant(gram_);
    if (det_ == 0) throw InputError("Gram matrix is degenerate");
    signature_ = signature_of(to_rational(gram_));
  }

  const IntMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  std::size_t rank() const { return gram_.rows(); }
  const Integer& determinant_value() const { return det_; }
  std::pair<int, int> signature() const { return signature_; }
  int signature_difference() const { return signature_.first - signature_.second; }
  bool is_positive_definite() const { return signature_.second == 0; }
  bool is_negative_definite() const { return signature_.first == 0; }
  bool is_definite() const { return is_positive_definite() || is_negative_definite(); }
  bool is_lorentzian() const { return signature_.first == 1 && signature_.second >= 1; }

  RatMatrix rational_gram() const { return to_rational(gram_); }

  RatMatrix inverse_gram() const {
    if (rank() == 0) return RatMatrix(0, 0);
    return inverse_or_throw(rational_gram());
  }

  Rational inner(const RationalVector& u, const RationalVector& v) const { return bilinear(gram_, u, v); }
  Rational norm(const RationalVector& v) const { return inner(v, v); }

  /// v lies in the dual lattice iff G v is integral.
  bool is_dual_vector(const RationalVector& v) const { return is_integral(mat_vec(gram_, v)); }

  /// Gram matrix of the same lattice in the basis given by the rows of b.
  EvenLattice in_basis(const IntMatrix& b, std::string name = {}) const {
    return EvenLattice(b * gram_ * b.transpose(), std::move(name));
  }

  EvenLattice named(std::string name) const {
    EvenLattice l = *this;
    l.name_ = std::move(name);
    return l;
  }

 private:
  IntMatrix gram_;
  std::string name_;
  Integer det_;
  std::pair<int, int> signature_{0, 0};
};

}  // namespace thetalift
