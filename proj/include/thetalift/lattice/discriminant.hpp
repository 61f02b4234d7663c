#pragma once
// The discriminant form L'/L with its quadratic form q(x) = x^2/2 mod 1.

#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "thetalift/arith/matrix.hpp"
#include "thetalift/lattice/lattice.hpp"

namespace thetalift {

/// Coordinates with respect to the invariant factors of L'/L.
using DiscElement = std::vector<long>;

class DiscriminantForm {
 public:
  explicit DiscriminantForm(EvenLattice lattice) : lattice_(std::move(lattice)) {
    const std::size_t n = lattice_.rank();
    gram_inverse_ = lattice_.inverse_gram();
    if (n == 0) {
      elements_.push_back({});
      q_values_.push_back(0);
      return;
    }
    SmithForm s = smith_normal_form(lattice_.gram());
    left_ = s.left;
    left_inverse_ = inverse_or_throw(to_rational(s.left));
    for (std::size_t i = 0; i < n; ++i) {
      if (s.diagonal[i] == 1) continue;
      components_.push_back(i);
      invariants_.push_back(to_long(s.diagonal[i]));
    }
    // Mixed-radix enumeration, last coordinate fastest.
    std::size_t total = 1;
    for (long d : invariants_) total *= static_cast<std::size_t>(d);
    elements_.reserve(total);
    DiscElement cur(invariants_.size(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      elements_.push_back(cur);
      for (std::size_t k = cur.size(); k-- > 0;) {
        if (++cur[k] < invariants_[k]) break;
        cur[k] = 0;
      }
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    for (const auto& x : elements_) q_values_.push_back(frac(lattice_.norm(representative(x)) / 2));
    // b(x, y) = q(x + y) - q(x) - q(y), so the denominators of q bound those of b.
    for (const auto& v : q_values_) level_ = lcm(level_, to_long(Integer(v.get_den())));
  }

  const EvenLattice& lattice() const { return lattice_; }
  const std::vector<long>& invariants() const { return invariants_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<DiscElement>& elements() const { return elements_; }
  /// Least N with N q(x) = 0 mod 1 for all x.
  long level() const { return level_; }
  std::pair<int, int> signature() const { return lattice_.signature(); }

  DiscElement zero() const { return DiscElement(invariants_.size(), 0); }

  std::size_t index_of(const DiscElement& x) const {
    if (invariants_.empty()) return 0;
    auto it = index_.find(x);
    if (it == index_.end()) throw DomainError("not an element of the discriminant group");
    return it->second;
  }

  bool contains(const DiscElement& x) const {
    if (x.size() != invariants_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || x[i] >= invariants_[i]) return false;
    return true;
  }

  DiscElement add(const DiscElement& a, const DiscElement& b) const {
    DiscElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % invariants_[i];
    return c;
  }

  DiscElement scale(const DiscElement& a, long k) const {
    DiscElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = ((a[i] * (k % invariants_[i])) % invariants_[i] + invariants_[i]) % invariants_[i];
    return c;
  }

  DiscElement negate(const DiscElement& a) const { return scale(a, -1); }

  long element_order(const DiscElement& a) const {
    long ord = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      long g = std::gcd(a[i], invariants_[i]);
      ord = lcm(ord, invariants_[i] / g);
    }
    return ord;
  }

  /// A dual vector (lattice coordinates) in the class x.
  RationalVector representative(const DiscElement& x) const {
    const std::size_t n = lattice_.rank();
    RationalVector w(n, 0);
    for (std::size_t k = 0; k < components_.size(); ++k) w[components_[k]] = x[k];
    return mat_vec(gram_inverse_, mat_vec(left_inverse_, w));
  }

  /// Class of a dual vector given in lattice coordinates.
  DiscElement class_of(const RationalVector& v) const {
    RationalVector gv = mat_vec(lattice_.gram(), v);
    if (!is_integral(gv)) throw DomainError("vector is not in the dual lattice");
    if (components_.empty()) return {};
    RationalVector y = mat_vec(left_, gv);
    DiscElement x(components_.size());
    for (std::size_t k = 0; k < components_.size(); ++k) {
      Integer r;
      Integer yi(y[components_[k]].get_num());
      mpz_fdiv_r_ui(r.get_mpz_t(), yi.get_mpz_t(), static_cast<unsigned long>(invariants_[k]));
      x[k] = r.get_si();
    }
    return x;
  }

  Rational q(const DiscElement& x) const { return q_values_[index_of(x)]; }

  Rational bilinear(const DiscElement& x, const DiscElement& y) const {
    return frac(lattice_.inner(representative(x), representative(y)));
  }

 private:
  EvenLattice lattice_;
  RatMatrix gram_inverse_;
  IntMatrix left_;
  RatMatrix left_inverse_;
  std::vector<std::size_t> components_;
  std::vector<long> invariants_;
  std::vector<DiscElement> elements_;
  std::map<DiscElement, std::size_t> index_;
  std::vector<Rational> q_values_;
  long level_ = 1;
};

using DiscPtr = std::shared_ptr<const DiscriminantForm>;

inline DiscPtr make_discriminant(const EvenLattice& l) { return std::make_shared<const DiscriminantForm>(l); }

}  // namespace thetalift
