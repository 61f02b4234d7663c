#pragma once
// Elements of Q(zeta_n) stored in the power basis 1, zeta, ..., zeta^(phi(n)-1).

#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "thetalift/arith/matrix.hpp"
#include "thetalift/arith/rational.hpp"

namespace thetalift {

namespace detail {

// Phi_n with integer coefficients, lowest degree first. Cached process-wide.
inline const std::vector<Integer>& cyclotomic_polynomial(long n) {
  static std::mutex mutex;
  static std::map<long, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<Integer> quotient(poly.size() - dd, 0);
    for (std::size_t k = poly.size(); k-- > dd;) {
      Integer c = poly[k];
      quotient[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= c * div[j];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

inline long euler_phi(long n) { return static_cast<long>(cyclotomic_polynomial(n).size()) - 1; }

template <class T>
void reduce_mod_cyclotomic(std::vector<T>& poly, long n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > d;) {
    if (poly[k] == 0) continue;
    T c = poly[k];
    for (std::size_t j = 0; j < d; ++j)
      if (phi[j] != 0) poly[k - d + j] -= c * T(phi[j]);
    poly[k] = 0;
  }
  poly.resize(d, T(0));
}

}  // namespace detail

class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1), coeffs_{Rational(0)} {}
  CyclotomicNumber(long value) : order_(1), coeffs_{Rational(value)} {}  // NOLINT(implicit)
  CyclotomicNumber(const Rational& value) : order_(1), coeffs_{value} {}  // NOLINT(implicit)

  /// Element of Q(zeta_order) given by sum coeffs[k] zeta^k (any length).
  static CyclotomicNumber from_powers(long order, std::vector<Rational> coeffs) {
    if (order < 1) throw DomainError("cyclotomic order must be positive");
    detail::reduce_mod_cyclotomic(coeffs, order);
    CyclotomicNumber c;
    c.order_ = order;
    c.coeffs_ = std::move(coeffs);
    return c;
  }

  /// Integer exponent counts sum counts[k] zeta^k, reduced in Z before conversion.
  static CyclotomicNumber from_exponent_counts(long order, std::vector<Integer> counts) {
    detail::reduce_mod_cyclotomic(counts, order);
    std::vector<Rational> coeffs(counts.begin(), counts.end());
    CyclotomicNumber c;
    c.order_ = order;
    c.coeffs_ = std::move(coeffs);
    return c;
  }

  /// e(x) = exp(2 pi i x).
  static CyclotomicNumber root_of_unity(const Rational& x) {
    Rational f = frac(x);
    long order = to_long(Integer(f.get_den()));
    long k = to_long(Integer(f.get_num()));
    std::vector<Rational> p(static_cast<std::size_t>(k) + 1, 0);
    p[static_cast<std::size_t>(k)] = 1;
    return from_powers(order, std::move(p));
  }

  long order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  CyclotomicNumber lifted(long order) const {
    if (order % order_ != 0) throw DomainError("cyclotomic lift to a non-multiple order");
    if (order == order_) return *this;
    const std::size_t step = static_cast<std::size_t>(order / order_);
    std::vector<Rational> p(coeffs_.size() * step + 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
    return from_powers(order, std::move(p));
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return false;
    return true;
  }

  Rational to_rational() const {
    if (!is_rational()) throw DomainError("cyclotomic number is not rational");
    return coeffs_.front();
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long n = lcm(a.order_, b.order_);
    CyclotomicNumber x = a.lifted(n), y = b.lifted(n);
    for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
    return x;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber& a) {
    CyclotomicNumber x = a;
    for (auto& c : x.coeffs_) c = -c;
    return x;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == 1 && b.order_ == 1) return CyclotomicNumber(a.coeffs_[0] * b.coeffs_[0]);
    if (b.order_ == 1) return a.scaled(b.coeffs_[0]);
    if (a.order_ == 1) return b.scaled(a.coeffs_[0]);
    long n = lcm(a.order_, b.order_);
    CyclotomicNumber x = a.lifted(n), y = b.lifted(n);
    std::vector<Rational> p(x.coeffs_.size() + y.coeffs_.size(), 0);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
        if (y.coeffs_[j] != 0) p[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return from_powers(n, std::move(p));
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  CyclotomicNumber scaled(const Rational& s) const {
    CyclotomicNumber x = *this;
    for (auto& c : x.coeffs_) c *= s;
    return x;
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long n = lcm(a.order_, b.order_);
    return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
  }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  /// Complex conjugate: zeta -> zeta^-1.
  CyclotomicNumber conj() const {
    std::vector<Rational> p(static_cast<std::size_t>(order_) + 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      p[k == 0 ? 0 : static_cast<std::size_t>(order_) - k] += coeffs_[k];
    return from_powers(order_, std::move(p));
  }

  CyclotomicNumber inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in a cyclotomic field");
    if (order_ == 1) return CyclotomicNumber(Rational(1) / coeffs_[0]);
    const std::size_t d = coeffs_.size();
    // Columns: this * zeta^j; solve M b = e_0.
    RatMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> p(d + j, 0);
      for (std::size_t k = 0; k < d; ++k) p[k + j] = coeffs_[k];
      detail::reduce_mod_cyclotomic(p, order_);
      for (std::size_t i = 0; i < d; ++i) m(i, j) = p[i];
    }
    RatMatrix inv = inverse_or_throw(m);
    std::vector<Rational> b(d);
    for (std::size_t i = 0; i < d; ++i) b[i] = inv(i, 0);
    return from_powers(order_, std::move(b));
  }

  CyclotomicNumber pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicNumber result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  std::complex<double> numeric() const {
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
      s += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return s;
  }

  /// The smallest order that represents the same number (useful for display).
  CyclotomicNumber minimized() const {
    for (long d = 1; d < order_; ++d) {
      if (order_ % d != 0) continue;
      // Candidate: coefficients supported on multiples of order/d after lifting.
      const std::size_t step = static_cast<std::size_t>(order_ / d);
      std::vector<Rational> p;
      for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k)
        p.push_back(k * step < coeffs_.size() ? coeffs_[k * step] : Rational(0));
      // A number of Q(zeta_d) has a unique representation; check by lifting back.
      CyclotomicNumber c = from_powers(d, p);
      if (c.lifted(order_) == *this) return c;
    }
    return *this;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[k].get_str();
      if (k > 0) s += "*z" + std::to_string(order_) + "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

/// e(x) = exp(2 pi i x) as an exact cyclotomic number.
inline CyclotomicNumber e(const Rational& x) { return CyclotomicNumber::root_of_unity(x); }

}  // namespace thetalift
