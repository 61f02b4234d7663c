#pragma once
// Truncated Laurent series in fractional powers of q.
//
// A series is  sum_k c_k q^(k/D) + O(q^T).  The truncation T may be absent,
// in which case the series is an exact finite sum.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "thetalift/arith/rational.hpp"

namespace thetalift {

class FracPowerSeries {
 public:
  /// The exact zero series.
  FracPowerSeries() = default;

  static FracPowerSeries zero(std::optional<Rational> truncation) {
    FracPowerSeries s;
    s.trunc_ = std::move(truncation);
    return s;
  }

  static FracPowerSeries monomial(const Rational& coeff, const Rational& exponent,
                                  std::optional<Rational> truncation = std::nullopt) {
    return from_terms({{exponent, coeff}}, std::move(truncation));
  }

  static FracPowerSeries constant(const Rational& c) { return monomial(c, 0); }

  /// Builds a series from (exponent -> coefficient); terms at or above the truncation are dropped.
  static FracPowerSeries from_terms(const std::map<Rational, Rational>& terms,
                                    std::optional<Rational> truncation = std::nullopt) {
    FracPowerSeries s;
    s.trunc_ = std::move(truncation);
    long den = 1;
    for (const auto& [e, c] : terms)
      if (c != 0) den = lcm(den, to_long(Integer(e.get_den())));
    s.den_ = den;
    for (const auto& [e, c] : terms) {
      if (c == 0) continue;
      if (s.trunc_ && e >= *s.trunc_) continue;
      s.c_[to_long(e * den)] = c;
    }
    s.normalize();
    return s;
  }

  long exponent_denominator() const { return den_; }
  const std::optional<Rational>& truncation() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool empty() const { return c_.empty(); }

  std::map<Rational, Rational> terms() const {
    std::map<Rational, Rational> t;
    for (const auto& [k, c] : c_) t.emplace(make_rational(k, den_), c);
    return t;
  }

  /// Whether the coefficient of q^e is determined by this series.
  bool knows(const Rational& e) const { return !trunc_ || e < *trunc_; }

  Rational coefficient(const Rational& e) const {
    if (!knows(e))
      throw PrecisionError("coefficient of q^" + e.get_str() + " requested but series is only known to O(q^" +
                               trunc_->get_str() + ")",
                           e);
    Rational scaled = e * den_;
    if (!is_integral(scaled)) return 0;
    auto it = c_.find(to_long(scaled));
    return it == c_.end() ? Rational(0) : it->second;
  }

  /// Smallest exponent with a nonzero coefficient.
  std::optional<Rational> valuation() const {
    if (c_.empty()) return std::nullopt;
    return make_rational(c_.begin()->first, den_);
  }

  /// Valuation, or the truncation when no term is known, or nullopt for exact zero.
  std::optional<Rational> order_bound() const {
    if (auto v = valuation()) return v;
    return trunc_;
  }

  FracPowerSeries truncated(const Rational& prec) const {
    FracPowerSeries s = *this;
    if (s.trunc_ && *s.trunc_ <= prec) return s;
    s.trunc_ = prec;
    for (auto it = s.c_.begin(); it != s.c_.end();) {
      if (make_rational(it->first, den_) >= prec)
        it = s.c_.erase(it);
      else
        ++it;
    }
    s.normalize();
    return s;
  }

  /// Multiplication by q^e.
  FracPowerSeries shifted(const Rational& e) const {
    std::map<Rational, Rational> t;
    for (const auto& [k, c] : c_) t.emplace(make_rational(k, den_) + e, c);
    std::optional<Rational> tr;
    if (trunc_) tr = *trunc_ + e;
    return from_terms(t, tr);
  }

  /// Substitution q -> q^m for m > 0.
  FracPowerSeries rescaled(const Rational& m) const {
    if (m <= 0) throw DomainError("series rescaling factor must be positive");
    std::map<Rational, Rational> t;
    for (const auto& [k, c] : c_) t.emplace(make_rational(k, den_) * m, c);
    std::optional<Rational> tr;
    if (trunc_) tr = *trunc_ * m;
    return from_terms(t, tr);
  }

  FracPowerSeries scaled(const Rational& s) const {
    if (s == 0) return zero(trunc_);
    FracPowerSeries r = *this;
    for (auto& [k, c] : r.c_) c *= s;
    return r;
  }

  friend FracPowerSeries operator+(const FracPowerSeries& a, const FracPowerSeries& b) {
    std::optional<Rational> tr = min_trunc(a.trunc_, b.trunc_);
    std::map<Rational, Rational> t = a.terms();
    for (const auto& [e, c] : b.terms()) t[e] += c;
    return from_terms(t, tr);
  }

  friend FracPowerSeries operator-(const FracPowerSeries& a) { return a.scaled(-1); }
  friend FracPowerSeries operator-(const FracPowerSeries& a, const FracPowerSeries& b) { return a + (-b); }

  friend FracPowerSeries operator*(const FracPowerSeries& a, const FracPowerSeries& b) {
    // O(q^Ta) * g contributes from q^(Ta + v(g)) on, and symmetrically.
    std::optional<Rational> tr;
    if (a.trunc_) {
      auto vb = b.order_bound();
      if (vb) tr = *a.trunc_ + *vb;
      else return zero(std::nullopt);  // b is exactly zero
    }
    if (b.trunc_) {
      auto va = a.order_bound();
      if (!va) return zero(std::nullopt);
      tr = min_trunc(tr, *b.trunc_ + *va);
    }
    long den = lcm(a.den_, b.den_);
    long fa = den / a.den_, fb = den / b.den_;
    std::map<long, Rational> out;
    long limit = 0;
    bool bounded = false;
    if (tr) {
      Rational l = *tr * den;
      limit = to_long(ceil_of(l));
      bounded = true;
    }
    for (const auto& [ka, ca] : a.c_)
      for (const auto& [kb, cb] : b.c_) {
        long k = ka * fa + kb * fb;
        if (bounded && k >= limit) break;
        out[k] += ca * cb;
      }
    FracPowerSeries s;
    s.den_ = den;
    s.trunc_ = tr;
    for (auto& [k, c] : out)
      if (c != 0) s.c_.emplace(k, std::move(c));
    s.normalize();
    return s;
  }

  FracPowerSeries& operator+=(const FracPowerSeries& o) { return *this = *this + o; }
  FracPowerSeries& operator-=(const FracPowerSeries& o) { return *this = *this - o; }
  FracPowerSeries& operator*=(const FracPowerSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse. A truncated series of valuation v and truncation T
  /// yields truncation T - 2v. Exact series need an explicit target precision.
  FracPowerSeries inverse(std::optional<Rational> prec = std::nullopt) const {
    auto v = valuation();
    if (!v) throw DomainError("inverse of a series with no known nonzero term");
    std::optional<Rational> natural;
    if (trunc_) natural = *trunc_ - 2 * *v;
    std::optional<Rational> target = min_trunc(natural, prec);
    if (!target) throw DomainError("inverse of an exact series needs a precision");
    const Rational lead = c_.begin()->second;
    const long kv = c_.begin()->first;
    // Relative series 1 + h, h_j = c_{kv + j} / lead.
    Rational span = (*target + *v) * den_;  // relative exponents j/den < target + v
    long n = to_long(ceil_of(span));
    std::map<Rational, Rational> t;
    if (n <= 0) return from_terms(t, target);
    std::vector<Rational> h(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    for (const auto& [k, c] : c_) {
      long j = k - kv;
      if (j > 0 && j < n) h[static_cast<std::size_t>(j)] = c / lead;
    }
    std::vector<long> support;
    for (long j = 1; j < n; ++j)
      if (h[static_cast<std::size_t>(j)] != 0) support.push_back(j);
    b[0] = 1;
    for (long k = 1; k < n; ++k) {
      Rational s = 0;
      for (long j : support) {
        if (j > k) break;
        s -= h[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
      }
      b[static_cast<std::size_t>(k)] = s;
    }
    Rational inv_lead = Rational(1) / lead;
    for (long k = 0; k < n; ++k)
      if (b[static_cast<std::size_t>(k)] != 0)
        t.emplace(make_rational(k, den_) - *v, b[static_cast<std::size_t>(k)] * inv_lead);
    return from_terms(t, target);
  }

  FracPowerSeries pow(long n, std::optional<Rational> prec = std::nullopt) const {
    if (n < 0) return inverse(prec).pow(-n, prec);
    FracPowerSeries result = constant(1), base = *this;
    while (n > 0) {
      if (n & 1) result = cap(result * base, prec);
      n >>= 1;
      if (n > 0) base = cap(base * base, prec);
    }
    return result;
  }

  /// Exact structural equality (same terms, same truncation).
  friend bool operator==(const FracPowerSeries& a, const FracPowerSeries& b) {
    return a.trunc_ == b.trunc_ && a.terms() == b.terms();
  }

  /// Equality of all coefficients known to both series.
  bool agrees_with(const FracPowerSeries& o) const {
    auto tr = min_trunc(trunc_, o.trunc_);
    auto x = tr ? truncated(*tr) : *this;
    auto y = tr ? o.truncated(*tr) : o;
    return x.terms() == y.terms();
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [e, c] : terms()) {
      if (!s.empty()) s += " + ";
      s += c.get_str();
      if (e != 0) s += "*q^" + (e.get_den() == 1 ? e.get_str() : "(" + e.get_str() + ")");
    }
    if (s.empty()) s = "0";
    if (trunc_) s += " + O(q^" + trunc_->get_str() + ")";
    return s;
  }

  static std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }

 private:
  static FracPowerSeries cap(FracPowerSeries s, const std::optional<Rational>& prec) {
    return prec ? s.truncated(*prec) : s;
  }

  void normalize() {
    long g = den_;
    for (const auto& [k, c] : c_) g = std::gcd(g, std::labs(k));
    if (g > 1) {
      std::map<long, Rational> m;
      for (auto& [k, c] : c_) m.emplace(k / g, std::move(c));
      c_ = std::move(m);
      den_ /= g;
    }
  }

  long den_ = 1;
  std::map<long, Rational> c_;
  std::optional<Rational> trunc_;
};

}  // namespace thetalift
