#pragma once
// Exact integers and rationals (GMP-backed) plus the error types shared by
// every module.

#include <gmpxx.h>

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thetalift {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Malformed input: bad literals, bad JSON, schema violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated series was asked for a coefficient beyond its precision.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, Rational needed)
      : std::runtime_error(what), needed_(std::move(needed)) {}
  const Rational& needed() const { return needed_; }

 private:
  Rational needed_;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in a machine word: " + z.get_str());
  return z.get_si();
}

inline long to_long(const Rational& x) {
  if (!is_integral(x)) throw DomainError("expected an integer, got " + x.get_str());
  return to_long(Integer(x.get_num()));
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline long lcm(long a, long b) { return to_long(lcm(Integer(a), Integer(b))); }

inline Rational power(const Rational& x, long n) {
  if (n < 0) {
    if (x == 0) throw DomainError("zero to a negative power");
    return power(Rational(1) / x, -n);
  }
  Rational result = 1;
  Rational base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

inline Integer integer_power(const Integer& x, unsigned long n) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), n);
  return r;
}

/// Parses "p", "-p" or "p/q" with q > 0. Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(canonical, 10) != 0) throw InputError("malformed rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline Integer common_denominator(const RationalVector& v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm(d, Integer(x.get_den()));
  return d;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RationalVector to_rational(const IntegerVector& v) { return RationalVector(v.begin(), v.end()); }

inline bool is_integral(const RationalVector& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

inline IntegerVector to_integer(const RationalVector& v) {
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw DomainError("vector is not integral");
    out.emplace_back(x.get_num());
  }
  return out;
}

inline RationalVector operator+(RationalVector a, const RationalVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline RationalVector operator-(RationalVector a, const RationalVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline RationalVector operator*(const Rational& s, RationalVector a) {
  for (auto& x : a) x *= s;
  return a;
}

inline bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace thetalift
