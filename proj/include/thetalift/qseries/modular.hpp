#pragma once
// Classical q-expansions: eta products, Eisenstein series, Delta, j, Jacobi
// theta, Bernoulli numbers and Hurwitz class numbers.

#include <map>
#include <mutex>
#include <vector>

#include "thetalift/arith/rational.hpp"
#include "thetalift/qseries/series.hpp"

namespace thetalift {

/// B_m with B_1 = -1/2.
inline Rational bernoulli_number(long m) {
  if (m < 0) throw DomainError("Bernoulli index must be non-negative");
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<long>(cache.size()) <= m) {
    const long n = static_cast<long>(cache.size());
    // sum_{k<=n} C(n+1,k) B_k = 0
    Rational s = 0;
    Integer binom = 1;  // C(n+1, 0)
    for (long k = 0; k < n; ++k) {
      s += Rational(binom) * cache[static_cast<std::size_t>(k)];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    cache.push_back(-s / Rational(n + 1));
  }
  return cache[static_cast<std::size_t>(m)];
}

/// Coefficients of B_m(x), lowest degree first.
inline std::vector<Rational> bernoulli_polynomial(long m) {
  std::vector<Rational> p(static_cast<std::size_t>(m) + 1);
  Integer binom = 1;
  for (long k = 0; k <= m; ++k) {
    p[static_cast<std::size_t>(m - k)] = Rational(binom) * bernoulli_number(k);
    binom = binom * (m - k) / (k + 1);
  }
  return p;
}

inline Rational bernoulli_polynomial(long m, const Rational& x) {
  auto p = bernoulli_polynomial(m);
  Rational v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

/// B_m({x}) with the convention that the periodic first Bernoulli function vanishes at integers.
inline Rational periodic_bernoulli(long m, const Rational& x) {
  Rational f = frac(x);
  if (m == 1 && f == 0) return 0;
  return bernoulli_polynomial(m, f);
}

inline Integer divisor_sigma(long k, long n) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += integer_power(Integer(d), static_cast<unsigned long>(k));
    if (d != n / d) s += integer_power(Integer(n / d), static_cast<unsigned long>(k));
  }
  return s;
}

/// prod_{n>=1} (1 - q^n) + O(q^prec), by the pentagonal number theorem.
inline FracPowerSeries euler_product(const Rational& prec) {
  std::map<Rational, Rational> t;
  for (long k = 0;; ++k) {
    bool any = false;
    for (long sgn : {1L, -1L}) {
      if (k == 0 && sgn == -1) continue;
      long kk = sgn * k;
      long e = kk * (3 * kk - 1) / 2;
      if (Rational(e) < prec) {
        t[Rational(e)] += (k % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  return FracPowerSeries::from_terms(t, prec);
}

/// eta(scale * tau) = q^(scale/24) prod (1 - q^(scale n)) + O(q^prec).
inline FracPowerSeries eta(const Rational& scale, const Rational& prec) {
  if (scale <= 0) throw DomainError("eta scale must be positive");
  Rational lead = scale / 24;
  return euler_product((prec - lead) / scale).rescaled(scale).shifted(lead);
}

inline FracPowerSeries eta_power(const Rational& scale, long power, const Rational& prec) {
  Rational lead = scale * power / 24;
  return euler_product((prec - lead) / scale).pow(power, (prec - lead) / scale).rescaled(scale).shifted(lead);
}

/// Normalised Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k even >= 2.
inline FracPowerSeries eisenstein(long k, const Rational& prec) {
  if (k < 2 || k % 2 != 0) throw DomainError("Eisenstein weight must be even and at least 2");
  Rational factor = -Rational(2 * k) / bernoulli_number(k);
  std::map<Rational, Rational> t{{Rational(0), Rational(1)}};
  for (long n = 1; Rational(n) < prec; ++n) t[Rational(n)] = factor * Rational(divisor_sigma(k - 1, n));
  return FracPowerSeries::from_terms(t, prec);
}

inline FracPowerSeries delta(const Rational& prec) { return eta_power(1, 24, prec); }

inline FracPowerSeries j_invariant(const Rational& prec) {
  // E4^3 / Delta: Delta has valuation 1, so E4 is needed to prec + 1.
  auto e4 = eisenstein(4, prec + 1);
  return (e4 * e4 * e4 * delta(prec + 2).inverse(prec)).truncated(prec);
}

/// sum_{n in Z} q^(n^2).
inline FracPowerSeries jacobi_theta(const Rational& prec) {
  std::map<Rational, Rational> t;
  for (long n = 0; Rational(n * n) < prec; ++n) t[Rational(n * n)] += n == 0 ? 1 : 2;
  return FracPowerSeries::from_terms(t, prec);
}

/// Hurwitz class numbers H(0..nmax): H(0) = -1/12, H(n) = 0 unless n = 0, 3 mod 4.
inline std::vector<Rational> hurwitz_class_numbers(long nmax) {
  std::vector<Rational> h(static_cast<std::size_t>(std::max(nmax, 0L)) + 1, 0);
  h[0] = make_rational(-1, 12);
  for (long n = 1; n <= nmax; ++n) {
    if (n % 4 == 1 || n % 4 == 2) continue;
    // Reduced forms ax^2 + bxy + cy^2 of discriminant -n, primitive or not.
    Rational count = 0;
    for (long a = 1; 3 * a * a <= n; ++a) {
      for (long b = -a + 1; b <= a; ++b) {
        if (((b % 2) + 2) % 2 != n % 2) continue;
        long num = b * b + n;
        if (num % (4 * a) != 0) continue;
        long c = num / (4 * a);
        if (c < a) continue;
        if (c == a && b < 0) continue;
        if (a == b && c == a) count += make_rational(1, 3);
        else if (b == 0 && a == c) count += make_rational(1, 2);
        else count += 1;
      }
    }
    h[static_cast<std::size_t>(n)] = count;
  }
  return h;
}

/// The weight 3/2 generating function sum_n H(n) q^n.
inline FracPowerSeries hurwitz_generating_series(const Rational& prec) {
  long nmax = to_long(ceil_of(prec)) - 1;
  auto h = hurwitz_class_numbers(nmax);
  std::map<Rational, Rational> t;
  for (long n = 0; n <= nmax; ++n) t[Rational(n)] = h[static_cast<std::size_t>(n)];
  return FracPowerSeries::from_terms(t, prec);
}

}  // namespace thetalift
