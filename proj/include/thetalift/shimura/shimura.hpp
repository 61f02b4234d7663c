#pragma once
// The singular Shimura lift for a rank one lattice of norm 2: a plus-space
// coefficient stream c(n) of weight m + 1/2 goes to a form of weight 2m with
// b(n) = sum_{d | n} d^(m-1) c(n^2/d^2).

#include <map>

#include "thetalift/arith/cyclotomic.hpp"
#include "thetalift/qseries/modular.hpp"

namespace thetalift {

struct ShimuraInput {
  long m_plus = 2;
  std::map<long, Rational> coefficients;  // c(n)
  long precision = 0;                     // c(n) known for n < precision
};

inline void validate_shimura_input(const ShimuraInput& in) {
  if (in.m_plus < 2)
    throw DomainError("m+ = 1 needs an extra constant from the reduced lattice; only m+ >= 2 is supported");
  for (const auto& [n, c] : in.coefficients) {
    if (c == 0) continue;
    long r = ((n % 4) + 4) % 4;
    if (r != 0 && r != 1) throw InputError("c(" + std::to_string(n) + ") is nonzero but n is not 0 or 1 mod 4");
    if (n >= in.precision) throw InputError("coefficient c(" + std::to_string(n) + ") lies beyond the stated precision");
  }
}

namespace detail {

inline Rational stream_coefficient(const ShimuraInput& in, long n) {
  if (n >= in.precision)
    throw PrecisionError("the lift needs c(" + std::to_string(n) + ") but the input is known only below " +
                         std::to_string(in.precision),
                         Rational(n + 1));
  auto it = in.coefficients.find(n);
  return it == in.coefficients.end() ? Rational(0) : it->second;
}

/// Largest p with (p - 1)^2 < precision: b(n) for n < p uses c up to (p - 1)^2.
inline long reachable_precision(const ShimuraInput& in) {
  long p = 1;
  while ((p * p) < in.precision) ++p;
  return p;
}

}  // namespace detail

/// Constant term -sum_delta c_{delta z}(0) sum_{0 < eps <= N} N^(m-1) e(delta eps / N) B_m(eps / N) / 2m,
/// with c0[delta] = c_{delta z}(0) for delta mod N.
inline CyclotomicNumber shimura_constant(long m_plus, const std::vector<Rational>& c0) {
  const long n = static_cast<long>(c0.size());
  if (n < 1) throw InputError("constant term needs at least one class");
  CyclotomicNumber total(0);
  const Rational scale = power(Rational(n), m_plus - 1) / (2 * m_plus);
  for (long delta = 0; delta < n; ++delta) {
    if (c0[static_cast<std::size_t>(delta)] == 0) continue;
    for (long eps = 1; eps <= n; ++eps) {
      Rational b = bernoulli_polynomial(m_plus, make_rational(eps, n));
      total -= e(make_rational(delta * eps, n)).scaled(c0[static_cast<std::size_t>(delta)] * scale * b);
    }
  }
  return total;
}

/// The lift through q^(out_precision - 1), by the divisor sum.
inline FracPowerSeries shimura_lift(const ShimuraInput& in, long out_precision) {
  validate_shimura_input(in);
  if (out_precision > detail::reachable_precision(in))
    throw PrecisionError("output precision " + std::to_string(out_precision) + " needs c(" +
                         std::to_string((out_precision - 1) * (out_precision - 1)) + ")",
                         Rational(detail::reachable_precision(in)));
  std::map<Rational, Rational> terms;
  terms[0] = shimura_constant(in.m_plus, {detail::stream_coefficient(in, 0)}).to_rational();
  for (long n = 1; n < out_precision; ++n) {
    Rational b = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) b += power(Rational(d), in.m_plus - 1) * detail::stream_coefficient(in, (n / d) * (n / d));
    terms[n] = b;
  }
  return FracPowerSeries::from_terms(terms, out_precision);
}

/// The same lift summed as sum_{n, m > 0} n^(m+ - 1) c(m^2) q^(mn).
inline FracPowerSeries shimura_lift_double_sum(const ShimuraInput& in, long out_precision) {
  validate_shimura_input(in);
  if (out_precision > detail::reachable_precision(in))
    throw PrecisionError("output precision " + std::to_string(out_precision) + " needs c(" +
                         std::to_string((out_precision - 1) * (out_precision - 1)) + ")",
                         Rational(detail::reachable_precision(in)));
  std::map<Rational, Rational> terms;
  terms[0] = -detail::stream_coefficient(in, 0) * bernoulli_number(in.m_plus) / (2 * in.m_plus);
  for (long n = 1; n < out_precision; ++n)
    for (long m = 1; m * n < out_precision; ++m)
      terms[m * n] += power(Rational(n), in.m_plus - 1) * detail::stream_coefficient(in, m * m);
  return FracPowerSeries::from_terms(terms, out_precision);
}

struct EtaQuotientCheck {
  bool agrees = false;
  long checked_through = -1;  // last exponent compared
  bool precision_limited = false;
};

/// Compares a lift with 64 Delta / E4^2 through q^through.
inline EtaQuotientCheck verify_eta_quotient(const FracPowerSeries& lift, long through) {
  EtaQuotientCheck out;
  long top = through;
  if (lift.truncation() && Rational(top) >= *lift.truncation()) {
    top = to_long(ceil_of(*lift.truncation())) - 1;
    out.precision_limited = true;
  }
  const Rational prec(top + 1);
  FracPowerSeries e4 = eisenstein(4, prec);
  FracPowerSeries target = (delta(prec) * (e4 * e4).inverse(prec)).scaled(64);
  out.checked_through = top;
  out.agrees = top >= 1;
  for (long n = 0; n <= top && out.agrees; ++n)
    if (lift.coefficient(n) != target.coefficient(n)) out.agrees = false;
  return out;
}

/// Binomial coefficient with the convention that it vanishes for a negative
/// lower index; the upper index may be any integer.
inline Integer integer_binomial(long top, long k) {
  if (k < 0) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

struct BinomialIdentity {
  Integer lhs;
  Integer rhs;
};

/// Both sides of
///   sum_j (-1)^j (C choose j) (A - 2j + C - B - 1 choose A - 2j)
///     = sum_j (-1)^j (C choose A - j) (B choose j).
inline BinomialIdentity binomial_vanishing(long a, long b, long c) {
  BinomialIdentity out{0, 0};
  // Terms vanish for j < 0, and for 2j > A (left) or j > A (right).
  for (long j = 0; 2 * j <= a; ++j)
    out.lhs += (j % 2 ? -1 : 1) * integer_binomial(c, j) * integer_binomial(a - 2 * j + c - b - 1, a - 2 * j);
  for (long j = 0; j <= a; ++j) out.rhs += (j % 2 ? -1 : 1) * integer_binomial(c, a - j) * integer_binomial(b, j);
  return out;
}

}  // namespace thetalift
