#pragma once
// Exact enumeration of lattice vectors of bounded norm for a positive definite
// rational quadratic form.
//
// After LLL reduction the search is a Fincke-Pohst recursion carried out in
// integers only. Write d_i for the leading principal minors of the (scaled,
// integral) Gram matrix and S_i for the Schur complement that eliminates the
// first i coordinates. Then F_i = d_i x^T S_i x is an integer, and fixing x_i
// given x_{>i} satisfies
//     d_{i+1} F_i = d_i F_{i+1} + (d_{i+1} x_i + beta_i)^2,
// beta_i = sum_{j>i} (d_i S_i)_{ij} x_j. The admissible x_i therefore form
// the exact integer interval |d_{i+1} x_i + beta_i| <= isqrt(d_i (B d_{i+1} - F_{i+1})).

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <type_traits>
#include <vector>

#include "thetalift/arith/matrix.hpp"

namespace thetalift {

namespace detail {

inline __int128 isqrt128(__int128 v) {
  if (v <= 0) return 0;
  __int128 r = static_cast<__int128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline __int128 floor_div128(__int128 a, __int128 b) {  // b > 0
  __int128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline __int128 ceil_div128(__int128 a, __int128 b) {  // b > 0
  __int128 q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

inline Integer isqrt_z(const Integer& v) {
  if (v <= 0) return 0;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline Integer floor_div_z(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div_z(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline __int128 to128(const Integer& z) {
  // Values are checked against a magnitude budget before conversion.
  Integer absz = abs(z);
  __int128 r = 0;
  std::string s = absz.get_str(16);
  for (char c : s) r = r * 16 + (c <= '9' ? c - '0' : c - 'a' + 10);
  return z < 0 ? -r : r;
}

inline Rational from128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  std::string s;
  if (u == 0) s = "0";
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  std::reverse(s.begin(), s.end());
  Integer z(s);
  return Rational(neg ? Integer(-z) : z);
}

struct EnumerationPlan {
  std::size_t n = 0;
  Integer scale;                 // integral form = scale * form
  Integer bound;                 // floor(scale * B)
  IntMatrix transform;           // rows: reduced basis in original coordinates
  std::vector<Integer> minors;   // d_0 .. d_n
  IntMatrix beta;                // beta(i, j) = (d_i S_i)_{ij}, j > i
  bool fits_64 = false;
  bool fits_128 = false;
};

inline EnumerationPlan make_plan(const RatMatrix& form, const Rational& bound, bool strict) {
  EnumerationPlan p;
  p.n = form.rows();
  Integer scale = 1;
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) scale = lcm(scale, Integer(form(i, j).get_den()));
  p.scale = scale;
  p.bound = strict ? Integer(ceil_of(bound * Rational(scale)) - 1) : floor_of(bound * Rational(scale));
  RatMatrix scaled(p.n, p.n);
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) scaled(i, j) = form(i, j) * Rational(scale);
  LllResult red = lll_reduce(scaled);
  p.transform = red.transform;
  const RatMatrix& g = red.gram;
  // Successive Schur complements.
  p.minors.assign(p.n + 1, 1);
  p.beta = IntMatrix(p.n, p.n);
  RatMatrix s = g;
  Rational d = 1;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (s(i, i) <= 0) throw DomainError("enumeration form is not positive definite");
    for (std::size_t j = i + 1; j < p.n; ++j) {
      Rational v = s(i, j) * d;
      if (!is_integral(v)) throw std::logic_error("non-integral Schur entry");
      p.beta(i, j) = Integer(v.get_num());
    }
    Rational next = d * s(i, i);
    if (!is_integral(next)) throw std::logic_error("non-integral leading minor");
    p.minors[i + 1] = Integer(next.get_num());
    for (std::size_t r = i + 1; r < p.n; ++r) {
      if (s(r, i) == 0) continue;
      Rational f = s(r, i) / s(i, i);
      for (std::size_t c = i + 1; c < p.n; ++c) s(r, c) -= f * s(i, c);
    }
    d = next;
  }
  // Magnitude budget for 128-bit arithmetic: |x_j| <= sqrt(B (G^-1)_jj).
  if (p.n > 0 && p.bound >= 0) {
    RatMatrix ginv = inverse_or_throw(g);
    long double b = p.bound.get_d();
    std::vector<long double> xmax(p.n);
    for (std::size_t j = 0; j < p.n; ++j) xmax[j] = std::sqrt(b * ginv(j, j).get_d()) + 1;
    long double worst = 0;
    for (std::size_t i = 0; i < p.n; ++i) {
      long double di = p.minors[i].get_d(), dn = p.minors[i + 1].get_d();
      long double betamax = 0;
      for (std::size_t j = i + 1; j < p.n; ++j) betamax += std::fabs(p.beta(i, j).get_d()) * xmax[j];
      long double t = betamax + dn * xmax[i];
      worst = std::max({worst, (b + 1) * di * dn, t * t, di * (b + 1) * dn * dn});
    }
    p.fits_64 = worst < 1e18L;
    p.fits_128 = worst < 1e36L;
  }
  return p;
}

inline long isqrt64(long v) {
  if (v <= 0) return 0;
  long r = static_cast<long>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

template <class Z>
struct IntOps {
  static Z from(const Integer& v) {
    if constexpr (std::is_same_v<Z, __int128>) return to128(v);
    else if constexpr (std::is_same_v<Z, long>) return to_long(v);
    else return Z(v);
  }
  static Z isqrt(const Z& v) {
    if constexpr (std::is_same_v<Z, __int128>) return isqrt128(v);
    else if constexpr (std::is_same_v<Z, long>) return isqrt64(v);
    else return isqrt_z(v);
  }
  static Z fdiv(const Z& a, const Z& b) {
    if constexpr (std::is_same_v<Z, __int128>) return floor_div128(a, b);
    else if constexpr (std::is_same_v<Z, long>) return a / b - ((a % b != 0) && (a < 0) ? 1 : 0);
    else return floor_div_z(a, b);
  }
  static Z cdiv(const Z& a, const Z& b) {
    if constexpr (std::is_same_v<Z, __int128>) return ceil_div128(a, b);
    else if constexpr (std::is_same_v<Z, long>) return a / b + ((a % b != 0) && (a > 0) ? 1 : 0);
    else return ceil_div_z(a, b);
  }
  static long to_l(const Z& v) {
    if constexpr (std::is_same_v<Z, __int128> || std::is_same_v<Z, long>) return static_cast<long>(v);
    else return to_long(v);
  }
};

// Depth-first search over the levels n-1, ..., 0. Row partial sums
// sig[k][j] = sum_{l >= j} beta(k, l) x_l are refreshed lazily: begin[i] is the
// highest index whose coordinate changed since row i-1 was last refreshed.
template <class Z, class Leaf>
class PlanRunner {
 public:
  // With half_space set, only vectors whose last nonzero coordinate is
  // positive (and the zero vector) are visited.
  PlanRunner(const EnumerationPlan& p, Leaf& leaf, bool half_space) : n_(p.n), half_(half_space), leaf_(leaf) {
    using O = IntOps<Z>;
    bound_ = O::from(p.bound);
    minors_.resize(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) minors_[i] = O::from(p.minors[i]);
    beta_.assign(n_, std::vector<Z>(n_ + 1, Z(0)));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) beta_[i][j] = O::from(p.beta(i, j));
    sig_.assign(n_, std::vector<Z>(n_ + 1, Z(0)));
    begin_.assign(n_ + 1, n_ == 0 ? 0 : n_ - 1);
    x_.assign(n_, 0);
  }

  void run() {
    if (n_ == 0) {
      leaf_(x_, Z(0));
      return;
    }
    level(n_ - 1, Z(0), true);
  }

 private:
  void level(std::size_t i, const Z& f_next, bool zero_above) {
    using O = IntOps<Z>;
    const Z b = i + 1 < n_ ? sig_[i][i + 1] : Z(0);
    const Z& di = minors_[i];
    const Z& dn = minors_[i + 1];
    Z rad = di * (bound_ * dn - f_next);
    if (rad < 0) return;
    Z r = O::isqrt(rad);
    long lo = O::to_l(O::cdiv(-r - b, dn));
    long hi = O::to_l(O::fdiv(r - b, dn));
    if (half_ && zero_above && lo < 0) lo = 0;
    if (lo > hi) return;
    Z t = dn * Z(lo) + b;
    Z fi = (di * f_next + t * t) / dn;
    for (long xi = lo;; ++xi) {
      x_[i] = xi;
      if (i == 0) {
        leaf_(x_, fi);
      } else {
        std::vector<Z>& row = sig_[i - 1];
        const std::vector<Z>& coeff = beta_[i - 1];
        for (std::size_t j = begin_[i] + 1; j-- > i;) row[j] = row[j + 1] + coeff[j] * Z(x_[j]);
        if (begin_[i] > begin_[i - 1]) begin_[i - 1] = begin_[i];
        begin_[i] = i;
        level(i - 1, fi, zero_above && xi == 0);
      }
      if (xi == hi) break;
      // F_i(x + 1) - F_i(x) = 2 t + d_{i+1}.
      fi += 2 * t + dn;
      t += dn;
    }
  }

  std::size_t n_;
  bool half_;
  Leaf& leaf_;
  Z bound_;
  std::vector<Z> minors_;
  std::vector<std::vector<Z>> beta_;
  std::vector<std::vector<Z>> sig_;
  std::vector<std::size_t> begin_;
  std::vector<long> x_;
};

template <class Z, class Leaf>
void run_plan(const EnumerationPlan& p, Leaf&& leaf, bool half_space = false) {
  PlanRunner<Z, std::remove_reference_t<Leaf>> runner(p, leaf, half_space);
  runner.run();
}

}  // namespace detail

/// Calls visit(coords, value) for every x in Z^n with x^T form x <= bound
/// (< bound when strict). Coordinates are in the original basis. Visiting
/// order is deterministic.
template <class Visit>
void for_each_short_vector(const RatMatrix& form, const Rational& bound, Visit&& visit, bool strict = false) {
  if (!form.is_symmetric()) throw DomainError("enumeration form must be symmetric");
  if (bound < 0 || (strict && bound == 0)) return;
  detail::EnumerationPlan plan = detail::make_plan(form, bound, strict);
  const std::size_t n = plan.n;
  std::vector<long> orig(n);
  const Rational inv_scale = Rational(1) / Rational(plan.scale);
  std::vector<std::vector<long>> t(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = to_long(plan.transform(i, j));
  auto emit = [&](const std::vector<long>& y, const Rational& value) {
    std::fill(orig.begin(), orig.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (y[i] != 0)
        for (std::size_t j = 0; j < n; ++j) orig[j] += y[i] * t[i][j];
    visit(static_cast<const std::vector<long>&>(orig), value * inv_scale);
  };
  if (plan.fits_64) {
    detail::run_plan<long>(plan, [&](const std::vector<long>& y, long f) { emit(y, Rational(f)); });
  } else if (plan.fits_128) {
    detail::run_plan<__int128>(plan, [&](const std::vector<long>& y, __int128 f) { emit(y, detail::from128(f)); });
  } else {
    detail::run_plan<Integer>(plan, [&](const std::vector<long>& y, const Integer& f) { emit(y, Rational(f)); });
  }
}

/// Number of vectors of each value x^T form x <= bound (< bound when strict).
inline std::map<Rational, Integer> count_short_vectors(const RatMatrix& form, const Rational& bound,
                                                       bool strict = false) {
  if (!form.is_symmetric()) throw DomainError("enumeration form must be symmetric");
  if (bound < 0 || (strict && bound == 0)) return {};
  detail::EnumerationPlan plan = detail::make_plan(form, bound, strict);
  std::map<Rational, Integer> out;
  const Rational inv_scale = Rational(1) / Rational(plan.scale);
  if (plan.fits_64 && plan.bound < 50000000) {
    // Pairs {x, -x} are counted once; only the zero vector has value 0.
    std::vector<unsigned long> raw(static_cast<std::size_t>(plan.bound.get_si()) + 1, 0);
    detail::run_plan<long>(plan, [&](const std::vector<long>&, long f) { ++raw[static_cast<std::size_t>(f)]; }, true);
    for (std::size_t f = 0; f < raw.size(); ++f)
      if (raw[f] != 0) out[Rational(static_cast<long>(f)) * inv_scale] += Integer(f == 0 ? raw[f] : 2 * raw[f]);
  } else if (plan.fits_128) {
    std::map<__int128, unsigned long> raw;
    detail::run_plan<__int128>(plan, [&](const std::vector<long>&, __int128 f) { ++raw[f]; });
    for (const auto& [f, c] : raw) out[detail::from128(f) * inv_scale] += Integer(c);
  } else {
    std::map<Integer, unsigned long> raw;
    detail::run_plan<Integer>(plan, [&](const std::vector<long>&, const Integer& f) { ++raw[f]; });
    for (const auto& [f, c] : raw) out[Rational(f) * inv_scale] += Integer(c);
  }
  return out;
}

struct ShortVector {
  std::vector<long> coords;
  Rational value;
  friend bool operator<(const ShortVector& a, const ShortVector& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.coords < b.coords;
  }
};

/// All x with x^T form x <= bound, sorted by value then coordinates.
inline std::vector<ShortVector> short_vectors(const RatMatrix& form, const Rational& bound) {
  std::vector<ShortVector> out;
  for_each_short_vector(form, bound, [&](const std::vector<long>& x, const Rational& v) { out.push_back({x, v}); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace thetalift
