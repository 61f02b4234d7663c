#pragma once
// Arithmetic expressions over the named q-series, e.g. "E4^3 / Delta" or
// "eta^16 / eta(2)^8". Names: Ek (k even), Delta, j, eta or eta(s) for
// eta(s tau), theta (sum q^(n^2)), H (Hurwitz generating series), q, and
// rational literals. Operators + - * / and ^ with an integer exponent.

#include <algorithm>
#include <cctype>

#include "thetalift/qseries/modular.hpp"

namespace thetalift {

namespace detail {

class SeriesParser {
 public:
  SeriesParser(std::string_view text, Rational prec) : s_(text), prec_(std::move(prec)) {}

  FracPowerSeries parse() {
    FracPowerSeries v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  Rational prec_;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("series expression, position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FracPowerSeries sum() {
    FracPowerSeries v = product();
    for (;;) {
      if (accept('+')) v = v + product();
      else if (accept('-')) v = v - product();
      else return v;
    }
  }

  FracPowerSeries product() {
    FracPowerSeries v = unary();
    for (;;) {
      if (accept('*')) v = v * unary();
      else if (accept('/')) {
        FracPowerSeries d = unary();
        if (d.empty()) fail("division by a series with no known nonzero term");
        v = v * d.inverse(prec_);
      } else
        return v;
    }
  }

  FracPowerSeries unary() {
    if (accept('-')) return -unary();
    return power();
  }

  FracPowerSeries power() {
    FracPowerSeries base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    long n = to_long(integer());
    if (negative) n = -n;
    return base.pow(n, prec_);
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational number() {
    Rational n(integer());
    skip();
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      n /= Rational(integer());
    }
    return n;
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  FracPowerSeries atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      FracPowerSeries v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return FracPowerSeries::constant(number());
    std::string id = name();
    if (id.empty()) fail("expected a series name");
    // Factors are computed a little beyond the target so products and inverses keep it.
    const Rational p = prec_ + 2;
    if (id == "Delta") return delta(p);
    if (id == "j") return j_invariant(p);
    if (id == "theta") return jacobi_theta(p);
    if (id == "H") return hurwitz_generating_series(p);
    if (id == "q") return FracPowerSeries::monomial(1, 1);
    if (id == "eta") {
      Rational scale = 1;
      if (accept('(')) {
        scale = number();
        if (!accept(')')) fail("expected ')'");
      }
      return eta(scale, p);
    }
    if (id.size() >= 2 && id[0] == 'E' && std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(c); }))
      return eisenstein(std::stol(id.substr(1)), p);
    fail("unknown series \"" + id + "\"");
  }
};

}  // namespace detail

/// Evaluates the expression through q^prec (exclusive). Working precision is
/// raised until the result is known that far; otherwise PrecisionError.
inline FracPowerSeries evaluate_series(std::string_view text, const Rational& prec) {
  std::optional<Rational> best;
  for (long extra = 0; extra <= 64; extra = extra == 0 ? 1 : 2 * extra) {
    FracPowerSeries v = detail::SeriesParser(text, prec + extra).parse();
    if (!v.truncation() || *v.truncation() >= prec) return v.truncated(prec);
    best = v.truncation();
  }
  throw PrecisionError("expression cannot be expanded to the requested precision", *best);
}

}  // namespace thetalift
