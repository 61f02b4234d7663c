#pragma once
// Dense matrices over exact rings, Smith and Hermite forms over Z, and an
// LLL reduction of positive definite Gram matrices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "thetalift/arith/rational.hpp"

namespace thetalift {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

template <class T>
std::vector<Rational> mat_vec(const Matrix<T>& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw DomainError("matrix/vector dimension mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] += Rational(m(i, j)) * v[j];
  return out;
}

template <class T>
std::vector<Rational> vec_mat(const RationalVector& v, const Matrix<T>& m) {
  if (m.rows() != v.size()) throw DomainError("vector/matrix dimension mismatch");
  RationalVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * Rational(m(i, j));
  }
  return out;
}

/// u^T G v.
template <class T>
Rational bilinear(const Matrix<T>& g, const RationalVector& u, const RationalVector& v) {
  return dot(u, mat_vec(g, v));
}

inline Rational determinant(RatMatrix a) {
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

inline Integer determinant(const IntMatrix& a) { return Integer(determinant(to_rational(a)).get_num()); }

inline std::optional<RatMatrix> inverse(RatMatrix a) {
  if (!a.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline RatMatrix inverse_or_throw(const RatMatrix& a) {
  auto inv = inverse(a);
  if (!inv) throw DomainError("matrix is singular");
  return *inv;
}

/// Solves x A = b for a square invertible A.
inline RationalVector solve_left(const RatMatrix& a, const RationalVector& b) {
  return vec_mat(b, inverse_or_throw(a));
}

struct SmithForm {
  IntMatrix left;   // U, unimodular
  IntMatrix right;  // V, unimodular
  std::vector<Integer> diagonal;  // d_1 | d_2 | ..., non-negative, length min(rows, cols)
};

/// U A V = diag(d) with U, V unimodular.
inline SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {  // row dst -= f row src
    for (std::size_t j = 0; j < n; ++j) a(dst, j) -= f * a(src, j);
    for (std::size_t j = 0; j < m; ++j) u(dst, j) -= f * u(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {  // col dst -= f col src
    for (std::size_t i = 0; i < m; ++i) a(i, dst) -= f * a(i, src);
    for (std::size_t i = 0; i < n; ++i) v(i, dst) -= f * v(i, src);
  };
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(t, bad, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  SmithForm s{u, v, {}};
  for (std::size_t t = 0; t < steps; ++t) s.diagonal.push_back(a(t, t));
  return s;
}

/// Basis (rows, Hermite normal form) of the row lattice spanned by the given integer rows.
inline IntMatrix hermite_basis(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (p == m || abs(a(i, c)) < abs(a(p, c)))) p = i;
      if (p == m) break;
      a.swap_rows(r, p);
      bool others = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        for (std::size_t j = c; j < n; ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) others = true;
      }
      if (!others) break;
    }
    if (r < m && a(r, c) != 0) {
      if (a(r, c) < 0)
        for (std::size_t j = c; j < n; ++j) a(r, j) = -a(r, j);
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        if (q != 0)
          for (std::size_t j = c; j < n; ++j) a(i, j) -= q * a(r, j);
      }
      ++r;
    }
  }
  IntMatrix basis(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = a(i, j);
  return basis;
}

/// Rows spanning {x in Z^n : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::size_t rank = 0;
  for (const auto& d : s.diagonal)
    if (d != 0) ++rank;
  const std::size_t n = a.cols();
  IntMatrix k(n - rank, n);
  for (std::size_t c = rank; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) k(c - rank, i) = s.right(i, c);
  return k;
}

struct LllResult {
  IntMatrix transform;  // rows are the reduced basis in the original coordinates
  RatMatrix gram;       // transform * G * transform^T
};

/// LLL reduction of a positive definite Gram matrix. The Gram-Schmidt data is
/// kept in long double and only steers the choice of unimodular moves; the
/// transform and reduced Gram matrix are exact.
inline LllResult lll_reduce(const RatMatrix& gram, long double delta = 0.99L) {
  const std::size_t n = gram.rows();
  RatMatrix g = gram;
  IntMatrix t = IntMatrix::identity(n);
  if (n < 2) return {t, g};
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
  std::vector<long double> bstar(n, 0);
  auto refresh = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      long double s = g(k, j).get_d();
      for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[k][l] * bstar[l];
      mu[k][j] = s / bstar[j];
    }
    long double b = g(k, k).get_d();
    for (std::size_t l = 0; l < k; ++l) b -= mu[k][l] * mu[k][l] * bstar[l];
    bstar[k] = b;
  };
  auto subtract_row = [&](std::size_t k, std::size_t j, long r) {
    const Rational rr = r;
    const Rational gkk = g(k, k) - 2 * rr * g(k, j) + rr * rr * g(j, j);
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      g(k, l) -= rr * g(j, l);
      g(l, k) = g(k, l);
    }
    g(k, k) = gkk;
    for (std::size_t l = 0; l < n; ++l) t(k, l) -= r * t(j, l);
  };
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    g.swap_rows(a, b);
    g.swap_cols(a, b);
    t.swap_rows(a, b);
  };
  refresh(0);
  std::size_t k = 1;
  long guard = 0;
  while (k < n && guard++ < 1000000) {
    refresh(k);
    for (std::size_t jj = k; jj-- > 0;) {
      if (std::fabs(mu[k][jj]) > 0.51L) {
        long r = std::lround(static_cast<double>(mu[k][jj]));
        subtract_row(k, jj, r);
        for (std::size_t l = 0; l < jj; ++l) mu[k][l] -= r * mu[jj][l];
        mu[k][jj] -= r;
      }
    }
    refresh(k);
    if (bstar[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      swap_basis(k, k - 1);
      refresh(k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
  return {t, g};
}

}  // namespace thetalift
