#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "common/error.hpp"
#include "common/scalar.hpp"

namespace flagcone {

// Small dense row-major matrix. Works for double, mpq_class and the complex
// scalar types; pivoting only needs to know whether an entry is zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, T{});
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols(), T{});
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class T>
Matrix<T> scaled(Matrix<T> a, const T& s) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

inline bool entry_is_zero(double x) { return x == 0.0; }
inline bool entry_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline double entry_size(double x) { return std::abs(x); }
inline double entry_size(const mpq_class& x) { return std::abs(x.get_d()); }
inline bool entry_is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }
inline double entry_size(const std::complex<double>& x) { return std::abs(x); }
inline bool entry_is_zero(const GaussianRational& x) { return ScalarTraits<GaussianRational>::is_zero(x); }
inline double entry_size(const GaussianRational& x) { return ScalarTraits<GaussianRational>::magnitude(x); }

// Gauss-Jordan inverse over any of the scalar fields above.
template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
  require(m.rows() == m.cols(), "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix<R> a = m;
  Matrix<R> inv = Matrix<R>::identity(n, R(0), R(1));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = 0.0;
    for (int r = col; r < n; ++r) {
      if (entry_is_zero(a(r, col))) continue;
      double size = entry_size(a(r, col));
      if (pivot < 0 || size > best) {
        pivot = r;
        best = size;
      }
    }
    if (pivot < 0) fail(ErrorCode::kInternalConsistency, "singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    R p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || entry_is_zero(a(r, col))) continue;
      R f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Pfaffian of an antisymmetric matrix over a field, by symplectic
// elimination: Pf(A) = Pf(S) Pf(D + X^T S^-1 X) for A = [[S, X], [-X^T, D]].
template <class R>
R pfaffian(Matrix<R> a) {
  const int n = a.rows();
  require(n == a.cols(), "Pfaffian of a non-square matrix");
  if (n % 2 == 1) return R(0);
  R pf(1);
  for (int k = 0; k < n; k += 2) {
    int pivot = -1;
    double best = 0.0;
    for (int p = k + 1; p < n; ++p) {
      if (entry_is_zero(a(k, p))) continue;
      double size = entry_size(a(k, p));
      if (pivot < 0 || size > best) {
        pivot = p;
        best = size;
      }
    }
    if (pivot < 0) return R(0);
    if (pivot != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(a(k + 1, j), a(pivot, j));
      for (int i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, pivot));
      pf = -pf;
    }
    R piv = a(k, k + 1);
    pf *= piv;
    for (int i = k + 2; i < n; ++i)
      for (int j = k + 2; j < n; ++j) {
        R u = a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j);
        a(i, j) += u / piv;
      }
  }
  return pf;
}

// Max-norm of a real matrix, returned in double precision.
template <class R>
double max_abs(const Matrix<R>& m) {
  double out = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out = std::max(out, abs_value(m(i, j)));
  return out;
}

template <class R>
bool all_zero(const Matrix<R>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_exact_zero(m(i, j))) return false;
  return true;
}

}  // namespace flagcone
