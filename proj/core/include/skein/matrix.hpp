#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "skein/big_complex.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/error.hpp"

namespace skein {

inline BigComplex zero_like(const BigComplex& x) { return BigComplex(x.precision()); }
inline CyclotomicNumber zero_like(const CyclotomicNumber& x) {
  if (!x.field()) return CyclotomicNumber(0L);
  return CyclotomicNumber(x.field(), {mpq_class(0)});
}
inline BigComplex integer_like(const BigComplex& x, long v) { return BigComplex(v, x.precision()); }
inline CyclotomicNumber integer_like(const CyclotomicNumber& x, long v) {
  if (!x.field()) return CyclotomicNumber(v);
  return CyclotomicNumber(x.field(), {mpq_class(v)});
}

/// Dense row-major matrix over one of the scalar backends.
template <class F>
class Matrix {
 public:
  using value_type = F;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const F& zero, const F& one) {
    return scalar(n, one, zero);
  }
  static Matrix scalar(std::size_t n, const F& value, const F& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<F>& data() { return data_; }
  const std::vector<F>& data() const { return data_; }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    if (empty()) return Matrix();
    Matrix t(cols_, rows_, zero_like(data_.front()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw SkeinError(ErrorCode::DimensionMismatch,
                       std::string("matrix shapes differ for '") + op + "': " +
                           std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                           std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
  }

  static Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw SkeinError(ErrorCode::DimensionMismatch,
                       "cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                           " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    if (a.empty() || b.empty()) return Matrix(a.rows_, b.cols_, F());
    Matrix out(a.rows_, b.cols_, zero_like(a.data_.front()));
    if constexpr (std::is_same_v<F, BigComplex>) {
      BigFloat scratch[2] = {BigFloat(a.data_.front().precision()),
                             BigFloat(a.data_.front().precision())};
      for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
          const BigComplex& aik = a(i, k);
          if (aik.is_zero()) continue;
          for (std::size_t j = 0; j < b.cols_; ++j) {
            if (!b(k, j).is_zero()) out(i, j).add_product(aik, b(k, j), scratch);
          }
        }
    } else {
      for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
          const F& aik = a(i, k);
          if (aik.is_zero()) continue;
          for (std::size_t j = 0; j < b.cols_; ++j) {
            if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
          }
        }
    }
    return out;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Largest entry magnitude; 0 for an empty matrix.
template <class F>
double max_abs(const Matrix<F>& m) {
  double out = 0.0;
  for (const auto& x : m.data()) out = std::max(out, x.magnitude());
  return out;
}

/// Largest magnitude among the entries that are off the diagonal, and the
/// spread of the diagonal around its mean. Zero for an exact scalar matrix.
template <class F>
struct ScalarDeviation {
  F mean;
  double deviation = 0.0;
};

template <class F>
ScalarDeviation<F> scalar_part(const Matrix<F>& m) {
  if (!m.is_square() || m.empty()) {
    throw SkeinError(ErrorCode::DimensionMismatch, "scalar part needs a nonempty square matrix");
  }
  const std::size_t n = m.rows();
  F sum = zero_like(m(0, 0));
  for (std::size_t i = 0; i < n; ++i) sum += m(i, i);
  ScalarDeviation<F> out{sum / integer_like(sum, static_cast<long>(n)), 0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = i == j ? (m(i, j) - out.mean).magnitude() : m(i, j).magnitude();
      out.deviation = std::max(out.deviation, d);
    }
  return out;
}

/// Block-diagonal direct sum.
template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  const F zero = zero_like(a.empty() ? b(0, 0) : a(0, 0));
  Matrix<F> out(a.rows() + b.rows(), a.cols() + b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

}  // namespace skein
