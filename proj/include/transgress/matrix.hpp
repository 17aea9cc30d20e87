#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace transgress {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range caller input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{0})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }

  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference dimension mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
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

/// Integral matrix with the same entries, or nullopt-style failure via bool.
inline bool try_to_integral(const RatMatrix& m, IntMatrix& out) {
  out = IntMatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (boost::multiprecision::denominator(x) != 1) return false;
      out(i, j) = boost::multiprecision::numerator(x);
    }
  return true;
}

/// Floor division for arbitrary-precision integers (b != 0).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Nonnegative residue of a modulo m (m > 0).
inline std::int64_t mod_residue(const Integer& a, std::int64_t m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace transgress
