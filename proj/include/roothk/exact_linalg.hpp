#pragma once

// Exact integer / rational matrices on top of GMP.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "roothk/errors.hpp"

namespace roothk {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionMismatch("entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
    Matrix p(a.rows_, b.cols_);
    T tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          tmp = aik * b(k, j);
          p(i, j) += tmp;
        }
      }
    return p;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix sum shape");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix difference shape");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

struct SmithForm {
  /// Invariant factors d1 | d2 | ... followed by zeros; length min(rows, cols).
  std::vector<Integer> diag;
  IntMatrix left;   // rows x rows, unimodular
  IntMatrix right;  // cols x cols, unimodular
};

/// left * m * right == diagonal(diag), with nonnegative divisibility chain.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
/// Zero rows are dropped, so the result has rank(m) rows. Pivots are
/// positive and entries above a pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Reduced row echelon form; `pivots` receives pivot columns when non-null.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of the right kernel, one vector per free column of rref(m), with a
/// 1 in that column. Deterministic for a given input.
std::vector<RatVector> rational_kernel(const RatMatrix& m);

/// Kernel of the vertical stack of `ms` (the common kernel).
std::vector<RatVector> stack_and_common_kernel(std::span<const RatMatrix> ms);

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

RatMatrix inverse(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);
/// Throws ConstructionError if any entry is non-integral.
IntMatrix to_integer(const RatMatrix& m);

/// Multiply by the lcm of denominators and divide by the gcd of numerators,
/// so the result is integral with content 1. Sign of the first nonzero
/// entry is kept. The zero matrix maps to itself.
IntMatrix primitive_integral(const RatMatrix& m);

/// Multiply by the lcm of denominators only; content is kept.
IntMatrix clear_denominators(const RatMatrix& m);

bool is_symmetric(const RatMatrix& m);
/// Sylvester's criterion on leading principal minors.
bool is_positive_definite(const RatMatrix& m);

/// "p/q" or "p" for integers.
std::string to_exact_string(const Rational& q);

}  // namespace roothk
