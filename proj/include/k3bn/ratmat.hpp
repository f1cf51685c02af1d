#pragma once

#include "k3bn/integer.hpp"

#include <cstddef>
#include <vector>

namespace k3bn {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& x);

/// Kronecker product a (x) b.
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a);
std::size_t rank(RatMatrix a);
/// Columns form a basis of the right kernel.
RatMatrix kernel(const RatMatrix& a);
/// Throws InputError when singular.
RatMatrix inverse(const RatMatrix& a);
Rational determinant(RatMatrix a);
/// True when b lies in the column span of a.
bool in_column_span(const RatMatrix& a, const std::vector<Rational>& b);

/// Horizontal concatenation [a | b]; row counts must match.
RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b);

}  // namespace k3bn
