#pragma once

#include "k3bn/integer.hpp"

#include <cstddef>
#include <vector>

namespace k3bn {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x);

Integer determinant(const IntMatrix& a);

/// Column-style Hermite normal form: H = A * U with U unimodular and H in
/// lower echelon form (pivot entries positive, entries left of a pivot
/// reduced into [0, pivot)). Column operations only, so the last
/// cols - rank columns of U span the integer kernel of A.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
  IntMatrix u_inv;
  std::size_t rank = 0;
};
HermiteResult column_hermite(const IntMatrix& a);

/// Basis (as columns) of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Unimodular matrix whose first column is the given primitive vector.
/// Throws InputError when the vector is not primitive.
IntMatrix unimodular_completion(const std::vector<Integer>& v);

/// Inverse of a unimodular matrix (throws if |det| != 1).
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Smith normal form diagonal (invariant factors, zeros dropped).
std::vector<Integer> smith_invariants(const IntMatrix& a);

}  // namespace k3bn
