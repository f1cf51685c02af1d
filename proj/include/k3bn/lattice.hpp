#pragma once

// Integer quadratic-form arithmetic on Picard lattices and classification
// of primitive classes of a given square (isotropic and (-2)-classes).

#include "k3bn/integer.hpp"
#include "k3bn/intmat.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace k3bn {

/// Coefficients of a divisor class in a fixed lattice basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<long> coords);

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Integer>(rank, 0)); }
  static DivisorClass basis(std::size_t rank, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;
  /// gcd of the coordinates is 1; the zero class is not primitive.
  bool is_primitive() const;

  DivisorClass operator-() const;
  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator*(const Integer& k, const DivisorClass& x);

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) { return x.coords_ == y.coords_; }
  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

class PicardLattice {
 public:
  PicardLattice() = default;
  /// Throws InputError unless gram is square and symmetric and labels fit.
  PicardLattice(IntMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Integer determinant() const;

  /// Rank 2 with det < 0, i.e. signature (1,1).
  bool is_hyperbolic_plane_type() const;

  /// Basis vector of largest positive square (first on ties), the sign
  /// reference used when no other class is supplied.
  DivisorClass default_reference() const;

  friend bool operator==(const PicardLattice&, const PicardLattice&) = default;

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

/// x^T G y. Throws InputError on a rank mismatch.
Integer pair(const PicardLattice& lattice, const DivisorClass& x, const DivisorClass& y);
Integer square(const PicardLattice& lattice, const DivisorClass& x);

/// Chooses between x and -x: positive pairing with the reference wins;
/// if the pairing is zero, the lexicographically larger coordinates win.
DivisorClass normalize_sign(const PicardLattice& lattice, const DivisorClass& x, const DivisorClass& reference);

/// All primitive x with x^2 = target and every |coordinate| <= bound, one
/// per +-pair (sign per normalize_sign), sorted lexicographically. Rank 2
/// solves the binary quadratic row by row; higher rank scans the box.
std::vector<DivisorClass> classes_of_square(const PicardLattice& lattice, const Integer& target,
                                            const Integer& bound, const DivisorClass& reference);
std::vector<DivisorClass> classes_of_square(const PicardLattice& lattice, const Integer& target,
                                            const Integer& bound);

std::vector<DivisorClass> square_zero_classes(const PicardLattice& lattice, const Integer& bound);
std::vector<DivisorClass> square_zero_classes(const PicardLattice& lattice, const Integer& bound,
                                              const DivisorClass& reference);
std::vector<DivisorClass> minus_two_classes(const PicardLattice& lattice, const Integer& bound);
std::vector<DivisorClass> minus_two_classes(const PicardLattice& lattice, const Integer& bound,
                                            const DivisorClass& reference);

/// Box scan over [-bound, bound]^rank using the row kernels. Exposed so the
/// rank-2 solver can be cross-checked against it.
std::vector<DivisorClass> classes_of_square_by_scan(const PicardLattice& lattice, const Integer& target,
                                                    const Integer& bound, const DivisorClass& reference);

/// Gram matrix of the basis given by the columns of change (G' = P^T G P).
PicardLattice change_basis(const PicardLattice& lattice, const IntMatrix& change);

}  // namespace k3bn
