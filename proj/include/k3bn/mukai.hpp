#pragma once

// Mukai lattice Z + NS(S) + Z and the Fourier-Mukai dual Picard lattice
// v^perp / Zv for an isotropic Mukai vector v = (r, l, s).

#include "k3bn/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3bn {

struct MukaiVector {
  Integer r = 0;  ///< H^0 component
  DivisorClass c;  ///< NS component
  Integer s = 0;  ///< H^4 component

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  /// (r, c_1, ..., c_k, s)
  std::vector<Integer> flatten() const;
  static MukaiVector unflatten(const std::vector<Integer>& v);
  std::string to_string() const;
};

class ExtendedLattice {
 public:
  explicit ExtendedLattice(PicardLattice ns) : ns_(std::move(ns)) {}
  const PicardLattice& ns() const { return ns_; }
  std::size_t rank() const { return ns_.rank() + 2; }
  /// Gram matrix of the Mukai pairing in (r, c, s) coordinates.
  IntMatrix gram() const;

 private:
  PicardLattice ns_;
};

/// c.c' - s r' - r s'
Integer mukai_pair(const ExtendedLattice& e, const MukaiVector& x, const MukaiVector& y);

struct DistinguishedClass {
  DivisorClass coords;  ///< in the dual lattice basis
  MukaiVector lift;
  Integer square;
  Integer pairing;  ///< with the polarization
};

struct FMDualResult {
  std::vector<MukaiVector> basis;  ///< lifts of a basis of v^perp / Zv
  PicardLattice lattice;           ///< induced form on that basis
  MukaiVector polarization;        ///< (0, l, 2s)
  DivisorClass polarization_coords;
  MukaiVector v;
  Integer genus;
  /// (-2)-class of least positive degree against the polarization, if any
  /// exists within the search bound.
  std::optional<DistinguishedClass> distinguished;
};

/// Lattice v^perp / Zv for v = (r, ell, s). Requires gcd(r, s) = 1, ell
/// primitive and ell^2 = 2rs. The first output basis vector is the image of
/// the polarization; for rank 2 the second is reduced so that its pairing
/// x with the polarization satisfies 0 <= x <= ell^2 / 2.
FMDualResult fm_dual(const ExtendedLattice& e, const DivisorClass& ell, const Integer& r, const Integer& s,
                     const Integer& distinguished_bound = 50);

/// A class x with x^2 = h_square and x.ell = h_dot_ell, |coords| <= bound,
/// smallest in lexicographic order; nullopt if there is none.
std::optional<DivisorClass> nl_member(const PicardLattice& ns, const DivisorClass& ell, const Integer& h_square,
                                      const Integer& h_dot_ell, const Integer& bound);

/// Polarized rank-2 lattices (L, l) and (L', l') with primitive l, l' are
/// isometric (sending l to l') iff l^2 and det agree and the pairings of l
/// with a complementary basis vector agree mod l^2 up to sign.
bool polarized_isometric(const PicardLattice& a, const DivisorClass& la, const PicardLattice& b,
                         const DivisorClass& lb);

/// Sorted nonzero values q with |q| <= bound taken by the Lagrange-reduced
/// form on the box |coords| <= bound. A heuristic invariant: for indefinite
/// forms small values can need larger coordinates.
std::vector<Integer> represented_values(const PicardLattice& lattice, const Integer& bound);

/// Equal determinant and equal represented value sets up to the bound.
bool isometric_up_to_bound(const PicardLattice& a, const PicardLattice& b, const Integer& bound = 200);

}  // namespace k3bn
