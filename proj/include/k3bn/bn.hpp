#pragma once

// Brill-Noether and Clifford numerics. Clifford indices of bundles are
// kept as exact rationals.

#include "k3bn/integer.hpp"

#include <vector>

namespace k3bn {

/// g - (r+1)(g-d+r)
Integer rho(const Integer& g, const Integer& r, const Integer& d);

/// Smallest d with rho(g, r, d) >= 0: r + floor(r(g+1)/(r+1)).
Integer minimal_degree(const Integer& g, const Integer& r);

/// floor((g-1)/2), the Clifford index of a general curve.
Integer generic_cliff(const Integer& g);

struct BundleNumerics {
  Integer n = 1;   ///< rank
  Integer d = 0;   ///< degree
  Integer h0 = 0;  ///< sections
  Integer g = 2;   ///< genus of the curve
};

struct GammaResult {
  Rational gamma;
  bool degree_ok = false;    ///< d <= n(g-1)
  bool sections_ok = false;  ///< h0 >= 2n
  bool contributes() const { return degree_ok && sections_ok; }
};

/// d/n - 2 h0/n + 2. Throws InputError if n < 1.
GammaResult gamma(const BundleNumerics& b);

struct LMNumerics {
  Integer g, r, d;
  Integer h0_e;     ///< g - d + 2r + 1
  Integer rank_e;   ///< r + 1
  Integer deg_e;    ///< 2g - 2
  Rational gamma_e;
  // Elementary modification M of the Lazarsfeld-Mukai bundle along C.
  Integer c1_sq;  ///< c1(M)^2 = C^2 = 2g - 2
  Integer c2;     ///< 2d - 2g + 2
  Integer delta;  ///< 6 c2 - 2 c1^2 = 4(3d - 4g + 4)
  Rational bogomolov_threshold;  ///< -delta / 18
  Integer generic_cliff;
  bool mercat_violated = false;  ///< gamma_e < floor((g-1)/2)
  bool nonsplit_claim_in_range = false;  ///< r <= 2
};

/// Throws InputError for g < 2 or r < 1.
LMNumerics lm_numerics(const Integer& g, const Integer& r);

struct MercatVerdict {
  Rational min_gamma;
  Integer cliff;
  std::vector<std::size_t> violations;  ///< indices with gamma < cliff
  bool violated() const { return !violations.empty(); }
  Rational gap() const { return Rational(cliff) - min_gamma; }
};

/// Throws InputError on an empty list.
MercatVerdict mercat_compare(const std::vector<Rational>& gammas, const Integer& cliff);

}  // namespace k3bn
