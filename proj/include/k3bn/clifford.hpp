#pragma once

// Green-Lazarsfeld search: the Clifford index of a curve C on a K3 surface
// of Picard rank 2 is computed by a divisor D = mH + nC with
// Cliff(O_C(D)) = D.C - D^2 - 2, subject to numeric feasibility.

#include "k3bn/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3bn {

enum class FamilyKind {
  Prop33,  ///< H^2 = 4p+2, C^2 = 4a, H.C = 2a+2p+1, a >= 2p+3, p >= 1
  Thm41,   ///< H^2 = 6, C^2 = 2(3a^2+ab), H.C = 6a+b, a >= 3
  Custom,  ///< arbitrary rank-2 lattice with a curve class
};

std::string_view family_name(FamilyKind k);

struct SurfaceFamily {
  FamilyKind kind = FamilyKind::Custom;
  long p = 0;  ///< Prop33
  long a = 0;  ///< Prop33, Thm41
  long b = 0;  ///< Thm41
  PicardLattice lattice;        ///< basis (H, C) for Prop33/Thm41
  DivisorClass curve;           ///< C
  std::optional<DivisorClass> aux;  ///< H, absent for Custom
  Integer genus = 0;            ///< C^2/2 + 1
  Integer degree = 0;           ///< H.C (Custom: 0)

  /// Throws InputError if a < 2p+3 or p < 1.
  static SurfaceFamily prop33(long p, long a);
  /// Throws InputError if a < 3 or b < 1.
  static SurfaceFamily thm41(long a, long b);
  /// Rank 2 only; throws unless curve^2 = 2g - 2 with g >= 2.
  static SurfaceFamily custom(PicardLattice lattice, DivisorClass curve, const Integer& genus);

  /// Value the construction predicts for Cliff(C) (Prop33: a, Thm41: ab-2).
  std::optional<Integer> predicted_cliff() const;
};

enum class Branch { PositiveSquare, ZeroSquare, NegativeSquare };
std::string_view branch_name(Branch b);

struct FeasibilityFlags {
  bool cond_i = false;    ///< D.C <= g-1
  bool cond_ii = false;   ///< square condition (D^2 >= 0, resp. > 0)
  bool cond_iii = false;  ///< D.H > 2
  Branch branch = Branch::NegativeSquare;
  bool feasible() const { return cond_i && cond_ii && cond_iii; }
};

/// Closed-form inequalities for the Prop33 family in (m, n), D = mH + nC.
FeasibilityFlags feasible_prop33(long p, long a, const Integer& m, const Integer& n);
/// Thm41 family: cond_ii holds on the D^2 > 0 branch; D^2 = 0 candidates
/// are reported with branch ZeroSquare and cond_ii true.
FeasibilityFlags feasible_thm41(long a, long b, const Integer& m, const Integer& n);

/// f(m,n) = D.C - D^2 = -6m^2 + m(d - 2nd) + (n - n^2)(2g-2) for Thm41.
Integer f_quadratic(long a, long b, const Integer& m, const Integer& n);

struct GLCandidate {
  Integer m, n;
  Integer dc;     ///< D.C
  Integer dd;     ///< D^2
  Integer cliff;  ///< dc - dd - 2
  FeasibilityFlags flags;
};

struct SearchBounds {
  Integer n_range = 50;  ///< n in [-n_range, n_range]
  std::optional<Integer> m_cap;  ///< default 10 (g - 1)
  Integer root_bound = 50;       ///< (-2)-class search for Custom families

  Integer effective_m_cap(const Integer& genus) const { return m_cap ? *m_cap : 10 * (genus - 1); }
};

struct SearchReport {
  SurfaceFamily family;
  Integer n_range;
  Integer m_cap;
  std::vector<GLCandidate> feasible;  ///< sorted by (n, m)
  Integer feasible_count = 0;
  std::optional<Integer> min_cliff;
  std::vector<DivisorClass> argmin;   ///< (m, n), sorted by (n, m)
  Integer generic_bound = 0;          ///< floor((g-1)/2)
  Integer concluded_cliff = 0;
  std::optional<Integer> predicted_cliff;
  bool verdict = false;
  /// Custom families: the numeric proxy is unreliable with (-2)-classes.
  bool unverified_feasibility = false;
  Integer root_search_bound = 0;
};

/// Feasibility of D = mH + nC evaluated from the Gram matrix.
FeasibilityFlags feasible_by_lattice(const SurfaceFamily& fam, const DivisorClass& d);

/// Closed m interval allowed by D.C <= g-1 for a fixed n, intersected with
/// [-m_cap, m_cap]; empty when lo > hi.
std::pair<Integer, Integer> m_interval(const SurfaceFamily& fam, const Integer& n, const Integer& m_cap);

SearchReport min_clifford(const SurfaceFamily& fam, const SearchBounds& bounds = {});
/// Cliff(C) + 2, assuming Clifford dimension 1.
Integer gonality(const SurfaceFamily& fam, const SearchBounds& bounds = {});

}  // namespace k3bn
