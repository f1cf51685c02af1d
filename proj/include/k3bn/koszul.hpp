#pragma once

// Koszul cohomology over Q from explicit multiplication tables.
//
// Coordinates: the basis of wedge^p H^0(L) (x) H^0(F (x) L^q) is indexed by
// (I, j) -> rank(I) * pieces[q] + j, with I running over wedge_basis(p, nL).
// The differential contracts the wedge factor:
//   d(v_I (x) s) = sum_k (-1)^k v_{I \ i_k} (x) (v_{i_k} * s),  k = 0..p-1.

#include "k3bn/ratmat.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace k3bn {

/// Strictly increasing 0-based index tuples of size k from {0..n-1}, in
/// lexicographic order. Empty when k < 0 or k > n.
std::vector<std::vector<int>> wedge_basis(int k, int n);
/// Position of a strictly increasing tuple in wedge_basis(|I|, n).
std::size_t wedge_rank(const std::vector<int>& subset, int n);
std::size_t binomial(int n, int k);

struct GradedRingData {
  int nL = 0;
  std::map<int, int> pieces;       ///< q -> dim H^0(F (x) L^q)
  std::map<int, RatMatrix> mult;   ///< q -> pieces[q+1] x (nL * pieces[q])

  int piece(int q) const;
  /// Throws InputError on a shape mismatch.
  void validate() const;
};

/// d_{p,q} : wedge^p (x) P_q -> wedge^{p-1} (x) P_{q+1}. Throws InputError
/// naming q when mult[q] is needed but absent.
RatMatrix differential(int p, int q, const GradedRingData& ring);

/// dim ker d_{p,q} - rank d_{p+1,q-1}
std::size_t koszul_dim(int p, int q, const GradedRingData& ring);

/// Element of wedge^p W (x) H^0(L), W spanned by the rows of w_basis.
struct SyzygyTensor {
  int p = 0;
  int nL = 0;
  RatMatrix w_basis;             ///< w_dim x nL
  std::vector<Rational> coords;  ///< C(w_dim, p) * nL, index rank(J) * nL + t
  int w_dim() const { return static_cast<int>(w_basis.rows()); }
  bool is_zero() const;
};

/// Rows of the determinant map lambda(e_i ^ e_j), 1 <= i < j <= p+3, in
/// lexicographic pair order; each row has nL entries.
struct LambdaData {
  int p = 0;
  RatMatrix rows;
};

/// zeta(E) = sum_{2<=i<j<=p+3} (-1)^{i+j} s_2^..^s_i-hat^..^s_j-hat^..^s_{p+3}
///           (x) lambda(e_i ^ e_j),   s_j = lambda(e_1 ^ e_j).
/// Throws InputError when the s_j are linearly dependent.
SyzygyTensor zeta_tensor(const LambdaData& lambda);

/// The tensor in the ambient coordinates of wedge^p H^0(L) (x) H^0(L).
std::vector<Rational> embed(const SyzygyTensor& t);

/// Ring with F = O: pieces {0: 1, 1: nL, 2: n2}, mult[0] the identity action
/// and mult[1] the given H^0(L) (x) H^0(L) -> H^0(L^2) table.
GradedRingData ring_from_square_map(int nL, const RatMatrix& square_map);

/// Upper bound on the rank of the class of t in K_{p,1}: size of a subset of
/// the W basis reached by greedy removal while t stays representable in
/// wedge^p W' (x) H^0(L) + im d_{p+1,0}. Zero for boundaries.
int syzygy_rank_bound(const SyzygyTensor& t);

/// d_{p,1}(t) in ambient coordinates; zero exactly when t is a cocycle.
/// ring must carry mult[1] (mult[0] is not consulted).
std::vector<Rational> cocycle_residual(const SyzygyTensor& t, const GradedRingData& ring);

}  // namespace k3bn
