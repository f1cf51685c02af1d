#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check; everything is plain loops.

#include "k3bn/integer.hpp"
#include "k3bn/koszul.hpp"
#include "k3bn/ratmat.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using k3bn::Integer;
using k3bn::Rational;

struct Gram2 {
  Integer a, b, c;  // [[a, b], [b, c]]
  Integer q(const Integer& x, const Integer& y) const { return a * x * x + 2 * b * x * y + c * y * y; }
  Integer pair(const Integer& x, const Integer& y, const Integer& u, const Integer& v) const {
    return a * x * u + b * (x * v + y * u) + c * y * v;
  }
};

// Full box [-bound, bound]^2, primitive solutions of q = target, one per +-
// pair: positive pairing with ref, else lexicographically larger.
inline std::vector<std::pair<long, long>> box_classes(const Gram2& g, long target, long bound,
                                                      std::pair<long, long> ref) {
  std::set<std::pair<long, long>> out;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::gcd(x, y) != 1) continue;
      if (g.q(x, y) != target) continue;
      const Integer pr = g.pair(x, y, ref.first, ref.second);
      std::pair<long, long> pos{x, y}, neg{-x, -y};
      if (pr > 0)
        out.insert(pos);
      else if (pr < 0)
        out.insert(neg);
      else
        out.insert(std::max(pos, neg));
    }
  return {out.begin(), out.end()};
}

// Green-Lazarsfeld brute force over the whole box |m| <= m_cap, |n| <= n_cap
// for D = m e0 + n e1 with curve class C and optional auxiliary class H.
struct GLBox {
  std::vector<std::pair<long, long>> feasible;  // sorted by (n, m)
  std::optional<Integer> min_f;                 // min D.C - D^2
  std::vector<std::pair<long, long>> argmin;    // (m, n), sorted by (n, m)
};

inline GLBox gl_box(const Gram2& g, std::pair<long, long> curve, std::optional<std::pair<long, long>> aux,
                    const Integer& genus, long m_cap, long n_cap) {
  GLBox r;
  const auto [cx, cy] = curve;
  for (long n = -n_cap; n <= n_cap; ++n)
    for (long m = -m_cap; m <= m_cap; ++m) {
      const Integer dc = g.pair(m, n, cx, cy);
      const Integer dd = g.q(m, n);
      bool ok = dc <= genus - 1 && dd >= 0;
      if (aux) {
        ok = ok && g.pair(m, n, aux->first, aux->second) > 2;
      } else {
        const long rx = cx - m, ry = cy - n;
        ok = ok && dc > 0 && g.q(rx, ry) >= 0 && g.pair(rx, ry, cx, cy) > 0;
      }
      if (!ok) continue;
      r.feasible.emplace_back(m, n);
      const Integer f = dc - dd;
      if (!r.min_f || f < *r.min_f) {
        r.min_f = f;
        r.argmin.clear();
      }
      if (f == *r.min_f) r.argmin.emplace_back(m, n);
    }
  return r;
}

// Rank over Q by fraction-free (Bareiss) elimination on integer-scaled rows.
inline std::size_t bareiss_rank(const k3bn::RatMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && a[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Monomial-type graded module for F (x) L^q over a commutative algebra:
// H^0(L) = span of x^u, u in a finite set U of exponent vectors; the pieces
// are spanned by the monomials reachable as a fixed base monomial times
// products of q elements of U. Multiplication is exact monomial addition, so
// the action is associative and commutative and d o d = 0 holds.
struct MonomialRing {
  int nL = 0;
  std::map<int, std::vector<std::vector<int>>> monomials;  // q -> basis
  std::map<int, k3bn::RatMatrix> mult;                     // q -> pieces[q+1] x nL*pieces[q]
};

inline MonomialRing monomial_ring(const std::vector<std::vector<int>>& gens, const std::vector<int>& base,
                                  int qmax) {
  MonomialRing r;
  r.nL = static_cast<int>(gens.size());
  std::set<std::vector<int>> cur{base};
  r.monomials[0] = {base};
  for (int q = 1; q <= qmax; ++q) {
    std::set<std::vector<int>> next;
    for (const auto& mono : cur)
      for (const auto& g : gens) {
        std::vector<int> s(mono.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = mono[k] + g[k];
        next.insert(s);
      }
    r.monomials[q] = {next.begin(), next.end()};
    cur = std::move(next);
  }
  for (int q = 0; q < qmax; ++q) {
    const auto& src = r.monomials[q];
    const auto& dst = r.monomials[q + 1];
    k3bn::RatMatrix m(dst.size(), gens.size() * src.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < src.size(); ++j) {
        std::vector<int> s(src[j].size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = src[j][k] + gens[i][k];
        const auto it = std::lower_bound(dst.begin(), dst.end(), s);
        m(static_cast<std::size_t>(it - dst.begin()), i * src.size() + j) = 1;
      }
    r.mult.emplace(q, std::move(m));
  }
  return r;
}

inline k3bn::RatMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  while (true) {
    k3bn::RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    if (bareiss_rank(m) == n) return m;
  }
}


// ---- Koszul inputs built from actual rings

using k3bn::GradedRingData;
using k3bn::LambdaData;
using k3bn::RatMatrix;
using k3bn::binomial;
using k3bn::differential;

inline GradedRingData to_ring(const oracle::MonomialRing& m) {
  GradedRingData r;
  r.nL = m.nL;
  for (const auto& [q, b] : m.monomials) r.pieces[q] = static_cast<int>(b.size());
  r.mult = m.mult;
  r.validate();
  return r;
}

// O(k) on the projective line: H^0 spanned by x^{k-i} y^i. Exponents are
// stored as (deg_y, deg_x) so the sorted basis runs in increasing i.
inline GradedRingData line_ring(int k, int qmax) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i <= k; ++i) gens.push_back({i, k - i});
  return to_ring(monomial_ring(gens, {0, 0}, qmax));
}

// dim K_{p,q} with ranks from fraction-free elimination
inline std::size_t oracle_dim(int p, int q, const GradedRingData& r) {
  if (p < 0 || p > r.nL) return 0;
  const RatMatrix d = differential(p, q, r);
  return d.cols() - bareiss_rank(d) - bareiss_rank(differential(p + 1, q - 1, r));
}

// Binary forms of degree k in x, y as coefficient vectors of length k+1.
using Poly = std::vector<Rational>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly c(a);
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return c;
}

inline Poly zero_poly(std::size_t n) { return Poly(n, 0); }

// H^0(L) (x) H^0(L) -> H^0(L^2) for L = O(D) on the line.
inline RatMatrix square_map(int D) {
  const auto n = static_cast<std::size_t>(D + 1);
  RatMatrix m(2 * n - 1, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i + j, i * n + j) = 1;
  return m;
}

struct Section {
  Poly f, g;
};

// lambda(e_i ^ e_j) = f_i g_j - f_j g_i, rows in lexicographic pair order
inline LambdaData determinant_map(int p, const std::vector<Section>& e) {
  const int m = p + 3;
  const std::size_t nL = mul(e[0].f, e[0].g).size();
  LambdaData l;
  l.p = p;
  l.rows = RatMatrix(binomial(m, 2), nL);
  std::size_t row = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++row) {
      const Poly v = sub(mul(e[static_cast<std::size_t>(i)].f, e[static_cast<std::size_t>(j)].g),
                         mul(e[static_cast<std::size_t>(j)].f, e[static_cast<std::size_t>(i)].g));
      for (std::size_t c = 0; c < nL; ++c) l.rows(row, c) = v[c];
    }
  return l;
}

inline Poly random_poly(std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Poly p(len);
  for (auto& x : p) x = k3bn::make_rational(d(rng), 1 + (d(rng) + 3) % 2);
  return p;
}

}  // namespace oracle
