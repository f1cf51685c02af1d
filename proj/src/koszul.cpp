#include "k3bn/koszul.hpp"

#include <algorithm>
#include <string>

namespace k3bn {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<std::vector<int>> wedge_basis(int k, int n) {
  std::vector<std::vector<int>> out;
  if (k < 0 || n < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// combinatorial number system, adapted to lexicographic order
std::size_t wedge_rank(const std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  std::size_t r = 0;
  int prev = -1;
  for (int pos = 0; pos < k; ++pos) {
    const int x = subset[static_cast<std::size_t>(pos)];
    for (int y = prev + 1; y < x; ++y) r += binomial(n - y - 1, k - pos - 1);
    prev = x;
  }
  return r;
}

int GradedRingData::piece(int q) const {
  auto it = pieces.find(q);
  return it == pieces.end() ? 0 : it->second;
}

void GradedRingData::validate() const {
  if (nL < 0) throw InputError("nL must be nonnegative");
  for (const auto& [q, d] : pieces)
    if (d < 0) throw InputError("pieces[" + std::to_string(q) + "] must be nonnegative");
  for (const auto& [q, m] : mult) {
    const auto want_r = static_cast<std::size_t>(piece(q + 1));
    const auto want_c = static_cast<std::size_t>(nL) * static_cast<std::size_t>(piece(q));
    if (m.rows() != want_r || m.cols() != want_c)
      throw InputError("mult[" + std::to_string(q) + "] has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(want_r) + "x" +
                       std::to_string(want_c));
  }
}

RatMatrix differential(int p, int q, const GradedRingData& ring) {
  const int n = ring.nL;
  const auto src = wedge_basis(p, n);
  const std::size_t tgt_wedge = binomial(n, p - 1);
  const auto pq = static_cast<std::size_t>(ring.piece(q));
  const auto pq1 = static_cast<std::size_t>(ring.piece(q + 1));
  RatMatrix d(tgt_wedge * pq1, src.size() * pq);
  if (d.rows() == 0 || d.cols() == 0) return d;

  auto it = ring.mult.find(q);
  if (it == ring.mult.end())
    throw InputError("multiplication table for q=" + std::to_string(q) + " is missing");
  const RatMatrix& m = it->second;
  if (m.rows() != pq1 || m.cols() != static_cast<std::size_t>(n) * pq)
    throw InputError("mult[" + std::to_string(q) + "] has the wrong shape");

  std::vector<int> rest;
  for (std::size_t a = 0; a < src.size(); ++a) {
    const auto& I = src[a];
    for (std::size_t k = 0; k < I.size(); ++k) {
      rest.assign(I.begin(), I.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      const std::size_t row0 = wedge_rank(rest, n) * pq1;
      const auto i = static_cast<std::size_t>(I[k]);
      const bool neg = (k % 2) == 1;
      for (std::size_t j = 0; j < pq; ++j) {
        const std::size_t col = a * pq + j;
        for (std::size_t t = 0; t < pq1; ++t) {
          const Rational& c = m(t, i * pq + j);
          if (c == 0) continue;
          if (neg)
            d(row0 + t, col) -= c;
          else
            d(row0 + t, col) += c;
        }
      }
    }
  }
  return d;
}

std::size_t koszul_dim(int p, int q, const GradedRingData& ring) {
  if (p < 0 || p > ring.nL) return 0;
  const RatMatrix d = differential(p, q, ring);
  const std::size_t ker = d.cols() - rank(d);
  const std::size_t im = rank(differential(p + 1, q - 1, ring));
  return ker - im;
}

bool SyzygyTensor::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

SyzygyTensor zeta_tensor(const LambdaData& lambda) {
  const int p = lambda.p;
  if (p < 0) throw InputError("p must be nonnegative");
  const int m = p + 3;
  const std::size_t pairs = binomial(m, 2);
  if (lambda.rows.rows() != pairs)
    throw InputError("lambda needs " + std::to_string(pairs) + " rows for p=" + std::to_string(p) + ", got " +
                     std::to_string(lambda.rows.rows()));
  const int nL = static_cast<int>(lambda.rows.cols());
  auto row_of = [&](int i, int j) { return wedge_rank({i - 1, j - 1}, m); };

  SyzygyTensor t;
  t.p = p;
  t.nL = nL;
  t.w_basis = RatMatrix(static_cast<std::size_t>(p + 2), static_cast<std::size_t>(nL));
  for (int j = 2; j <= m; ++j)
    for (int c = 0; c < nL; ++c)
      t.w_basis(static_cast<std::size_t>(j - 2), static_cast<std::size_t>(c)) =
          lambda.rows(row_of(1, j), static_cast<std::size_t>(c));
  if (rank(t.w_basis) != static_cast<std::size_t>(p + 2))
    throw InputError("the sections lambda(e1 ^ ej) are linearly dependent");

  const int w = p + 2;
  t.coords.assign(binomial(w, p) * static_cast<std::size_t>(nL), 0);
  std::vector<int> J;
  for (int i = 2; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      J.clear();
      for (int k = 0; k < w; ++k)
        if (k != i - 2 && k != j - 2) J.push_back(k);
      const std::size_t base = wedge_rank(J, w) * static_cast<std::size_t>(nL);
      const std::size_t r = row_of(i, j);
      const bool neg = ((i + j) % 2) == 1;
      for (int c = 0; c < nL; ++c) {
        const Rational& v = lambda.rows(r, static_cast<std::size_t>(c));
        if (neg)
          t.coords[base + static_cast<std::size_t>(c)] -= v;
        else
          t.coords[base + static_cast<std::size_t>(c)] += v;
      }
    }
  }
  return t;
}

namespace {

// s_{J_0} ^ ... ^ s_{J_{p-1}} in the wedge_basis(p, nL) coordinates
std::vector<Rational> wedge_of_rows(const RatMatrix& w, const std::vector<int>& J, int nL) {
  const int p = static_cast<int>(J.size());
  const auto basis = wedge_basis(p, nL);
  std::vector<Rational> out(basis.size(), 0);
  RatMatrix minor(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c)
        minor(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            w(static_cast<std::size_t>(J[static_cast<std::size_t>(r)]),
              static_cast<std::size_t>(basis[b][static_cast<std::size_t>(c)]));
    out[b] = p == 0 ? Rational(1) : determinant(minor);
  }
  return out;
}

GradedRingData tautological_ring(int nL) {
  GradedRingData r;
  r.nL = nL;
  r.pieces = {{0, 1}, {1, nL}};
  r.mult.emplace(0, RatMatrix::identity(static_cast<std::size_t>(nL)));
  return r;
}

}  // namespace

std::vector<Rational> embed(const SyzygyTensor& t) {
  const auto nL = static_cast<std::size_t>(t.nL);
  std::vector<Rational> out(binomial(t.nL, t.p) * nL, 0);
  const auto Js = wedge_basis(t.p, t.w_dim());
  for (std::size_t a = 0; a < Js.size(); ++a) {
    bool any = false;
    for (std::size_t c = 0; c < nL && !any; ++c) any = t.coords[a * nL + c] != 0;
    if (!any) continue;
    const auto sj = wedge_of_rows(t.w_basis, Js[a], t.nL);
    for (std::size_t b = 0; b < sj.size(); ++b) {
      if (sj[b] == 0) continue;
      for (std::size_t c = 0; c < nL; ++c) out[b * nL + c] += sj[b] * t.coords[a * nL + c];
    }
  }
  return out;
}

GradedRingData ring_from_square_map(int nL, const RatMatrix& square_map) {
  GradedRingData r = tautological_ring(nL);
  r.pieces[2] = static_cast<int>(square_map.rows());
  r.mult.emplace(1, square_map);
  r.validate();
  return r;
}

std::vector<Rational> cocycle_residual(const SyzygyTensor& t, const GradedRingData& ring) {
  if (ring.nL != t.nL) throw InputError("ring nL does not match the tensor");
  GradedRingData r = ring;
  r.pieces[0] = 1;
  r.pieces[1] = ring.nL;
  return differential(t.p, 1, r) * embed(t);
}

int syzygy_rank_bound(const SyzygyTensor& t) {
  if (t.is_zero()) return 0;
  const int nL = t.nL;
  const auto n = static_cast<std::size_t>(nL);
  const std::vector<Rational> target = embed(t);
  const RatMatrix boundary = differential(t.p + 1, 0, tautological_ring(nL));
  if (in_column_span(boundary, target)) return 0;

  auto representable = [&](const std::vector<int>& subset) {
    const auto Js = wedge_basis(t.p, static_cast<int>(subset.size()));
    RatMatrix gens(target.size(), Js.size() * n);
    std::vector<int> J;
    for (std::size_t a = 0; a < Js.size(); ++a) {
      J.clear();
      for (int k : Js[a]) J.push_back(subset[static_cast<std::size_t>(k)]);
      const auto sj = wedge_of_rows(t.w_basis, J, nL);
      for (std::size_t b = 0; b < sj.size(); ++b)
        for (std::size_t c = 0; c < n; ++c) gens(b * n + c, a * n + c) = sj[b];
    }
    return in_column_span(hconcat(boundary, gens), target);
  };

  std::vector<int> subset;
  for (int i = 0; i < t.w_dim(); ++i) subset.push_back(i);
  bool shrunk = true;
  while (shrunk && static_cast<int>(subset.size()) > t.p) {
    shrunk = false;
    for (std::size_t k = 0; k < subset.size(); ++k) {
      std::vector<int> trial = subset;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
      if (representable(trial)) {
        subset = std::move(trial);
        shrunk = true;
        break;
      }
    }
  }
  return static_cast<int>(subset.size());
}

}  // namespace k3bn
