#include "k3bn/intmat.hpp"

#include <algorithm>
#include <utility>

namespace k3bn {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector dimension mismatch");
  std::vector<Integer> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Column ops on a/u paired with the inverse row ops on u_inv.
struct ColumnOps {
  IntMatrix& a;
  IntMatrix& u;
  IntMatrix& u_inv;

  // [c, j] <- [c, j] * [[p, -y], [q, x]] with p*x + q*y = 1.
  void combine(std::size_t c, std::size_t j, const Integer& p, const Integer& q, const Integer& x,
               const Integer& y) {
    auto mix = [&](IntMatrix& m) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer vc = m(r, c), vj = m(r, j);
        m(r, c) = p * vc + q * vj;
        m(r, j) = x * vj - y * vc;
      }
    };
    mix(a);
    mix(u);
    for (std::size_t k = 0; k < u_inv.cols(); ++k) {
      Integer rc = u_inv(c, k), rj = u_inv(j, k);
      u_inv(c, k) = x * rc + y * rj;
      u_inv(j, k) = p * rj - q * rc;
    }
  }

  void negate(std::size_t c) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) = -a(r, c);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, c) = -u(r, c);
    for (std::size_t k = 0; k < u_inv.cols(); ++k) u_inv(c, k) = -u_inv(c, k);
  }

  // col k -= t * col c
  void subtract(std::size_t k, std::size_t c, const Integer& t) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, k) -= t * a(r, c);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, k) -= t * u(r, c);
    for (std::size_t m = 0; m < u_inv.cols(); ++m) u_inv(c, m) += t * u_inv(k, m);
  }
};

}  // namespace

HermiteResult column_hermite(const IntMatrix& a) {
  HermiteResult res{a, IntMatrix::identity(a.cols()), IntMatrix::identity(a.cols()), 0};
  ColumnOps ops{res.h, res.u, res.u_inv};
  const std::size_t n = a.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows() && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      const Integer& b = res.h(i, j);
      if (b == 0) continue;
      Integer av = res.h(i, c);
      Integer bv = b;
      Integer g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
      Integer x = av / g, y = bv / g;
      ops.combine(c, j, p, q, x, y);
    }
    if (res.h(i, c) == 0) continue;
    if (res.h(i, c) < 0) ops.negate(c);
    for (std::size_t k = 0; k < c; ++k) {
      Integer t = floor_div(res.h(i, k), res.h(i, c));
      if (t != 0) ops.subtract(k, c, t);
    }
    ++c;
  }
  res.rank = c;
  return res;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  auto hr = column_hermite(a);
  const std::size_t n = a.cols();
  IntMatrix k(n, n - hr.rank);
  for (std::size_t j = hr.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - hr.rank) = hr.u(i, j);
  return k;
}

IntMatrix unimodular_completion(const std::vector<Integer>& v) {
  if (v.empty()) throw InputError("cannot complete an empty vector");
  IntMatrix row(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) row(0, j) = v[j];
  auto hr = column_hermite(row);
  if (hr.h(0, 0) != 1) throw InputError("vector is not primitive");
  // v^T U = e1^T  =>  v = (U^{-1})^T e1.
  return hr.u_inv.transpose();
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw InputError("inverse of non-square matrix");
  auto hr = column_hermite(u);
  if (hr.h != IntMatrix::identity(u.rows())) throw InputError("matrix is not unimodular");
  return hr.u;
}

std::vector<Integer> smith_invariants(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pr == rows || abs(m(i, j)) < abs(m(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Integer q = floor_div(m(i, t), m(t, t));
      for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
      if (m(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Integer q = floor_div(m(t, j), m(t, t));
      for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Pivot must divide the rest of the block; otherwise fold a row in.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (std::size_t k = t; k < cols; ++k) m(t, k) += m(i, k);
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

}  // namespace k3bn
