#include "k3bn/lattice.hpp"

#include "k3bn/row_scan.hpp"

#include <algorithm>
#include <sstream>

namespace k3bn {

DivisorClass::DivisorClass(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t i) {
  auto x = zero(rank);
  x.coords_.at(i) = 1;
  return x;
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

bool DivisorClass::is_primitive() const { return gcd_of(coords_) == 1; }

DivisorClass DivisorClass::operator-() const {
  auto r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  if (x.size() != y.size()) throw InputError("class dimension mismatch");
  auto r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords_[i] += y.coords_[i];
  return r;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) { return x + (-y); }

DivisorClass operator*(const Integer& k, const DivisorClass& x) {
  auto r = x;
  for (auto& c : r.coords_) c *= k;
  return r;
}

std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(x.coords_[i], y.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

PicardLattice::PicardLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) throw InputError("gram matrix must be square and nonempty");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw InputError("gram matrix is not symmetric");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("e" + std::to_string(i));
  } else if (labels_.size() != gram_.rows()) {
    throw InputError("basis label count does not match rank");
  }
}

Integer PicardLattice::determinant() const { return k3bn::determinant(gram_); }

bool PicardLattice::is_hyperbolic_plane_type() const { return rank() == 2 && determinant() < 0; }

DivisorClass PicardLattice::default_reference() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rank(); ++i)
    if (gram_(i, i) > gram_(best, best)) best = i;
  return DivisorClass::basis(rank(), best);
}

Integer pair(const PicardLattice& lattice, const DivisorClass& x, const DivisorClass& y) {
  const std::size_t n = lattice.rank();
  if (x.size() != n || y.size() != n)
    throw InputError("class has " + std::to_string(x.size() != n ? x.size() : y.size()) +
                     " coordinates, lattice rank is " + std::to_string(n));
  const auto& g = lattice.gram();
  Integer s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += g(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Integer square(const PicardLattice& lattice, const DivisorClass& x) { return pair(lattice, x, x); }

DivisorClass normalize_sign(const PicardLattice& lattice, const DivisorClass& x, const DivisorClass& reference) {
  int s = sgn(pair(lattice, x, reference));
  if (s > 0) return x;
  if (s < 0) return -x;
  auto neg = -x;
  return neg > x ? neg : x;
}

namespace {

void finish(const PicardLattice& lattice, const DivisorClass& reference, std::vector<DivisorClass>& found) {
  for (auto& x : found) x = normalize_sign(lattice, x, reference);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
}

// Rank 2: for each n, G00 m^2 + 2 G01 n m + (G11 n^2 - t) = 0 in m.
std::vector<DivisorClass> solve_rank2(const PicardLattice& lattice, const Integer& target, const Integer& bound) {
  const auto& g = lattice.gram();
  std::vector<DivisorClass> found;
  auto accept = [&](const Integer& m, const Integer& n) {
    if (abs(m) > bound) return;
    DivisorClass x(std::vector<Integer>{m, n});
    if (x.is_primitive()) found.push_back(std::move(x));
  };
  for (Integer n = -bound; n <= bound; ++n) {
    const Integer lin = g(0, 1) * n;  // half the linear coefficient
    const Integer cst = g(1, 1) * n * n - target;
    if (g(0, 0) == 0) {
      if (lin == 0) {
        if (cst == 0)
          for (Integer m = -bound; m <= bound; ++m) accept(m, n);
        continue;
      }
      // 2 lin m + cst = 0
      Integer num = -cst, den = 2 * lin;
      if (num % den == 0) accept(num / den, n);
      continue;
    }
    // reduced discriminant lin^2 - G00 * cst
    auto root = exact_sqrt(lin * lin - g(0, 0) * cst);
    if (!root) continue;
    for (int sign : {-1, 1}) {
      Integer num = -lin + sign * *root;
      if (num % g(0, 0) == 0) accept(num / g(0, 0), n);
      if (*root == 0) break;
    }
  }
  return found;
}

}  // namespace

std::vector<DivisorClass> classes_of_square_by_scan(const PicardLattice& lattice, const Integer& target,
                                                    const Integer& bound, const DivisorClass& reference) {
  const std::size_t k = lattice.rank();
  const auto& g = lattice.gram();
  std::vector<DivisorClass> found;
  std::vector<Integer> prefix(k - 1, -bound);
  scan::BigRowProblem row;
  row.lo = -bound;
  row.hi = bound;
  row.collect = scan::Collect::Feasible;
  row.constraints.resize(2);
  const std::size_t last = k - 1;
  while (true) {
    // q(prefix, m) = G_ll m^2 + 2 (sum_i G_il y_i) m + q(prefix)
    Integer lin = 0, cst = 0;
    for (std::size_t i = 0; i < last; ++i) {
      lin += g(i, last) * prefix[i];
      for (std::size_t j = 0; j < last; ++j) cst += prefix[i] * g(i, j) * prefix[j];
    }
    row.constraints[0] = {g(last, last), 2 * lin, cst - target};
    row.constraints[1] = {-g(last, last), -2 * lin, target - cst};
    auto hits = scan::scan_row_exact(row);
    for (const auto& m : hits.hits) {
      std::vector<Integer> c = prefix;
      c.push_back(m);
      DivisorClass x(std::move(c));
      if (x.is_primitive()) found.push_back(std::move(x));
    }
    std::size_t i = 0;
    while (i < last && prefix[i] == bound) prefix[i++] = -bound;
    if (i == last) break;
    ++prefix[i];
  }
  finish(lattice, reference, found);
  return found;
}

std::vector<DivisorClass> classes_of_square(const PicardLattice& lattice, const Integer& target,
                                            const Integer& bound, const DivisorClass& reference) {
  if (bound < 1) throw InputError("search bound must be >= 1");
  if (reference.size() != lattice.rank()) throw InputError("reference class has wrong rank");
  if (lattice.rank() == 1) {
    // x = m e0, G00 m^2 = target; only m = +-1 is primitive.
    std::vector<DivisorClass> found;
    if (lattice.gram()(0, 0) == target) found.push_back(DivisorClass::basis(1, 0));
    finish(lattice, reference, found);
    return found;
  }
  if (lattice.rank() != 2) return classes_of_square_by_scan(lattice, target, bound, reference);
  auto found = solve_rank2(lattice, target, bound);
  finish(lattice, reference, found);
  return found;
}

std::vector<DivisorClass> classes_of_square(const PicardLattice& lattice, const Integer& target,
                                            const Integer& bound) {
  return classes_of_square(lattice, target, bound, lattice.default_reference());
}

std::vector<DivisorClass> square_zero_classes(const PicardLattice& lattice, const Integer& bound) {
  return classes_of_square(lattice, 0, bound);
}
std::vector<DivisorClass> square_zero_classes(const PicardLattice& lattice, const Integer& bound,
                                              const DivisorClass& reference) {
  return classes_of_square(lattice, 0, bound, reference);
}
std::vector<DivisorClass> minus_two_classes(const PicardLattice& lattice, const Integer& bound) {
  return classes_of_square(lattice, -2, bound);
}
std::vector<DivisorClass> minus_two_classes(const PicardLattice& lattice, const Integer& bound,
                                            const DivisorClass& reference) {
  return classes_of_square(lattice, -2, bound, reference);
}

PicardLattice change_basis(const PicardLattice& lattice, const IntMatrix& change) {
  if (change.rows() != lattice.rank()) throw InputError("basis change has wrong size");
  return PicardLattice(change.transpose() * lattice.gram() * change);
}

}  // namespace k3bn
