#include "k3bn/mukai.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace k3bn {

std::vector<Integer> MukaiVector::flatten() const {
  std::vector<Integer> v;
  v.reserve(c.size() + 2);
  v.push_back(r);
  for (const auto& x : c.coords()) v.push_back(x);
  v.push_back(s);
  return v;
}

MukaiVector MukaiVector::unflatten(const std::vector<Integer>& v) {
  if (v.size() < 2) throw InputError("Mukai vector needs at least 2 components");
  return {v.front(), DivisorClass(std::vector<Integer>(v.begin() + 1, v.end() - 1)), v.back()};
}

std::string MukaiVector::to_string() const {
  std::ostringstream os;
  os << '(' << r << ", " << c.to_string() << ", " << s << ')';
  return os.str();
}

IntMatrix ExtendedLattice::gram() const {
  const std::size_t k = ns_.rank();
  IntMatrix m(k + 2, k + 2);
  m(0, k + 1) = -1;
  m(k + 1, 0) = -1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i + 1, j + 1) = ns_.gram()(i, j);
  return m;
}

Integer mukai_pair(const ExtendedLattice& e, const MukaiVector& x, const MukaiVector& y) {
  return pair(e.ns(), x.c, y.c) - x.s * y.r - x.r * y.s;
}

namespace {

MukaiVector add_scaled(const MukaiVector& x, const Integer& k, const MukaiVector& y) {
  return {x.r + k * y.r, x.c + k * y.c, x.s + k * y.s};
}

PicardLattice gram_of(const ExtendedLattice& e, const std::vector<MukaiVector>& basis) {
  IntMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = mukai_pair(e, basis[i], basis[j]);
  std::vector<std::string> labels{"l^"};
  for (std::size_t i = 1; i < basis.size(); ++i) labels.push_back("w" + std::to_string(i));
  return PicardLattice(std::move(g), std::move(labels));
}

}  // namespace

FMDualResult fm_dual(const ExtendedLattice& e, const DivisorClass& ell, const Integer& r, const Integer& s,
                     const Integer& distinguished_bound) {
  const PicardLattice& ns = e.ns();
  const std::size_t k = ns.rank();
  if (ell.size() != k) throw InputError("ell has wrong number of coordinates");
  if (gcd(r, s) != 1) throw InputError("r and s must be coprime");
  if (!ell.is_primitive()) throw InputError("ell must be primitive");
  const Integer g = 1 + r * s;
  if (square(ns, ell) != 2 * g - 2)
    throw InputError("v = (r, ell, s) is not isotropic: ell^2 = " + to_string(square(ns, ell)) +
                     " but 2rs = " + to_string(Integer(2 * r * s)));

  FMDualResult out;
  out.v = {r, ell, s};
  out.genus = g;
  const IntMatrix mukai = e.gram();
  const std::vector<Integer> vflat = out.v.flatten();
  const std::vector<Integer> w = mukai * vflat;

  // Kernel of x -> <x, v> from the column Hermite form of the row w.
  IntMatrix row(1, k + 2);
  for (std::size_t j = 0; j < k + 2; ++j) row(0, j) = w[j];
  const auto hr = column_hermite(row);
  auto kernel_coords = [&](const std::vector<Integer>& x) {
    auto y = hr.u_inv * x;
    if (y[0] != 0) throw std::logic_error("vector not orthogonal to v");
    return std::vector<Integer>(y.begin() + 1, y.end());
  };
  IntMatrix kbasis(k + 2, k + 1);
  for (std::size_t i = 0; i < k + 2; ++i)
    for (std::size_t j = 0; j < k + 1; ++j) kbasis(i, j) = hr.u(i, j + 1);

  // Rebase the kernel so that v is its first basis vector.
  const IntMatrix vcomplete = unimodular_completion(kernel_coords(vflat));
  const IntMatrix vcomplete_inv = unimodular_inverse(vcomplete);
  const IntMatrix rebased = kbasis * vcomplete;

  std::vector<MukaiVector> lifts;
  for (std::size_t j = 1; j < k + 1; ++j) lifts.push_back(MukaiVector::unflatten(rebased.column(j)));

  out.polarization = {0, ell, 2 * s};
  auto pol_in_rebased = vcomplete_inv * kernel_coords(out.polarization.flatten());
  std::vector<Integer> pol_coords(pol_in_rebased.begin() + 1, pol_in_rebased.end());

  // Make the polarization the first basis vector.
  const IntMatrix pcomplete = unimodular_completion(pol_coords);
  std::vector<MukaiVector> basis;
  for (std::size_t j = 0; j < k; ++j) {
    MukaiVector b{0, DivisorClass::zero(k), 0};
    for (std::size_t i = 0; i < k; ++i) b = add_scaled(b, pcomplete(i, j), lifts[i]);
    basis.push_back(std::move(b));
  }
  // basis[0] equals the polarization modulo v.
  basis[0] = out.polarization;

  const Integer L = 2 * g - 2;
  for (std::size_t j = 1; j < k; ++j) {
    Integer x = mukai_pair(e, basis[j], basis[0]);
    basis[j] = add_scaled(basis[j], -floor_div(x, L), basis[0]);
    if (k == 2) {
      x = mukai_pair(e, basis[j], basis[0]);
      if (2 * x > L) {
        MukaiVector flipped{-basis[j].r, -basis[j].c, -basis[j].s};
        basis[j] = add_scaled(flipped, 1, basis[0]);
      }
    }
    // Representatives modulo v: H^0 component in [0, r).
    if (r != 0) basis[j] = add_scaled(basis[j], -floor_div(basis[j].r, r), out.v);
  }

  out.basis = basis;
  out.lattice = gram_of(e, basis);
  out.polarization_coords = DivisorClass::basis(k, 0);

  auto roots = minus_two_classes(out.lattice, distinguished_bound, out.polarization_coords);
  for (const auto& x : roots) {
    Integer deg = pair(out.lattice, x, out.polarization_coords);
    if (deg <= 0) continue;
    if (out.distinguished && deg >= out.distinguished->pairing) continue;
    MukaiVector lift{0, DivisorClass::zero(k), 0};
    for (std::size_t i = 0; i < k; ++i) lift = add_scaled(lift, x[i], basis[i]);
    out.distinguished = DistinguishedClass{x, lift, square(out.lattice, x), deg};
  }
  return out;
}

std::optional<DivisorClass> nl_member(const PicardLattice& ns, const DivisorClass& ell, const Integer& h_square,
                                      const Integer& h_dot_ell, const Integer& bound) {
  if (bound < 1) throw InputError("search bound must be >= 1");
  const std::size_t k = ns.rank();
  if (ell.size() != k) throw InputError("ell has wrong number of coordinates");
  const auto& g = ns.gram();
  std::vector<Integer> u(k, 0);  // G * ell
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) u[i] += g(i, j) * ell[j];

  std::optional<DivisorClass> best;
  auto consider = [&](std::vector<Integer> coords) {
    DivisorClass x(std::move(coords));
    if (square(ns, x) != h_square || pair(ns, x, ell) != h_dot_ell) return;
    if (!best || x < *best) best = std::move(x);
  };

  const std::size_t last = k - 1;
  std::vector<Integer> prefix(last, -bound);
  while (true) {
    Integer partial = 0;
    for (std::size_t i = 0; i < last; ++i) partial += u[i] * prefix[i];
    const Integer rest = h_dot_ell - partial;
    if (u[last] != 0) {
      if (rest % u[last] == 0) {
        Integer m = rest / u[last];
        if (abs(m) <= bound) {
          auto c = prefix;
          c.push_back(m);
          consider(std::move(c));
        }
      }
    } else if (rest == 0) {
      // Degree does not see the last coordinate: solve the square condition.
      Integer lin = 0, cst = 0;
      for (std::size_t i = 0; i < last; ++i) {
        lin += g(i, last) * prefix[i];
        for (std::size_t j = 0; j < last; ++j) cst += prefix[i] * g(i, j) * prefix[j];
      }
      const Integer a = g(last, last);
      cst -= h_square;
      std::vector<Integer> cands;
      if (a == 0) {
        if (lin == 0) {
          if (cst == 0) cands.push_back(-bound);
        } else if ((-cst) % (2 * lin) == 0) {
          cands.push_back(-cst / (2 * lin));
        }
      } else if (auto root = exact_sqrt(lin * lin - a * cst)) {
        for (int sign : {-1, 1}) {
          Integer num = -lin + sign * *root;
          if (num % a == 0) cands.push_back(num / a);
        }
      }
      for (const auto& m : cands) {
        if (abs(m) > bound) continue;
        auto c = prefix;
        c.push_back(m);
        consider(std::move(c));
      }
    }
    std::size_t i = 0;
    while (i < last && prefix[i] == bound) prefix[i++] = -bound;
    if (i == last) break;
    ++prefix[i];
  }
  return best;
}

namespace {

struct PolarizedInvariant {
  Integer L, det, x;
  friend bool operator==(const PolarizedInvariant&, const PolarizedInvariant&) = default;
};

PolarizedInvariant polarized_invariant(const PicardLattice& lat, const DivisorClass& ell) {
  if (lat.rank() != 2) throw InputError("polarized isometry test needs rank 2");
  if (!ell.is_primitive()) throw InputError("polarization must be primitive");
  const IntMatrix c = unimodular_completion(ell.coords());
  const DivisorClass w(c.column(1));
  PolarizedInvariant inv{square(lat, ell), lat.determinant(), pair(lat, ell, w)};
  if (inv.L != 0) {
    Integer m = inv.x % inv.L;
    if (m < 0) m += abs(inv.L);
    Integer alt = abs(inv.L) - m;
    if (alt == abs(inv.L)) alt = 0;
    inv.x = m < alt ? m : alt;
  } else {
    // l isotropic: w -> +-w + k l moves w^2 by multiples of 2x.
    inv.x = abs(inv.x);
    Integer y = square(lat, w);
    inv.det = inv.x == 0 ? y : y % (2 * inv.x);
    if (inv.det < 0) inv.det += 2 * inv.x;
  }
  return inv;
}

// Lagrange reduction of an indefinite or definite binary form.
PicardLattice reduce_binary(const PicardLattice& lat) {
  Integer a = lat.gram()(0, 0), b = lat.gram()(0, 1), c = lat.gram()(1, 1);
  for (int guard = 0; guard < 10000; ++guard) {
    if (a == 0 || c == 0) break;
    if (abs(c) < abs(a)) {
      std::swap(a, c);
      continue;
    }
    // n -> n - t m with t nearest b / a
    Integer t = floor_div(2 * b + abs(a), 2 * abs(a));
    if (a < 0) t = -t;
    if (t == 0) break;
    c = c - 2 * t * b + t * t * a;
    b = b - t * a;
  }
  IntMatrix g(2, 2);
  g(0, 0) = a;
  g(0, 1) = g(1, 0) = b;
  g(1, 1) = c;
  return PicardLattice(std::move(g));
}

}  // namespace

bool polarized_isometric(const PicardLattice& a, const DivisorClass& la, const PicardLattice& b,
                         const DivisorClass& lb) {
  return polarized_invariant(a, la) == polarized_invariant(b, lb);
}

std::vector<Integer> represented_values(const PicardLattice& lattice, const Integer& bound) {
  if (lattice.rank() != 2) throw InputError("represented_values supports rank 2");
  const PicardLattice red = reduce_binary(lattice);
  std::set<Integer> vals;
  const auto& g = red.gram();
  for (Integer n = -bound; n <= bound; ++n)
    for (Integer m = -bound; m <= bound; ++m) {
      if (m == 0 && n == 0) continue;
      Integer q = g(0, 0) * m * m + 2 * g(0, 1) * m * n + g(1, 1) * n * n;
      if (abs(q) <= bound && q != 0) vals.insert(q);
    }
  return {vals.begin(), vals.end()};
}

bool isometric_up_to_bound(const PicardLattice& a, const PicardLattice& b, const Integer& bound) {
  if (a.rank() != b.rank()) return false;
  if (a.determinant() != b.determinant()) return false;
  return represented_values(a, bound) == represented_values(b, bound);
}

}  // namespace k3bn
