#include "k3bn/clifford.hpp"

#include "k3bn/bn.hpp"
#include "k3bn/row_scan.hpp"

#include <algorithm>

namespace k3bn {

std::string_view family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Prop33:
      return "prop33";
    case FamilyKind::Thm41:
      return "thm41";
    case FamilyKind::Custom:
      return "custom";
  }
  return "?";
}

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::PositiveSquare:
      return "positive";
    case Branch::ZeroSquare:
      return "zero";
    case Branch::NegativeSquare:
      return "negative";
  }
  return "?";
}

namespace {

PicardLattice hc_lattice(const Integer& hh, const Integer& hc, const Integer& cc) {
  IntMatrix g(2, 2);
  g(0, 0) = hh;
  g(0, 1) = g(1, 0) = hc;
  g(1, 1) = cc;
  return PicardLattice(std::move(g), {"H", "C"});
}

Branch branch_of(const Integer& sq) {
  if (sq > 0) return Branch::PositiveSquare;
  if (sq == 0) return Branch::ZeroSquare;
  return Branch::NegativeSquare;
}

}  // namespace

SurfaceFamily SurfaceFamily::prop33(long p, long a) {
  if (p < 1) throw InputError("prop33 family needs p >= 1");
  if (a < 2 * p + 3) throw InputError("prop33 family needs a >= 2p+3");
  SurfaceFamily f;
  f.kind = FamilyKind::Prop33;
  f.p = p;
  f.a = a;
  const Integer pp = p, aa = a;
  f.degree = 2 * aa + 2 * pp + 1;
  f.lattice = hc_lattice(4 * pp + 2, f.degree, 4 * aa);
  f.curve = DivisorClass{0, 1};
  f.aux = DivisorClass{1, 0};
  f.genus = 2 * aa + 1;
  return f;
}

SurfaceFamily SurfaceFamily::thm41(long a, long b) {
  if (a < 3) throw InputError("thm41 family needs a >= 3");
  if (b < 1) throw InputError("thm41 family needs b >= 1");
  SurfaceFamily f;
  f.kind = FamilyKind::Thm41;
  f.a = a;
  f.b = b;
  const Integer aa = a, bb = b;
  f.degree = 6 * aa + bb;
  f.genus = 3 * aa * aa + aa * bb + 1;
  f.lattice = hc_lattice(6, f.degree, 2 * (f.genus - 1));
  f.curve = DivisorClass{0, 1};
  f.aux = DivisorClass{1, 0};
  return f;
}

SurfaceFamily SurfaceFamily::custom(PicardLattice lattice, DivisorClass curve, const Integer& genus) {
  if (lattice.rank() != 2) throw InputError("custom families must have Picard rank 2");
  if (curve.size() != 2) throw InputError("curve class must have 2 coordinates");
  if (genus < 2) throw InputError("genus must be >= 2");
  if (square(lattice, curve) != 2 * genus - 2)
    throw InputError("curve square " + to_string(square(lattice, curve)) + " does not equal 2g-2 = " +
                     to_string(Integer(2 * genus - 2)));
  SurfaceFamily f;
  f.kind = FamilyKind::Custom;
  f.lattice = std::move(lattice);
  f.curve = std::move(curve);
  f.genus = genus;
  return f;
}

std::optional<Integer> SurfaceFamily::predicted_cliff() const {
  switch (kind) {
    case FamilyKind::Prop33:
      return Integer(a);
    case FamilyKind::Thm41:
      return Integer(a) * b - 2;
    case FamilyKind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

FeasibilityFlags feasible_prop33(long p, long a, const Integer& m, const Integer& n) {
  if (p < 1 || a < 2 * p + 3) throw InputError("prop33 inequalities need p >= 1 and a >= 2p+3");
  const Integer d = 2 * Integer(a) + 2 * p + 1;
  const Integer gm1 = 2 * Integer(a);
  FeasibilityFlags f;
  f.cond_i = m * d + 2 * n * gm1 <= gm1;
  const Integer half_sq = (2 * p + 1) * m * m + m * n * d + n * n * gm1;
  f.cond_ii = half_sq >= 0;
  f.cond_iii = (4 * p + 2) * m + d * n > 2;
  f.branch = branch_of(half_sq);
  return f;
}

FeasibilityFlags feasible_thm41(long a, long b, const Integer& m, const Integer& n) {
  if (a < 3) throw InputError("thm41 inequalities need a >= 3");
  const Integer aa = a, bb = b;
  FeasibilityFlags f;
  f.cond_i = (6 * aa + bb) * m + (2 * n - 1) * (3 * aa * aa + aa * bb) <= 0;
  const Integer half_sq = (m + aa * n) * (3 * aa * n + 3 * m + bb * n);
  f.cond_ii = half_sq >= 0;
  f.cond_iii = 6 * m + (6 * aa + bb) * n > 2;
  f.branch = branch_of(half_sq);
  return f;
}

Integer f_quadratic(long a, long b, const Integer& m, const Integer& n) {
  const Integer aa = a, bb = b;
  const Integer d = 6 * aa + bb;
  const Integer two_gm2 = 2 * (3 * aa * aa + aa * bb);
  return -6 * m * m + m * (d - 2 * n * d) + (n - n * n) * two_gm2;
}

FeasibilityFlags feasible_by_lattice(const SurfaceFamily& fam, const DivisorClass& d) {
  const PicardLattice& L = fam.lattice;
  const Integer dc = pair(L, d, fam.curve);
  const Integer dd = square(L, d);
  FeasibilityFlags f;
  f.cond_i = dc <= fam.genus - 1;
  f.cond_ii = dd >= 0;
  f.branch = branch_of(dd);
  if (fam.aux) {
    f.cond_iii = pair(L, d, *fam.aux) > 2;
  } else {
    const DivisorClass residual = fam.curve - d;
    f.cond_iii = dc > 0 && square(L, residual) >= 0 && pair(L, residual, fam.curve) > 0;
  }
  return f;
}

std::pair<Integer, Integer> m_interval(const SurfaceFamily& fam, const Integer& n, const Integer& m_cap) {
  const PicardLattice& L = fam.lattice;
  const Integer e0c = pair(L, DivisorClass::basis(2, 0), fam.curve);
  const Integer e1c = pair(L, DivisorClass::basis(2, 1), fam.curve);
  const Integer rest = fam.genus - 1 - n * e1c;  // need m * e0c <= rest
  Integer lo = -m_cap, hi = m_cap;
  if (e0c > 0) {
    hi = std::min(hi, floor_div(rest, e0c));
  } else if (e0c < 0) {
    lo = std::max(lo, ceil_div(rest, e0c));
  } else if (rest < 0) {
    return {1, 0};
  }
  return {lo, hi};
}

namespace {

// Every quantity along a row n = const is a quadratic in m.
struct RowForms {
  scan::BigQuadratic dd, dc, dh;
};

RowForms row_forms(const SurfaceFamily& fam, const Integer& n) {
  const auto& g = fam.lattice.gram();
  RowForms r;
  r.dd = {g(0, 0), 2 * g(0, 1) * n, g(1, 1) * n * n};
  auto linear = [&](const DivisorClass& target) {
    const Integer e0t = pair(fam.lattice, DivisorClass::basis(2, 0), target);
    const Integer e1t = pair(fam.lattice, DivisorClass::basis(2, 1), target);
    return scan::BigQuadratic{0, e0t, e1t * n};
  };
  r.dc = linear(fam.curve);
  if (fam.aux) r.dh = linear(*fam.aux);
  return r;
}

scan::BigQuadratic combine(const scan::BigQuadratic& x, long kx, const scan::BigQuadratic& y, long ky,
                           const Integer& c) {
  return {kx * x.a + ky * y.a, kx * x.b + ky * y.b, kx * x.c + ky * y.c + c};
}

std::vector<scan::BigQuadratic> row_constraints(const SurfaceFamily& fam, const RowForms& r) {
  std::vector<scan::BigQuadratic> cons;
  cons.push_back(combine(r.dc, -1, r.dd, 0, fam.genus - 1));  // (i)   g-1 - D.C >= 0
  cons.push_back(r.dd);                                        // (ii)  D^2 >= 0
  if (fam.aux) {
    cons.push_back(combine(r.dh, 1, r.dd, 0, -3));  // (iii) D.H - 3 >= 0
  } else {
    const Integer cc = 2 * fam.genus - 2;
    cons.push_back(combine(r.dc, 1, r.dd, 0, -1));        // D.C >= 1
    cons.push_back(combine(r.dc, -2, r.dd, 1, cc));       // (C-D)^2 >= 0
    cons.push_back(combine(r.dc, -1, r.dd, 0, cc - 1));   // (C-D).C >= 1
  }
  return cons;
}

}  // namespace

SearchReport min_clifford(const SurfaceFamily& fam, const SearchBounds& bounds) {
  if (bounds.n_range < 0) throw InputError("n range must be >= 0");
  SearchReport rep;
  rep.family = fam;
  rep.n_range = bounds.n_range;
  rep.m_cap = bounds.effective_m_cap(fam.genus);
  if (rep.m_cap < 0) throw InputError("m cap must be >= 0");
  rep.generic_bound = generic_cliff(fam.genus);
  rep.predicted_cliff = fam.predicted_cliff();

  std::optional<Integer> best;  // min of D.C - D^2
  for (Integer n = -bounds.n_range; n <= bounds.n_range; ++n) {
    auto [lo, hi] = m_interval(fam, n, rep.m_cap);
    if (lo > hi) continue;
    const RowForms forms = row_forms(fam, n);
    scan::BigRowProblem row;
    row.constraints = row_constraints(fam, forms);
    row.objective = combine(forms.dc, 1, forms.dd, -1, 0);
    row.lo = lo;
    row.hi = hi;
    row.collect = scan::Collect::Argmins;
    auto res = scan::scan_row_exact(row);
    rep.feasible_count += res.feasible_count;
    if (res.min_value) {
      if (!best || *res.min_value < *best) {
        best = res.min_value;
        rep.argmin.clear();
      }
      if (*res.min_value == *best)
        for (const auto& m : res.hits) rep.argmin.push_back(DivisorClass(std::vector<Integer>{m, n}));
    }
    if (res.feasible_count == 0) continue;
    row.collect = scan::Collect::Feasible;
    for (const auto& m : scan::scan_row_exact(row).hits) {
      GLCandidate c;
      c.m = m;
      c.n = n;
      c.dc = forms.dc(m);
      c.dd = forms.dd(m);
      c.cliff = c.dc - c.dd - 2;
      c.flags = feasible_by_lattice(fam, DivisorClass(std::vector<Integer>{m, n}));
      rep.feasible.push_back(std::move(c));
    }
  }

  if (best) {
    rep.min_cliff = *best - 2;
    rep.concluded_cliff = std::min(*rep.min_cliff, rep.generic_bound);
  } else {
    rep.concluded_cliff = rep.generic_bound;
  }
  if (fam.kind == FamilyKind::Custom) {
    rep.root_search_bound = bounds.root_bound;
    rep.unverified_feasibility = !minus_two_classes(fam.lattice, bounds.root_bound, fam.curve).empty();
    rep.verdict = !rep.unverified_feasibility;
  } else {
    rep.verdict = rep.predicted_cliff && rep.concluded_cliff == *rep.predicted_cliff;
  }
  return rep;
}

Integer gonality(const SurfaceFamily& fam, const SearchBounds& bounds) {
  return min_clifford(fam, bounds).concluded_cliff + 2;
}

}  // namespace k3bn
