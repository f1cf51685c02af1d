#include "k3bn/bn.hpp"

#include <algorithm>

namespace k3bn {

Integer rho(const Integer& g, const Integer& r, const Integer& d) { return g - (r + 1) * (g - d + r); }

Integer minimal_degree(const Integer& g, const Integer& r) {
  if (r < 1 || g < 2) throw InputError("minimal_degree needs g >= 2 and r >= 1");
  return r + floor_div(r * (g + 1), r + 1);
}

Integer generic_cliff(const Integer& g) {
  if (g < 2) throw InputError("generic_cliff needs g >= 2");
  return floor_div(g - 1, 2);
}

GammaResult gamma(const BundleNumerics& b) {
  if (b.n < 1) throw InputError("bundle rank must be >= 1");
  GammaResult r;
  r.gamma = make_rational(b.d - 2 * b.h0, b.n) + 2;
  r.degree_ok = b.d <= b.n * (b.g - 1);
  r.sections_ok = b.h0 >= 2 * b.n;
  return r;
}

LMNumerics lm_numerics(const Integer& g, const Integer& r) {
  if (g < 2 || r < 1) throw InputError("lm_numerics needs g >= 2 and r >= 1");
  LMNumerics x;
  x.g = g;
  x.r = r;
  x.d = minimal_degree(g, r);
  x.h0_e = g - x.d + 2 * r + 1;
  x.rank_e = r + 1;
  x.deg_e = 2 * g - 2;
  x.gamma_e = gamma({x.rank_e, x.deg_e, x.h0_e, g}).gamma;
  x.c1_sq = 2 * g - 2;
  x.c2 = 2 * x.d - 2 * g + 2;
  x.delta = 6 * x.c2 - 2 * x.c1_sq;
  x.bogomolov_threshold = make_rational(-x.delta, 18);
  x.bogomolov_threshold.canonicalize();
  x.generic_cliff = generic_cliff(g);
  x.mercat_violated = x.gamma_e < x.generic_cliff;
  x.nonsplit_claim_in_range = r <= 2;
  return x;
}

MercatVerdict mercat_compare(const std::vector<Rational>& gammas, const Integer& cliff) {
  if (gammas.empty()) throw InputError("mercat_compare needs at least one gamma");
  MercatVerdict v;
  v.cliff = cliff;
  v.min_gamma = *std::min_element(gammas.begin(), gammas.end());
  for (std::size_t i = 0; i < gammas.size(); ++i)
    if (gammas[i] < cliff) v.violations.push_back(i);
  return v;
}

}  // namespace k3bn
