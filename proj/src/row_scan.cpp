#include "k3bn/row_scan.hpp"

#include <atomic>

namespace k3bn::scan {

namespace {

std::atomic<int> g_backend{-1};

// Headroom below 2^63 so sums of two in-range terms cannot wrap.
const Integer& int64_headroom() {
  static const Integer limit = Integer(1) << 62;
  return limit;
}

bool quadratic_fits(const BigQuadratic& q, const Integer& reach) {
  const Integer& lim = int64_headroom();
  Integer aa = abs(q.a), bb = abs(q.b), cc = abs(q.c);
  if (aa * reach * reach + bb * reach + cc >= lim) return false;
  // stride-4 forward differences used by the vector kernel
  if (aa * (8 * reach + 16) + 4 * bb + 32 * aa >= lim) return false;
  return true;
}

Quadratic narrow(const BigQuadratic& q) { return {to_i64(q.a), to_i64(q.b), to_i64(q.c)}; }

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "?";
}

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
#if defined(K3BN_BUILD_AVX2)
  static const bool has = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return has;
#else
  return false;
#endif
}

Backend detected_backend() { return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar; }

Backend active_backend() {
  int b = g_backend.load(std::memory_order_relaxed);
  if (b < 0) return detected_backend();
  return static_cast<Backend>(b);
}

void set_active_backend(Backend b) {
  if (!backend_available(b)) throw InputError("kernel backend not available: " + std::string(backend_name(b)));
  g_backend.store(static_cast<int>(b), std::memory_order_relaxed);
}

#if !defined(K3BN_BUILD_AVX2)
RowResult scan_row_avx2(const RowProblem&) { throw InputError("AVX2 kernel not built"); }
#endif

RowResult scan_row(const RowProblem& p) {
  if (active_backend() == Backend::Avx2) return scan_row_avx2(p);
  return scan_row_scalar(p);
}

bool fits_int64_kernels(const BigRowProblem& p) {
  if (p.lo > p.hi) return true;
  if (!fits_i64(p.lo) || !fits_i64(p.hi)) return false;
  Integer reach = abs(p.lo) > abs(p.hi) ? abs(p.lo) : abs(p.hi);
  reach += 8;
  if (reach >= int64_headroom()) return false;
  for (const auto& c : p.constraints)
    if (!quadratic_fits(c, reach)) return false;
  return quadratic_fits(p.objective, reach);
}

BigRowResult scan_row_exact(const BigRowProblem& p) {
  BigRowResult out;
  if (p.lo > p.hi) return out;
  if (fits_int64_kernels(p)) {
    std::vector<Quadratic> cons;
    cons.reserve(p.constraints.size());
    for (const auto& c : p.constraints) cons.push_back(narrow(c));
    RowProblem small{cons, narrow(p.objective), to_i64(p.lo), to_i64(p.hi), p.collect};
    RowResult r = scan_row(small);
    out.feasible_count = from_i64(r.feasible_count);
    if (r.min_value) out.min_value = from_i64(*r.min_value);
    out.hits.reserve(r.hits.size());
    for (auto m : r.hits) out.hits.push_back(from_i64(m));
    return out;
  }
  for (Integer m = p.lo; m <= p.hi; ++m) {
    bool ok = true;
    for (const auto& c : p.constraints)
      if (c(m) < 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    ++out.feasible_count;
    if (p.collect == Collect::Feasible) {
      out.hits.push_back(m);
      continue;
    }
    Integer v = p.objective(m);
    if (!out.min_value || v < *out.min_value) {
      out.min_value = v;
      out.hits.clear();
    }
    if (v == *out.min_value) out.hits.push_back(m);
  }
  return out;
}

}  // namespace k3bn::scan
