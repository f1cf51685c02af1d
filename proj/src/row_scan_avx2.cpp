#include "k3bn/row_scan.hpp"

#include <immintrin.h>

#include <array>
#include <limits>
#include <vector>

namespace k3bn::scan {

namespace {

constexpr int kLanes = 4;

inline std::int64_t eval(const Quadratic& q, std::int64_t m) { return (q.a * m + q.b) * m + q.c; }

// Forward differences with stride 4: p(m+4) - p(m) = a*(8m+16) + 4b, whose
// own difference is the constant 32a. Only 64-bit adds are needed per step.
struct LaneQuadratic {
  __m256i value;
  __m256i delta;
  __m256i delta2;

  LaneQuadratic(const Quadratic& q, std::int64_t m0) {
    alignas(32) std::array<std::int64_t, kLanes> v{}, d{};
    for (int j = 0; j < kLanes; ++j) {
      std::int64_t m = m0 + j;
      v[j] = eval(q, m);
      d[j] = q.a * (8 * m + 16) + 4 * q.b;
    }
    value = _mm256_load_si256(reinterpret_cast<const __m256i*>(v.data()));
    delta = _mm256_load_si256(reinterpret_cast<const __m256i*>(d.data()));
    delta2 = _mm256_set1_epi64x(32 * q.a);
  }

  void step() {
    value = _mm256_add_epi64(value, delta);
    delta = _mm256_add_epi64(delta, delta2);
  }
};

}  // namespace

RowResult scan_row_avx2(const RowProblem& p) {
  RowResult r;
  if (p.lo > p.hi) return r;
  const std::int64_t len = p.hi - p.lo + 1;
  const std::int64_t blocks = len / kLanes;

  std::vector<LaneQuadratic> cons;
  cons.reserve(p.constraints.size());
  for (const auto& c : p.constraints) cons.emplace_back(c, p.lo);
  LaneQuadratic obj(p.objective, p.lo);

  const __m256i zero = _mm256_setzero_si256();
  const __m256i all = _mm256_set1_epi64x(-1);
  const __m256i sentinel = _mm256_set1_epi64x(std::numeric_limits<std::int64_t>::max());
  alignas(32) std::array<std::int64_t, kLanes> lanes{};

  std::int64_t m0 = p.lo;
  for (std::int64_t blk = 0; blk < blocks; ++blk, m0 += kLanes) {
    __m256i mask = all;
    for (auto& c : cons) {
      mask = _mm256_andnot_si256(_mm256_cmpgt_epi64(zero, c.value), mask);
      c.step();
    }
    const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(mask));
    if (bits != 0) {
      r.feasible_count += __builtin_popcount(static_cast<unsigned>(bits));
      if (p.collect == Collect::Feasible) {
        for (int j = 0; j < kLanes; ++j)
          if (bits & (1 << j)) r.hits.push_back(m0 + j);
      } else {
        __m256i masked = _mm256_blendv_epi8(sentinel, obj.value, mask);
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), masked);
        for (int j = 0; j < kLanes; ++j) {
          if (!(bits & (1 << j))) continue;
          const std::int64_t v = lanes[j];
          if (!r.min_value || v < *r.min_value) {
            r.min_value = v;
            r.hits.clear();
          }
          if (v == *r.min_value) r.hits.push_back(m0 + j);
        }
      }
    }
    obj.step();
  }

  // Tail shorter than one vector.
  for (std::int64_t m = m0; m <= p.hi; ++m) {
    bool ok = true;
    for (const auto& c : p.constraints)
      if (eval(c, m) < 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    ++r.feasible_count;
    if (p.collect == Collect::Feasible) {
      r.hits.push_back(m);
      continue;
    }
    const std::int64_t v = eval(p.objective, m);
    if (!r.min_value || v < *r.min_value) {
      r.min_value = v;
      r.hits.clear();
    }
    if (v == *r.min_value) r.hits.push_back(m);
  }
  return r;
}

}  // namespace k3bn::scan
