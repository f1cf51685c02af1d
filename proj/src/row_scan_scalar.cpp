#include "k3bn/row_scan.hpp"

namespace k3bn::scan {

namespace {

inline std::int64_t eval(const Quadratic& q, std::int64_t m) { return (q.a * m + q.b) * m + q.c; }

}  // namespace

RowResult scan_row_scalar(const RowProblem& p) {
  RowResult r;
  for (std::int64_t m = p.lo; m <= p.hi; ++m) {
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
    std::int64_t v = eval(p.objective, m);
    if (!r.min_value || v < *r.min_value) {
      r.min_value = v;
      r.hits.clear();
    }
    if (v == *r.min_value) r.hits.push_back(m);
  }
  return r;
}

}  // namespace k3bn::scan
