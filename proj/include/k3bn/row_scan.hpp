#pragma once

// Scans of one row of an integer box: every quantity the searches need
// (D.C, D^2, D.H, and combinations of them) is a quadratic polynomial in
// the free coordinate m once the other coordinates are fixed. A row scan
// evaluates a handful of such quadratics over m in [lo, hi], keeps the m
// where every constraint polynomial is >= 0, and reports the minimum of an
// objective polynomial over those m.
//
// Two int64 kernels exist (scalar reference, AVX2) plus an arbitrary
// precision fallback used whenever the int64 kernels could overflow.

#include "k3bn/integer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace k3bn::scan {

/// a*m^2 + b*m + c
struct Quadratic {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

struct BigQuadratic {
  Integer a = 0;
  Integer b = 0;
  Integer c = 0;

  Integer operator()(const Integer& m) const { return (a * m + b) * m + c; }
};

enum class Collect {
  Argmins,   ///< feasible m attaining the minimum objective
  Feasible,  ///< every feasible m (objective ignored)
};

struct RowProblem {
  std::span<const Quadratic> constraints;  ///< feasible iff all >= 0
  Quadratic objective;
  std::int64_t lo = 0;
  std::int64_t hi = -1;  ///< inclusive; lo > hi means an empty row
  Collect collect = Collect::Argmins;
};

struct RowResult {
  std::int64_t feasible_count = 0;
  std::optional<std::int64_t> min_value;
  std::vector<std::int64_t> hits;  ///< ascending m

  friend bool operator==(const RowResult&, const RowResult&) = default;
};

struct BigRowProblem {
  std::vector<BigQuadratic> constraints;
  BigQuadratic objective;
  Integer lo = 0;
  Integer hi = -1;
  Collect collect = Collect::Argmins;
};

struct BigRowResult {
  Integer feasible_count = 0;
  std::optional<Integer> min_value;
  std::vector<Integer> hits;
};

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
/// Best available backend, detected once from CPUID.
Backend detected_backend();
/// Backend used by scan_row; defaults to detected_backend().
Backend active_backend();
/// Pins the backend (tests, --kernel flag). Throws InputError if unavailable.
void set_active_backend(Backend b);

RowResult scan_row_scalar(const RowProblem& p);
RowResult scan_row_avx2(const RowProblem& p);
RowResult scan_row(const RowProblem& p);

/// True when every intermediate of both int64 kernels stays within range
/// for this problem. Checked with exact arithmetic.
bool fits_int64_kernels(const BigRowProblem& p);

/// Dispatches to the int64 kernels when safe, otherwise evaluates exactly.
BigRowResult scan_row_exact(const BigRowProblem& p);

}  // namespace k3bn::scan
