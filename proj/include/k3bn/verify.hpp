#pragma once

// Regression driver re-deriving the computational claims of the K3
// constructions: Clifford-index sweeps, the Fourier-Mukai table and the
// Lazarsfeld-Mukai numerology.

#include "k3bn/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3bn {

enum class Theorem { Prop33, Thm41, FmTable, LmGamma };

std::string_view theorem_name(Theorem t);
/// Throws InputError on an unknown id.
Theorem parse_theorem(std::string_view id);

struct IntRange {
  long lo = 0;
  long hi = -1;
  bool empty() const { return hi < lo; }
};
/// "lo:hi" or a single value; throws InputError when lo > hi.
IntRange parse_range(std::string_view text);

struct VerifyPlan {
  Theorem theorem = Theorem::FmTable;
  std::optional<IntRange> p_range;  ///< prop33, lm-gamma: default 1:4
  std::optional<IntRange> a_range;  ///< absolute a values
  std::optional<long> a_span;       ///< a = 2p+3 .. 2p+2+span; default 13
  std::optional<IntRange> b_range;  ///< thm41: default 4:6
  long bound = 50;                  ///< n range, isotropic and (-2)-class bounds
  std::optional<long> m_cap;
};

struct Check {
  std::string name;
  json_io::Json computed;
  json_io::Json expected;
  bool ok = false;
};

struct Case {
  std::string id;
  /// False for parameter values outside the construction's range, where
  /// the claim is expected to break and the case checks that it does.
  bool construction_applies = true;
  std::string source;
  std::vector<Check> checks;
  bool pass() const;
};

struct Report {
  std::string theorem;
  std::vector<Case> cases;
  bool pass() const;
  /// 0 all pass, 1 any failure
  int exit_code() const { return pass() ? 0 : 1; }
};

/// Throws InputError for out-of-domain parameters.
Report run_verify(const VerifyPlan& plan);

json_io::Json report_json(const Report& r);
std::string emit_human(const Report& r);
std::string emit_json(const Report& r);

}  // namespace k3bn
