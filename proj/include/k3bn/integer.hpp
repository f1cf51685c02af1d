#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k3bn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when caller-supplied data violates an operation's precondition.
/// The CLI maps this to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer parse_integer(std::string_view text);
/// Accepts "a", "-a", "a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);
/// Comma separated integers, e.g. "2,1,1,12".
std::vector<Integer> parse_integer_list(std::string_view text);

/// n/d in lowest terms with positive denominator; d == 0 throws.
Rational make_rational(const Integer& n, const Integer& d);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

/// Exact square root when x is a perfect square, otherwise nullopt.
std::optional<Integer> exact_sqrt(const Integer& x);

Integer gcd_of(const std::vector<Integer>& xs);

/// Fits in a signed 64-bit integer.
bool fits_i64(const Integer& x);
std::int64_t to_i64(const Integer& x);
Integer from_i64(std::int64_t v);

}  // namespace k3bn
