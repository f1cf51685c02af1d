#include "k3bn/integer.hpp"

#include <climits>

namespace k3bn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_integer_literal(s)) throw InputError("not an integer: '" + std::string(text) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw InputError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_integer(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Integer& x) { return x.get_str(10); }
std::string to_string(const Rational& x) { return x.get_str(10); }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("ceil_div by zero");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::optional<Integer> exact_sqrt(const Integer& x) {
  if (x < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Integer gcd_of(const std::vector<Integer>& xs) {
  Integer g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

bool fits_i64(const Integer& x) {
  static const Integer lo = from_i64(INT64_MIN);
  static const Integer hi = from_i64(INT64_MAX);
  return x >= lo && x <= hi;
}

std::int64_t to_i64(const Integer& x) {
  if (!fits_i64(x)) throw std::overflow_error("integer does not fit in 64 bits: " + to_string(x));
  // mpz_get_si is exact for values in range on LP64.
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

Integer from_i64(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace k3bn
