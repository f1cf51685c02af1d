#include "k3bn/json_io.hpp"

#include <fstream>
#include <sstream>

namespace k3bn::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where + "." + key, "missing");
  return *it;
}

long small_int(const Json& j, const std::string& where, long lo, long hi) {
  const Integer v = to_integer(j, where);
  if (v < lo || v > hi) fail(where, "out of range");
  return v.get_si();
}

int key_int(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const int q = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return q;
  } catch (const std::exception&) {
    fail(where, "key \"" + key + "\" is not an integer");
  }
}

RatMatrix rat_matrix(const Json& j, const std::string& where, std::size_t rows_hint_cols = 0) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? rows_hint_cols : 0;
  if (rows > 0) {
    if (!j[0].is_array()) fail(where + "[0]", "expected an array");
    cols = j[0].size();
  }
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string wi = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(wi, "expected an array");
    if (j[i].size() != cols) fail(wi, "row length " + std::to_string(j[i].size()) + ", expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = to_rational(j[i][c], wi + "[" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Integer to_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return from_i64(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a decimal string");
}

Rational to_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(to_integer(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a rational string \"a/b\"");
}

PicardLattice lattice_from_json(const Json& j) {
  const Json& g = field(j, "gram", "$");
  if (!g.is_array() || g.empty()) fail("$.gram", "expected a nonempty array of rows");
  const std::size_t n = g.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string wi = "$.gram[" + std::to_string(i) + "]";
    if (!g[i].is_array() || g[i].size() != n) fail(wi, "expected a row of length " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) m(i, c) = to_integer(g[i][c], wi + "[" + std::to_string(c) + "]");
  }
  if (j.contains("rank") && static_cast<std::size_t>(small_int(j["rank"], "$.rank", 0, 1 << 20)) != n)
    fail("$.rank", "does not match the gram size");
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const Json& b = j["basis"];
    if (!b.is_array() || b.size() != n) fail("$.basis", "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) fail("$.basis[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(b[i].get<std::string>());
    }
  }
  try {
    return PicardLattice(std::move(m), std::move(labels));
  } catch (const InputError& e) {
    fail("$.gram", e.what());
  }
}

Json lattice_to_json(const PicardLattice& lattice) {
  Json j;
  j["rank"] = lattice.rank();
  j["basis"] = lattice.labels();
  j["gram"] = matrix_json(lattice.gram());
  return j;
}

GradedRingData ring_from_json(const Json& j, const std::string& root) {
  GradedRingData r;
  r.nL = static_cast<int>(small_int(field(j, "nL", root), root + ".nL", 0, 64));
  const Json& pieces = field(j, "pieces", root);
  if (!pieces.is_object()) fail(root + ".pieces", "expected an object");
  for (const auto& [k, v] : pieces.items()) {
    const std::string where = root + ".pieces." + k;
    r.pieces[key_int(k, where)] = static_cast<int>(small_int(v, where, 0, 1 << 16));
  }
  const Json& mult = field(j, "mult", root);
  if (!mult.is_object()) fail(root + ".mult", "expected an object");
  for (const auto& [k, v] : mult.items()) {
    const std::string where = root + ".mult." + k;
    const int q = key_int(k, where);
    RatMatrix m = rat_matrix(v, where, static_cast<std::size_t>(r.nL) * static_cast<std::size_t>(r.piece(q)));
    r.mult.emplace(q, std::move(m));
  }
  try {
    r.validate();
  } catch (const InputError& e) {
    fail(root, e.what());
  }
  return r;
}

LambdaData lambda_from_json(const Json& j) {
  LambdaData l;
  l.p = static_cast<int>(small_int(field(j, "p", "$"), "$.p", 0, 16));
  l.rows = rat_matrix(field(j, "lambda", "$"), "$.lambda");
  return l;
}

Json integer_json(const Integer& x) {
  if (fits_i64(x)) return Json(to_i64(x));
  return Json(to_string(x));
}

Json rational_json(const Rational& x) {
  if (x.get_den() == 1) return integer_json(x.get_num());
  return Json(to_string(x));
}

Json class_json(const DivisorClass& x) {
  Json a = Json::array();
  for (const auto& c : x.coords()) a.push_back(integer_json(c));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(i, c)));
    a.push_back(std::move(row));
  }
  return a;
}

}  // namespace k3bn::json_io
