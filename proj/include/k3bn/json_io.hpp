#pragma once

// JSON readers and writers for lattices, graded ring data and lambda tables.
// Parse errors are InputError with the offending JSON path.

#include "k3bn/koszul.hpp"
#include "k3bn/lattice.hpp"

#include <json.hpp>

#include <string>

namespace k3bn::json_io {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; the path appears in error messages.
Json load_file(const std::string& path);

Integer to_integer(const Json& j, const std::string& where);
Rational to_rational(const Json& j, const std::string& where);

/// {"rank":2, "basis":["H","C"], "gram":[[6,13],[13,20]]}; rank and basis
/// are optional.
PicardLattice lattice_from_json(const Json& j);
Json lattice_to_json(const PicardLattice& lattice);

/// {"nL":3, "pieces":{"0":1,...}, "mult":{"0":[[...]],...}}
GradedRingData ring_from_json(const Json& j, const std::string& root = "$");

/// {"p":1, "lambda":[[...],...]} plus an optional "ring" object.
LambdaData lambda_from_json(const Json& j);

/// Number when it fits in 64 bits, otherwise a decimal string.
Json integer_json(const Integer& x);
/// Integer values as integers, otherwise "a/b".
Json rational_json(const Rational& x);
Json class_json(const DivisorClass& x);
Json matrix_json(const IntMatrix& m);

}  // namespace k3bn::json_io
