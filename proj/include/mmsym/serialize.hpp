#pragma once

#include <string>

#include "mmsym/algebra.hpp"
#include "mmsym/symmetry.hpp"

namespace mmsym {

/// Parse an algorithm document:
///   { "name": str, "m": int, "n": int, "p": int,
///     "triples": [ { "a": [[rat]], "b": [[rat]], "c": [[rat]] }, ... ] }
/// Rational entries are strings like "-3/2" or plain JSON integers.
/// Throws parse_error (with location), shape_error, contract_error.
BilinearAlgorithm parse_algorithm(const std::string& text);

/// Serialize with fixed key order (name, m, n, p, triples) for byte-stable
/// output; round-trips exactly through parse_algorithm.
std::string serialize_algorithm(const BilinearAlgorithm& alg);

/// Parse a group element document:
///   { "sigma": "e"|"(12)"|"(13)"|"(23)"|"(123)"|"(132)",
///     "a": [[rat]], "b": [[rat]], "c": [[rat]] }
/// The format is taken from the matrix sizes.
IsotropyElement parse_element(const std::string& text);

std::string serialize_element(const IsotropyElement& g);

/// Parse a bare matrix document: a JSON array of rows of rationals.
ExactMatrix parse_matrix(const std::string& text);

std::string serialize_matrix(const ExactMatrix& mat);

} // namespace mmsym
