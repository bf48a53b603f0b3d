#ifndef ORTHOSMITH_JSON_IO_HPP
#define ORTHOSMITH_JSON_IO_HPP

#include <string>
#include <variant>

#include "orthosmith/matrix.hpp"

namespace orthosmith {

enum class ScalarRing { integers, rationals, gaussian_integers };

// Tagged matrix as it appears in the shared file format:
//   {"n": int, "ring": "Z"|"Q"|"Zi", "entries": [[...], ...]}
// Rational entries are "p/q" strings, Gaussian entries [re, im] pairs.
struct AnyMatrix {
    ScalarRing ring;
    std::variant<Matrix<Integer>, Matrix<Rational>, Matrix<GaussianInteger>> value;
};

AnyMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const AnyMatrix& m);

std::string matrix_to_json(const Matrix<Integer>& m);
std::string matrix_to_json(const Matrix<Rational>& m);
std::string matrix_to_json(const Matrix<GaussianInteger>& m);

const char* ring_name(ScalarRing ring);
ScalarRing ring_from_name(const std::string& name);

// Ring reinterpretations used by the probability subcommand.
Matrix<Integer> require_integer_matrix(const AnyMatrix& m);
Matrix<GaussianInteger> require_gaussian_matrix(const AnyMatrix& m);
Matrix<Rational> require_rational_matrix(const AnyMatrix& m);

} // namespace orthosmith

#endif
