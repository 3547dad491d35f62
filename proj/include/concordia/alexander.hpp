#pragma once

#include <string>

#include "concordia/matrix_ops.hpp"

namespace concordia {

// Assembled C-complex pairing: a square matrix over the Laurent ring in one
// variable per link component. By convention the first variable is the
// pattern meridian s and the second the longitude t.
struct CComplexPairing {
    int components = 0;
    int generators = 0;
    Matrix<LaurentPoly> matrix;
    std::vector<std::string> variable_names;
};

struct PatternPolynomial {
    LaurentPoly poly;
    long long winding_number = 1;
};

// Signed sum beta = sum_eps (-1)^|eps| A^eps X^eps over eps in {0,1}^m. Keys
// of linking_matrices are bitstrings of length m ("0"/"1", "00".."11", ...),
// leftmost bit = first variable. Half-integer clasp contributions must have
// cancelled: a non-integral assembled entry is an error.
CComplexPairing assemble_pairing(const std::map<std::string, Matrix<Rational>>& linking_matrices,
                                 const std::vector<std::string>& variable_names);

// Determinant of the pairing over the Laurent ring, associate-normalized.
// For m <= 2 the value at all variables = 1 must equal the linking number in
// absolute value (Torres), otherwise an error; for m > 2 the determinant is
// returned unnormalized and a warning is appended.
PatternPolynomial alexander_from_pairing(const CComplexPairing& pairing, long long linking_number,
                                         std::vector<std::string>* warnings = nullptr);

// The pairing matrix [[n(1-t)(1-s), -s], [-t, -(s+t)]] of the n-twist Mazur
// pattern, n >= 1.
CComplexPairing mazur_pairing(long long n);

// Closed form n(s^2 t + s t^2 - s^2 - t^2 + s + t) - (2n-1) s t.
PatternPolynomial mazur_alexander(long long n);

// Pattern polynomial of the local pattern of a knot with Alexander
// polynomial delta_j: the bivariate polynomial delta_j(s), constant in t.
PatternPolynomial local_pattern_alexander(const LaurentPoly& delta_j);

}  // namespace concordia
