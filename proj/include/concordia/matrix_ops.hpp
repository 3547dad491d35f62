#pragma once

#include "concordia/matrix.hpp"
#include "concordia/ratfun.hpp"

namespace concordia {

// Fraction-free (Bareiss) determinant over the Laurent ring; every interior
// division is exact.
LaurentPoly det_bareiss(const Matrix<LaurentPoly>& m, int ring_rank);

// Rank over the fraction field, computed division-free by cross-multiplied
// row elimination.
std::size_t rank_of(const Matrix<LaurentPoly>& m);
std::size_t rank_of(const Matrix<RationalFunction>& m);

// Clears denominators row by row and divides the polynomial determinant back
// out, so no rational-function elimination is ever needed.
RationalFunction det_ratfun(const Matrix<RationalFunction>& m, int ring_rank);

// Leftmost column subset of maximal rank (greedy); used to split acyclic
// complexes deterministically.
std::vector<std::size_t> greedy_independent_columns(const Matrix<RationalFunction>& m);

Matrix<LaurentPoly> to_poly_matrix(const Matrix<RationalFunction>& m, int ring_rank,
                                   LaurentPoly* row_factor_product);

Matrix<RationalFunction> mat_mul(const Matrix<RationalFunction>& a,
                                 const Matrix<RationalFunction>& b, int ring_rank);

bool is_zero_matrix(const Matrix<RationalFunction>& m);

}  // namespace concordia
