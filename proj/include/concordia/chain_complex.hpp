#pragma once

#include "concordia/matrix_ops.hpp"

namespace concordia {

// Based finite chain complex over Q(F). boundaries[k] is the matrix of
// d_{k+1}: C_{k+1} -> C_k with shape ranks[k] x ranks[k+1]; bases are
// implicit in the coordinate order.
struct BasedChainComplex {
    int ring_rank = 1;
    std::vector<std::size_t> ranks;
    std::vector<Matrix<RationalFunction>> boundaries;

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

// Shape compatibility (throws, naming the degree) and d o d = 0 (returned).
bool check_complex(const BasedChainComplex& c);

bool is_acyclic(const BasedChainComplex& c);

// Torsion of an acyclic based complex by the splitting algorithm: walking
// from the bottom degree up, greedily choose the leftmost column subset of
// each boundary that makes the stacked block invertible, and return the
// alternating product of the block determinants. Well-defined up to sign;
// for a two-term complex in degrees (1,0) it equals det(d) exactly.
RationalFunction torsion(const BasedChainComplex& c);

// Degreewise short exact sequence check plus the multiplicativity identity
// tau(total) = +/- tau(sub) * tau(quotient). inclusions[k] has shape
// total.ranks[k] x sub.ranks[k]; projections[k] has shape
// quotient.ranks[k] x total.ranks[k]. Structural defects throw; a failed
// torsion identity returns false.
bool ses_multiplicativity_check(const BasedChainComplex& sub, const BasedChainComplex& total,
                                const BasedChainComplex& quotient,
                                const std::vector<Matrix<RationalFunction>>& inclusions,
                                const std::vector<Matrix<RationalFunction>>& projections);

// Twisted cellular complex of the one-vertex 2-torus, with the two loop
// generators sent to the given units a and b. Acyclic iff (a,b) != (1,1).
BasedChainComplex torus_complex(const MonomialUnit& meridian_image,
                                const MonomialUnit& longitude_image);

}  // namespace concordia
