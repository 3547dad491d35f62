#pragma once

#include "concordia/laurent.hpp"

namespace concordia {

struct BoundedFactorization {
    // Irreducible factors of Z[F] in canonical associate form (primitive,
    // lex-min exponent zero, positive leading coefficient); integer prime
    // constants appear as degree-zero factors.
    std::vector<std::pair<LaurentPoly, int>> factors;
    MonomialUnit unit;  // input = unit * prod factor^multiplicity
    unsigned long long candidates_tested = 0;

    bool is_irreducible() const {
        return factors.size() == 1 && factors.front().second == 1 &&
               !factors.front().first.is_constant();
    }
};

// Complete factorization into Z-irreducibles for inputs that are effectively
// univariate of degree <= 4 with integer coefficients. The search runs over
// all linear and quadratic integer factor candidates whose extreme
// coefficients divide the extreme coefficients of the input (middle
// coefficients capped by a Cauchy root bound), so a "no factor" outcome is a
// certificate of irreducibility; candidates_tested records the search size.
BoundedFactorization factor_bounded_univariate(const LaurentPoly& f);

bool is_prime(long long n);
std::vector<long long> odd_primes_up_to(long long bound);

}  // namespace concordia
