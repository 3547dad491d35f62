#pragma once

#include "concordia/factor.hpp"
#include "concordia/laurent.hpp"

namespace concordia {

// Key normal form for class factors: associate-canonical and primitive
// integral, so that both monomial units and rational scalars (which lie in
// the norm subgroup) are quotiented away. Returns the constant 1 when f is a
// unit times a rational.
LaurentPoly class_key(const LaurentPoly& f);

// Factored representative of an element of Q(F)^x / N(F). Keys are class
// normal forms of irreducible non-unit polynomials; multiplicities are
// signed and never zero.
class TorsionClass {
public:
    static TorsionClass trivial();

    // Builds a class from factored input. Zero factors are rejected. Unless
    // trust_irreducible is set, every factor that the bounded factorizer can
    // decide (one effective variable, degree <= 4 after normalization) is
    // verified; a reducible one is an error. Factors outside that range are
    // accepted as irreducible by assumption.
    static TorsionClass make(const std::vector<std::pair<LaurentPoly, long long>>& factored_input,
                             bool trust_irreducible);

    const std::map<LaurentPoly, long long>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    // Group law; with invert_b the multiplicities of b are subtracted.
    TorsionClass mul(const TorsionClass& b, bool invert_b = false) const;

    // Quotient normal form: symmetric keys keep their multiplicity mod 2,
    // conjugate pairs {p, involute-key} collapse onto the lexicographically
    // smaller key with the multiplicity difference. Idempotent.
    TorsionClass canonicalize() const;

    bool is_trivial() const { return canonicalize().empty(); }

private:
    std::map<LaurentPoly, long long> factors_;

    void add_factor(const LaurentPoly& key, long long mult);
};

// Value of the parity homomorphism Phi_g on the class c, for irreducible
// symmetric g: the multiplicity of g in the canonicalized class, mod 2.
int parity_hom(const LaurentPoly& g, const TorsionClass& c);

}  // namespace concordia
