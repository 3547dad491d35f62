#pragma once

#include "concordia/alexander.hpp"
#include "concordia/torsion_class.hpp"

namespace concordia {

// Homological shadow of the satellite construction for the supported
// pipeline: a meridional character sends the (torsion) meridian to -1, and
// the longitude maps to a positive monomial of F, e.g. u^2.
struct SatelliteSpec {
    MonomialUnit longitude_image;
    int meridian_sign = -1;

    explicit SatelliteSpec(MonomialUnit longitude);
    int ring_rank() const { return longitude_image.rank(); }

    // The verified pipeline has longitude image u^2 on a single variable;
    // anything else leaves irreducibility of the specialized polynomials
    // unverified.
    bool is_verified_case() const;
};

// Opaque factored base torsion, one class per meridional character label.
struct BaseTorsionSet {
    std::map<std::string, TorsionClass> classes;

    static BaseTorsionSet trivial(const std::string& label = "rho0");
};

// Substitution s -> meridian sign, t -> longitude image.
LaurentPoly specialize_pattern(const PatternPolynomial& pattern, const SatelliteSpec& spec);

// Torsion update under the satellite: multiply the base class by the class
// of the specialized pattern polynomial. Without a hint the polynomial must
// be factorable by the bounded search; rational constants leave the base
// unchanged.
TorsionClass satellite_class(
    const TorsionClass& base, const LaurentPoly& specialized,
    const std::vector<std::pair<LaurentPoly, long long>>* factor_hint = nullptr);

// Local knotting acts trivially on the torsion set; validates that delta_j
// is a knot polynomial (|delta(1)| = 1, delta(-1) odd).
BaseTorsionSet local_knot_action(const BaseTorsionSet& base, const LaurentPoly& delta_j);

// Odd primes p <= bound whose specialized Mazur polynomial g_p does not
// divide G. The longitude defaults to u^2 on the first variable of G's ring.
std::vector<long long> admissible_primes(const LaurentPoly& G, long long bound,
                                         const SatelliteSpec* spec = nullptr);

// g_p together with its irreducibility status for the certificate.
struct SpecializedPattern {
    LaurentPoly poly{1};
    bool irreducibility_verified = false;
    unsigned long long candidates_tested = 0;
};
SpecializedPattern specialized_mazur(long long p, const SatelliteSpec& spec,
                                     std::vector<std::string>* warnings = nullptr);

struct ParityRow {
    int on_family_n = 0;  // Phi_{g_m} on the element of I_n for this character
    int on_family_m = 0;
};

struct DistinguishCertificate {
    long long n = 0, m = 0;
    bool distinguished = false;
    LaurentPoly separating_poly{1};                 // g_m, class-normal form
    std::map<std::string, ParityRow> parity_table;  // per character label
    std::vector<std::string> warnings;
};

// Separation certificate for the satellite families I_n, I_m built from the
// base set: evaluates the parity homomorphism of g_m on both families and
// certifies disjointness when it is constant and differs between them.
// Inadmissible primes (g divides the product of base factors) are an error.
DistinguishCertificate distinguish_family(const BaseTorsionSet& base, long long n, long long m,
                                          const SatelliteSpec& spec);

// Product of all base factor polynomials (numerators and denominators), the
// divisibility input for admissibility.
LaurentPoly base_factor_product(const BaseTorsionSet& base, int ring_rank);

}  // namespace concordia
