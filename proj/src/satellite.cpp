#include "concordia/satellite.hpp"

namespace concordia {

SatelliteSpec::SatelliteSpec(MonomialUnit longitude) : longitude_image(std::move(longitude)) {
    if (longitude_image.sign != 1)
        throw std::invalid_argument("longitude image must be a positive monomial");
    if (longitude_image.is_one())
        throw std::invalid_argument("longitude image must be non-trivial");
}

bool SatelliteSpec::is_verified_case() const {
    int nonzero = 0;
    bool square = false;
    for (int e : longitude_image.exponent) {
        if (e != 0) {
            ++nonzero;
            square = (e == 2);
        }
    }
    return nonzero == 1 && square;
}

BaseTorsionSet BaseTorsionSet::trivial(const std::string& label) {
    BaseTorsionSet set;
    set.classes.emplace(label, TorsionClass::trivial());
    return set;
}

LaurentPoly specialize_pattern(const PatternPolynomial& pattern, const SatelliteSpec& spec) {
    if (pattern.poly.rank() != 2)
        throw std::invalid_argument("pattern polynomial must be bivariate in (s, t)");
    std::vector<SpecImage> images{SpecImage::constant(spec.meridian_sign),
                                  SpecImage::monomial(spec.longitude_image)};
    return specialize(pattern.poly, images, spec.ring_rank());
}

TorsionClass satellite_class(const TorsionClass& base, const LaurentPoly& specialized,
                             const std::vector<std::pair<LaurentPoly, long long>>* factor_hint) {
    if (specialized.is_zero())
        throw std::invalid_argument("specialized pattern polynomial is zero");
    if (class_key(specialized).is_constant()) return base;  // rational constant: lies in N(F)

    if (factor_hint) {
        LaurentPoly product = LaurentPoly::constant(specialized.rank(), 1);
        for (const auto& [poly, mult] : *factor_hint) {
            if (mult < 0) throw std::invalid_argument("hint multiplicities must be positive");
            for (long long i = 0; i < mult; ++i) product = product * poly;
        }
        auto q = try_divide(specialized, product);
        if (!q || !q->is_monomial())
            throw std::domain_error("factor hint does not multiply back to the polynomial");
        return base.mul(TorsionClass::make(*factor_hint, /*trust_irreducible=*/false));
    }

    BoundedFactorization fac = [&] {
        try {
            return factor_bounded_univariate(specialized);
        } catch (const std::invalid_argument& e) {
            throw std::domain_error(std::string("cannot verify factorization (") + e.what() +
                                    "); provide a factor hint");
        }
    }();
    std::vector<std::pair<LaurentPoly, long long>> factors;
    for (const auto& [poly, mult] : fac.factors) factors.emplace_back(poly, mult);
    return base.mul(TorsionClass::make(factors, /*trust_irreducible=*/true));
}

BaseTorsionSet local_knot_action(const BaseTorsionSet& base, const LaurentPoly& delta_j) {
    if (delta_j.rank() != 1) throw std::invalid_argument("knot polynomial must be univariate");
    if (delta_j.is_zero()) throw std::invalid_argument("zero is not a knot polynomial");

    LaurentPoly at_minus_one =
        specialize(delta_j, {SpecImage::constant(-1)}, 1);
    Rational v = *at_minus_one.as_constant();
    if (!is_integer(v) || v == 0 || numerator(v) % 2 == 0)
        throw std::domain_error("value at -1 is not an odd integer: not a knot polynomial");

    LaurentPoly at_one = specialize(delta_j, {SpecImage::constant(1)}, 1);
    if (boost::multiprecision::abs(*at_one.as_constant()) != 1)
        throw std::domain_error("|value at 1| != 1: not a knot polynomial");

    return base;  // the action multiplies every class by a rational, which dies in N(F)
}

SpecializedPattern specialized_mazur(long long p, const SatelliteSpec& spec,
                                     std::vector<std::string>* warnings) {
    SpecializedPattern out;
    out.poly = specialize_pattern(mazur_alexander(p), spec);
    if (spec.is_verified_case()) {
        BoundedFactorization fac = factor_bounded_univariate(out.poly);
        if (!fac.is_irreducible())
            throw std::logic_error("specialized Mazur polynomial unexpectedly reducible");
        out.irreducibility_verified = true;
        out.candidates_tested = fac.candidates_tested;
    } else if (warnings) {
        warnings->push_back(
            "longitude image is not the square of a single variable: irreducibility of the "
            "specialized polynomials is unverified");
    }
    return out;
}

LaurentPoly base_factor_product(const BaseTorsionSet& base, int ring_rank) {
    LaurentPoly product = LaurentPoly::constant(ring_rank, 1);
    for (const auto& [label, cls] : base.classes)
        for (const auto& [key, mult] : cls.factors()) {
            if (key.rank() != ring_rank)
                throw std::invalid_argument("base class ring rank does not match the longitude");
            for (long long i = 0; i < std::llabs(mult); ++i) product = product * key;
        }
    return product;
}

std::vector<long long> admissible_primes(const LaurentPoly& G, long long bound,
                                         const SatelliteSpec* spec) {
    if (G.is_zero()) throw std::invalid_argument("divisibility against the zero polynomial");
    SatelliteSpec def = [&] {
        if (spec) return *spec;
        Exponents e(G.rank(), 0);
        e[0] = 2;
        return SatelliteSpec(MonomialUnit(1, e));
    }();
    if (def.ring_rank() != G.rank()) throw std::invalid_argument("ring rank mismatch");

    std::vector<long long> result;
    for (long long p : odd_primes_up_to(bound)) {
        LaurentPoly g_p = specialize_pattern(mazur_alexander(p), def);
        if (!divides(g_p, G)) result.push_back(p);
    }
    return result;
}

DistinguishCertificate distinguish_family(const BaseTorsionSet& base, long long n, long long m,
                                          const SatelliteSpec& spec) {
    if (base.classes.empty()) throw std::invalid_argument("base torsion set must be non-empty");
    for (long long p : {n, m})
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw std::invalid_argument("family parameters must be odd primes");

    DistinguishCertificate cert;
    cert.n = n;
    cert.m = m;

    SpecializedPattern g_n = specialized_mazur(n, spec, &cert.warnings);
    SpecializedPattern g_m = specialized_mazur(m, spec, nullptr);

    LaurentPoly G = base_factor_product(base, spec.ring_rank());
    for (const auto* g : {&g_n, &g_m})
        if (divides(g->poly, G))
            throw std::domain_error(
                "inadmissible prime: the specialized polynomial divides the base product, so the "
                "base parity is uncontrolled");

    TorsionClass cls_n =
        TorsionClass::make({{g_n.poly, 1}}, /*trust_irreducible=*/!g_n.irreducibility_verified);
    TorsionClass cls_m =
        TorsionClass::make({{g_m.poly, 1}}, /*trust_irreducible=*/!g_m.irreducibility_verified);
    cert.separating_poly = class_key(g_m.poly);

    bool first = true;
    int value_n = 0, value_m = 0;
    bool constant_rows = true;
    for (const auto& [label, cls] : base.classes) {
        ParityRow row;
        row.on_family_n = parity_hom(g_m.poly, cls.mul(cls_n));
        row.on_family_m = parity_hom(g_m.poly, cls.mul(cls_m));
        if (first) {
            value_n = row.on_family_n;
            value_m = row.on_family_m;
            first = false;
        } else if (row.on_family_n != value_n || row.on_family_m != value_m) {
            constant_rows = false;
        }
        cert.parity_table.emplace(label, row);
    }
    cert.distinguished = constant_rows && value_n != value_m;
    return cert;
}

}  // namespace concordia
