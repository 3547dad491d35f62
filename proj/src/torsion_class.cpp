#include "concordia/torsion_class.hpp"

namespace concordia {

namespace {

// Decidable by the bounded search: one effective variable, degree <= 4.
bool verifiable(const LaurentPoly& f) {
    if (!f.is_integral()) return false;
    Exponents lo = f.min_exponents();
    Exponents hi = lo;
    for (const auto& [e, c] : f.terms())
        for (std::size_t j = 0; j < lo.size(); ++j) hi[j] = std::max(hi[j], e[j]);
    int effective = 0, span = 0;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        if (hi[j] != lo[j]) {
            ++effective;
            span = hi[j] - lo[j];
        }
    }
    return effective == 1 && span <= 4;
}

}  // namespace

LaurentPoly class_key(const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no class");
    LaurentPoly canonical = normalize_associate(f).canonical;
    return canonical.primitive_part();
}

TorsionClass TorsionClass::trivial() { return TorsionClass{}; }

void TorsionClass::add_factor(const LaurentPoly& key, long long mult) {
    if (mult == 0) return;
    auto [it, inserted] = factors_.emplace(key, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) factors_.erase(it);
    }
}

TorsionClass TorsionClass::make(
    const std::vector<std::pair<LaurentPoly, long long>>& factored_input, bool trust_irreducible) {
    TorsionClass c;
    for (const auto& [poly, mult] : factored_input) {
        if (poly.is_zero()) throw std::invalid_argument("zero factor in torsion class input");
        LaurentPoly key = class_key(poly);
        if (key.is_constant()) continue;  // rational scalar or monomial unit: in N(F)
        if (!trust_irreducible && verifiable(key)) {
            BoundedFactorization fac = factor_bounded_univariate(key);
            if (!fac.is_irreducible())
                throw std::domain_error("torsion class factor is reducible");
        }
        c.add_factor(key, mult);
    }
    return c;
}

TorsionClass TorsionClass::mul(const TorsionClass& b, bool invert_b) const {
    TorsionClass r = *this;
    for (const auto& [key, mult] : b.factors_) r.add_factor(key, invert_b ? -mult : mult);
    return r;
}

TorsionClass TorsionClass::canonicalize() const {
    TorsionClass out;
    std::map<LaurentPoly, long long> pending = factors_;
    while (!pending.empty()) {
        auto [key, mult] = *pending.begin();
        pending.erase(pending.begin());
        LaurentPoly partner = class_key(key.involute());
        if (partner == key) {  // symmetric: g*involute(g) is a norm, so g^2 dies
            long long r = ((mult % 2) + 2) % 2;
            if (r != 0) out.add_factor(key, 1);
            continue;
        }
        long long partner_mult = 0;
        if (auto it = pending.find(partner); it != pending.end()) {
            partner_mult = it->second;
            pending.erase(it);
        }
        // p * involute(p) is a norm; only the multiplicity difference
        // survives, carried by the lexicographically smaller key.
        if (key < partner)
            out.add_factor(key, mult - partner_mult);
        else
            out.add_factor(partner, partner_mult - mult);
    }
    return out;
}

int parity_hom(const LaurentPoly& g, const TorsionClass& c) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!is_symmetric(g))
        throw std::domain_error("parity homomorphism requires a symmetric polynomial");
    LaurentPoly key = class_key(g);
    if (key.is_constant()) throw std::domain_error("parity homomorphism requires a non-unit");
    if (verifiable(key)) {
        BoundedFactorization fac = factor_bounded_univariate(key);
        if (!fac.is_irreducible())
            throw std::domain_error("parity homomorphism requires an irreducible polynomial");
    }
    TorsionClass canon = c.canonicalize();
    auto it = canon.factors().find(key);
    long long mult = it == canon.factors().end() ? 0 : it->second;
    return static_cast<int>(((mult % 2) + 2) % 2);
}

}  // namespace concordia
