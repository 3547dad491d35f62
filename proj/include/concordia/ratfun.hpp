#pragma once

#include "concordia/laurent.hpp"

namespace concordia {

// Element of the quotient field Q(F) as a formal fraction of Laurent
// polynomials. Never reduced to lowest terms; equality is decided by
// cross-multiplication. The denominator is kept anchored (lex-min exponent
// zero, primitive, positive leading coefficient) which only multiplies
// numerator and denominator by the same unit of Q[F].
class RationalFunction {
public:
    explicit RationalFunction(int rank);
    RationalFunction(LaurentPoly num, LaurentPoly den);
    explicit RationalFunction(LaurentPoly num);
    static RationalFunction constant(int rank, const Rational& c);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int rank() const { return num_.rank(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& g) const;
    RationalFunction operator-(const RationalFunction& g) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& g) const;
    RationalFunction inverse() const;

    bool operator==(const RationalFunction& g) const;  // cross-multiplication

    // True when the fraction is a rational multiple of a monomial, i.e. lies
    // in the subgroup Q^x * F of N(F).
    bool is_rational_times_monomial() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

std::string to_string(const RationalFunction& r, const std::vector<std::string>& variables);

// Entry text for matrices over Q(F): either a bare polynomial or
// "num/den" split at a top-level '/'; parenthesise both sides when in doubt.
RationalFunction parse_ratfun(const std::string& text, const std::vector<std::string>& variables);

}  // namespace concordia
