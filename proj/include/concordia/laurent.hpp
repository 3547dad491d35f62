#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "concordia/rational.hpp"

namespace concordia {

// Exponent vector of a monomial in the free abelian group F of rank r.
// std::vector's operator< is the lexicographic term order used throughout.
using Exponents = std::vector<int>;

Exponents exponents_add(const Exponents& a, const Exponents& b);
Exponents exponents_sub(const Exponents& a, const Exponents& b);
Exponents exponents_neg(const Exponents& a);

// A unit of Z[F]: one of +/- X^e.
struct MonomialUnit {
    int sign = 1;
    Exponents exponent;

    MonomialUnit() = default;
    MonomialUnit(int s, Exponents e);

    int rank() const { return static_cast<int>(exponent.size()); }
    bool is_one() const;
    MonomialUnit inverse() const;
    MonomialUnit operator*(const MonomialUnit& other) const;
    bool operator==(const MonomialUnit& other) const = default;
};

// Element of Q[F]: finitely supported map from exponent vectors to rational
// coefficients. No stored coefficient is zero. Values are immutable after
// construction; all operations are pure.
class LaurentPoly {
public:
    explicit LaurentPoly(int rank);
    static LaurentPoly constant(int rank, const Rational& c);
    static LaurentPoly monomial(int rank, const Exponents& e, const Rational& c = 1);
    static LaurentPoly variable(int rank, int index, int power = 1);
    static LaurentPoly from_unit(const MonomialUnit& u);

    int rank() const { return rank_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Exponents& e) const;
    std::optional<Rational> as_constant() const;
    std::optional<MonomialUnit> as_unit() const;

    // Componentwise minimum of the support; requires a nonzero polynomial.
    Exponents min_exponents() const;
    const Exponents& lex_min_exponent() const;
    const Exponents& lex_max_exponent() const;
    const Rational& leading_coeff() const;  // coefficient at the lex-greatest exponent

    // Positive rational c such that f/c is primitive integral; 0 for the zero polynomial.
    Rational content() const;
    LaurentPoly primitive_part() const;

    LaurentPoly shifted(const Exponents& delta) const;  // multiply by X^delta
    LaurentPoly involute() const;                       // X^e -> X^{-e} on every term

    LaurentPoly operator+(const LaurentPoly& g) const;
    LaurentPoly operator-(const LaurentPoly& g) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& g) const;
    LaurentPoly operator*(const Rational& c) const;

    bool operator==(const LaurentPoly& g) const;

private:
    int rank_;
    std::map<Exponents, Rational> terms_;

    void insert_term(const Exponents& e, const Rational& c);
    void check_same_ring(const LaurentPoly& g) const;
};

// Deterministic total order (ring rank, then term sequences); used for map
// keys and pair tie-breaks, not mathematically meaningful.
bool operator<(const LaurentPoly& a, const LaurentPoly& b);

// Image of one variable under a specialization: a monomial unit in the
// target ring or the rational constant +/-1.
struct SpecImage {
    static SpecImage constant(int sign);
    static SpecImage monomial(MonomialUnit u);

    bool is_constant = true;
    int constant_sign = 1;
    MonomialUnit mono;
};

// Ring homomorphism Q[F] -> Q[F'] determined by one image per source
// variable. All monomial images must live in rank target_rank.
LaurentPoly specialize(const LaurentPoly& f, const std::vector<SpecImage>& images, int target_rank);

struct AssociateForm {
    LaurentPoly canonical;
    MonomialUnit unit;  // f = unit * canonical
};

// Canonical representative of the associate class of f != 0: the lex-least
// exponent is shifted to zero and the lex-leading coefficient is positive.
AssociateForm normalize_associate(const LaurentPoly& f);

// Exact division in Q[F]; nullopt when no quotient exists. Internal building
// block without the integrality rule of divides().
std::optional<LaurentPoly> try_divide(const LaurentPoly& dividend, const LaurentPoly& divisor);

// Quotient q with f = g*q, if one exists; for integral f and g the quotient
// must be integral too (divisibility in Z[F]).
std::optional<LaurentPoly> divides(const LaurentPoly& g, const LaurentPoly& f);

// Unit a with g = a * involute(g), if g is symmetric.
std::optional<MonomialUnit> is_symmetric(const LaurentPoly& g);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
    std::size_t position;
};

// Text form of polynomials, e.g. "2*s^2*t-3*t^-1+1". The ordered variable
// list fixes the exponent-vector slots.
LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& variables);
std::string to_string(const LaurentPoly& f, const std::vector<std::string>& variables);
std::string to_string(const MonomialUnit& u, const std::vector<std::string>& variables);

}  // namespace concordia
