#include "concordia/ratfun.hpp"

namespace concordia {

RationalFunction::RationalFunction(int rank)
    : num_(rank), den_(LaurentPoly::constant(rank, 1)) {}

RationalFunction::RationalFunction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.rank(), 1)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.rank() != den_.rank()) throw std::invalid_argument("ring rank mismatch");
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    normalize();
}

RationalFunction RationalFunction::constant(int rank, const Rational& c) {
    return RationalFunction(LaurentPoly::constant(rank, c));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.rank(), 1);
        return;
    }
    Exponents shift = exponents_neg(den_.lex_min_exponent());
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
    Rational c = den_.content();
    if (den_.leading_coeff() < 0) c = -c;
    Rational inv = make_rational(denominator(c), numerator(c));
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RationalFunction RationalFunction::operator+(const RationalFunction& g) const {
    if (den_ == g.den_) return RationalFunction(num_ + g.num_, den_);
    return RationalFunction(num_ * g.den_ + g.num_ * den_, den_ * g.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::operator-(const RationalFunction& g) const {
    return *this + (-g);
}

RationalFunction RationalFunction::operator*(const RationalFunction& g) const {
    return RationalFunction(num_ * g.num_, den_ * g.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inversion of zero in Q(F)");
    return RationalFunction(den_, num_);
}

bool RationalFunction::operator==(const RationalFunction& g) const {
    return num_ * g.den_ == g.num_ * den_;
}

bool RationalFunction::is_rational_times_monomial() const {
    if (num_.is_zero()) return false;
    auto q = try_divide(num_, den_);
    return q && q->is_monomial();
}

std::string to_string(const RationalFunction& r, const std::vector<std::string>& variables) {
    auto d = r.den().as_constant();
    if (d && *d == 1) return to_string(r.num(), variables);
    return "(" + to_string(r.num(), variables) + ")/(" + to_string(r.den(), variables) + ")";
}

RationalFunction parse_ratfun(const std::string& text, const std::vector<std::string>& variables) {
    try {
        return RationalFunction(parse_poly(text, variables));
    } catch (const ParseError&) {
    }
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) {
            try {
                LaurentPoly num = parse_poly(text.substr(0, i), variables);
                LaurentPoly den = parse_poly(text.substr(i + 1), variables);
                if (den.is_zero()) throw ParseError("zero denominator", i);
                return RationalFunction(std::move(num), std::move(den));
            } catch (const ParseError&) {
            }
        }
    }
    // Re-raise the original diagnostic.
    parse_poly(text, variables);
    throw ParseError("unreadable rational function", 0);
}

}  // namespace concordia
