#include "concordia/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace concordia {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

Exponents exponents_add(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent rank mismatch");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exponents_sub(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent rank mismatch");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exponents_neg(const Exponents& a) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

MonomialUnit::MonomialUnit(int s, Exponents e) : sign(s), exponent(std::move(e)) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("unit sign must be +1 or -1");
}

bool MonomialUnit::is_one() const {
    return sign == 1 && std::all_of(exponent.begin(), exponent.end(), [](int e) { return e == 0; });
}

MonomialUnit MonomialUnit::inverse() const { return MonomialUnit(sign, exponents_neg(exponent)); }

MonomialUnit MonomialUnit::operator*(const MonomialUnit& other) const {
    return MonomialUnit(sign * other.sign, exponents_add(exponent, other.exponent));
}

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("ring rank must be >= 1");
}

LaurentPoly LaurentPoly::constant(int rank, const Rational& c) {
    LaurentPoly f(rank);
    f.insert_term(Exponents(rank, 0), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(int rank, const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != rank) throw std::invalid_argument("exponent rank mismatch");
    LaurentPoly f(rank);
    f.insert_term(e, c);
    return f;
}

LaurentPoly LaurentPoly::variable(int rank, int index, int power) {
    if (index < 0 || index >= rank) throw std::invalid_argument("variable index out of range");
    Exponents e(rank, 0);
    e[index] = power;
    return monomial(rank, e, 1);
}

LaurentPoly LaurentPoly::from_unit(const MonomialUnit& u) {
    return monomial(u.rank(), u.exponent, Rational(u.sign));
}

void LaurentPoly::insert_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same_ring(const LaurentPoly& g) const {
    if (rank_ != g.rank_) throw std::invalid_argument("ring rank mismatch");
}

bool LaurentPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second); });
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> LaurentPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

std::optional<MonomialUnit> LaurentPoly::as_unit() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (c == 1) return MonomialUnit(1, e);
    if (c == -1) return MonomialUnit(-1, e);
    return std::nullopt;
}

Exponents LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no support");
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

const Exponents& LaurentPoly::lex_min_exponent() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no support");
    return terms_.begin()->first;
}

const Exponents& LaurentPoly::lex_max_exponent() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no support");
    return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

Rational LaurentPoly::content() const {
    if (terms_.empty()) return 0;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    return Rational(num_gcd, den_lcm);
}

LaurentPoly LaurentPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    return *this * make_rational(denominator(c), numerator(c));
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(exponents_add(e, delta), c);
    return r;
}

LaurentPoly LaurentPoly::involute() const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(exponents_neg(e), c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
    check_same_ring(g);
    LaurentPoly r = *this;
    for (const auto& [e, c] : g.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const { return *this + (-g); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
    check_same_ring(g);
    LaurentPoly r(rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : g.terms_) r.insert_term(exponents_add(e1, e2), c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(rank_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& g) const {
    return rank_ == g.rank_ && terms_ == g.terms_;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

SpecImage SpecImage::constant(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("constant image must be +1 or -1");
    SpecImage im;
    im.is_constant = true;
    im.constant_sign = sign;
    return im;
}

SpecImage SpecImage::monomial(MonomialUnit u) {
    SpecImage im;
    im.is_constant = false;
    im.mono = std::move(u);
    return im;
}

LaurentPoly specialize(const LaurentPoly& f, const std::vector<SpecImage>& images, int target_rank) {
    if (static_cast<int>(images.size()) != f.rank())
        throw std::invalid_argument("missing variable image: need one image per source variable");
    for (const auto& im : images)
        if (!im.is_constant && im.mono.rank() != target_rank)
            throw std::invalid_argument("monomial image rank does not match target ring");

    LaurentPoly result(target_rank);
    for (const auto& [e, c] : f.terms()) {
        int sign = 1;
        Exponents exp(target_rank, 0);
        for (std::size_t j = 0; j < images.size(); ++j) {
            const SpecImage& im = images[j];
            int power = e[j];
            int base_sign = im.is_constant ? im.constant_sign : im.mono.sign;
            if (base_sign == -1 && (power % 2 != 0)) sign = -sign;
            if (!im.is_constant)
                for (int i = 0; i < target_rank; ++i) exp[i] += im.mono.exponent[i] * power;
        }
        result = result + LaurentPoly::monomial(target_rank, exp, c * sign);
    }
    return result;
}

AssociateForm normalize_associate(const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    Exponents shift = f.lex_min_exponent();
    LaurentPoly c = f.shifted(exponents_neg(shift));
    int sign = 1;
    if (c.leading_coeff() < 0) {
        c = -c;
        sign = -1;
    }
    return AssociateForm{std::move(c), MonomialUnit(sign, shift)};
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& dividend, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (dividend.rank() != divisor.rank()) throw std::invalid_argument("ring rank mismatch");
    const int rank = dividend.rank();
    if (dividend.is_zero()) return LaurentPoly(rank);

    // Shift both to ordinary polynomials; the monomial correction is a unit.
    Exponents mf = dividend.min_exponents();
    Exponents mg = divisor.min_exponents();
    LaurentPoly rem = dividend.shifted(exponents_neg(mf));
    LaurentPoly g = divisor.shifted(exponents_neg(mg));

    const Exponents& lead_g = g.lex_max_exponent();
    const Rational& lead_c = g.leading_coeff();
    LaurentPoly q(rank);
    while (!rem.is_zero()) {
        Exponents e = exponents_sub(rem.lex_max_exponent(), lead_g);
        if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(rank, e, rem.leading_coeff() / lead_c);
        q = q + t;
        rem = rem - t * g;
    }
    return q.shifted(exponents_sub(mf, mg));
}

std::optional<LaurentPoly> divides(const LaurentPoly& g, const LaurentPoly& f) {
    auto q = try_divide(f, g);
    if (!q) return std::nullopt;
    if (f.is_integral() && g.is_integral() && !q->is_integral()) return std::nullopt;
    return q;
}

std::optional<MonomialUnit> is_symmetric(const LaurentPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial");
    AssociateForm a = normalize_associate(g);
    AssociateForm b = normalize_associate(g.involute());
    if (!(a.canonical == b.canonical)) return std::nullopt;
    return a.unit * b.unit.inverse();
}

}  // namespace concordia
