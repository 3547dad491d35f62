#include <cctype>
#include <sstream>

#include "concordia/laurent.hpp"

// Grammar:
//   poly   := ("+"|"-")? term (("+"|"-") term)* ;
//   term   := coeff ("*" factor)* | factor ("*" factor)* ;
//   factor := name ("^" int)? | "(" poly ")" ;
//   coeff  := int | int "/" int ;
//   int    := "-"? digit+ ;
// Whitespace is insignificant. Variable slots come from the ordered name list.

namespace concordia {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : text_(text), vars_(variables), rank_(static_cast<int>(variables.size())) {
        if (rank_ < 1) throw std::invalid_argument("need at least one variable name");
    }

    LaurentPoly parse() {
        LaurentPoly p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& vars_;
    int rank_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = consume('-');
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits.push_back(text_[pos_++]);
        if (digits.empty()) {
            pos_ = start;
            fail("expected an integer");
        }
        Integer v(digits);
        return neg ? -v : v;
    }

    std::string parse_name() {
        skip_ws();
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            name.push_back(text_[pos_++]);
        }
        return name;
    }

    LaurentPoly parse_factor() {
        if (consume('(')) {
            LaurentPoly p = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        std::size_t start = pos_;
        std::string name = parse_name();
        if (name.empty()) fail("expected a variable or '('");
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        int index = static_cast<int>(it - vars_.begin());
        int power = 1;
        if (consume('^')) {
            Integer e = parse_int();
            if (e > 1000000 || e < -1000000) fail("exponent out of range");
            power = static_cast<int>(e);
        }
        return LaurentPoly::variable(rank_, index, power);
    }

    LaurentPoly parse_term() {
        LaurentPoly acc(rank_);
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            Integer num = parse_int();
            Rational coeff(num);
            if (consume('/')) {
                Integer den = parse_int();
                if (den == 0) fail("zero denominator in coefficient");
                coeff = make_rational(num, den);
            }
            acc = LaurentPoly::constant(rank_, coeff);
        } else {
            acc = parse_factor();
        }
        while (consume('*')) acc = acc * parse_factor();
        return acc;
    }

    LaurentPoly parse_sum() {
        LaurentPoly acc(rank_);
        int sign = 1;
        if (consume('-'))
            sign = -1;
        else
            consume('+');
        while (true) {
            LaurentPoly t = parse_term();
            acc = sign > 0 ? acc + t : acc - t;
            char c = peek();
            if (c == '+')
                sign = 1;
            else if (c == '-')
                sign = -1;
            else
                break;
            ++pos_;
        }
        return acc;
    }
};

void append_magnitude_term(std::ostream& os, const Rational& mag, const Exponents& e,
                           const std::vector<std::string>& vars) {
    bool printed = false;
    bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || all_zero) {
        os << rational_to_string(mag);
        printed = true;
    }
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (printed) os << '*';
        os << vars[j];
        if (e[j] != 1) os << '^' << e[j];
        printed = true;
    }
}

}  // namespace

LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

std::string to_string(const LaurentPoly& f, const std::vector<std::string>& variables) {
    if (static_cast<int>(variables.size()) != f.rank())
        throw std::invalid_argument("variable list does not match ring rank");
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Lex-descending term order gives a stable, canonical rendering.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        append_magnitude_term(os, boost::multiprecision::abs(c), e, variables);
    }
    return os.str();
}

std::string to_string(const MonomialUnit& u, const std::vector<std::string>& variables) {
    return to_string(LaurentPoly::from_unit(u), variables);
}

}  // namespace concordia
