#include "concordia/factor.hpp"

#include <algorithm>

namespace concordia {

namespace {

using Coeffs = std::vector<Integer>;  // dense, index = degree, no trailing zeros

int degree(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Exact division over Z; nullopt unless divisor divides dividend with an
// integer quotient.
std::optional<Coeffs> divide_integer_poly(const Coeffs& dividend, const Coeffs& divisor) {
    if (degree(dividend) < degree(divisor)) return std::nullopt;
    Coeffs rem = dividend;
    Coeffs quot(degree(dividend) - degree(divisor) + 1, Integer(0));
    const Integer& lead = divisor.back();
    for (int i = degree(dividend) - degree(divisor); i >= 0; --i) {
        Integer top = rem[i + degree(divisor)];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Integer q = top / lead;
        quot[i] = q;
        for (int j = 0; j <= degree(divisor); ++j) rem[i + j] -= q * divisor[j];
    }
    for (const Integer& r : rem)
        if (r != 0) return std::nullopt;
    return quot;
}

std::vector<Integer> positive_divisors(Integer n) {
    n = boost::multiprecision::abs(n);
    std::vector<Integer> divs;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Integer> prime_factors(Integer n) {
    std::vector<Integer> out;
    n = boost::multiprecision::abs(n);
    for (Integer p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Integer content_of(const Coeffs& c) {
    Integer g = 0;
    for (const Integer& x : c) g = boost::multiprecision::gcd(g, x);
    return g;
}

// Cauchy bound: every complex root z of f satisfies |z| <= 1 + max |f_i/f_d|.
Integer root_bound_ceil(const Coeffs& f) {
    Integer lead = boost::multiprecision::abs(f.back());
    Integer top = 0;
    for (int i = 0; i < degree(f); ++i) top = std::max(top, Integer(boost::multiprecision::abs(f[i])));
    return 1 + (top + lead - 1) / lead;
}

struct Search {
    unsigned long long candidates = 0;

    std::optional<Coeffs> find_linear_factor(const Coeffs& f) {
        for (const Integer& a : positive_divisors(f.back())) {
            for (const Integer& b_abs : positive_divisors(f.front())) {
                for (int sign : {1, -1}) {
                    Integer b = sign * b_abs;
                    if (boost::multiprecision::gcd(a, boost::multiprecision::abs(b)) != 1) continue;
                    ++candidates;
                    Coeffs cand{b, a};
                    if (divide_integer_poly(f, cand)) return cand;
                }
            }
        }
        return std::nullopt;
    }

    std::optional<Coeffs> find_quadratic_factor(const Coeffs& f) {
        Integer r = root_bound_ceil(f);
        for (const Integer& a : positive_divisors(f.back())) {
            // b/a = -(sum of two roots of the candidate), so |b| <= 2*a*R.
            Integer b_max = 2 * a * r;
            for (const Integer& c_abs : positive_divisors(f.front())) {
                for (int sign : {1, -1}) {
                    Integer c = sign * c_abs;
                    for (Integer b = -b_max; b <= b_max; ++b) {
                        Integer g = boost::multiprecision::gcd(
                            a, boost::multiprecision::gcd(boost::multiprecision::abs(b),
                                                          boost::multiprecision::abs(c)));
                        if (g != 1) continue;
                        ++candidates;
                        Coeffs cand{c, b, a};
                        if (divide_integer_poly(f, cand)) return cand;
                    }
                }
            }
        }
        return std::nullopt;
    }

    // f primitive with positive leading coefficient and nonzero constant term.
    std::vector<Coeffs> factor_primitive(Coeffs f) {
        std::vector<Coeffs> out;
        while (degree(f) >= 1) {
            if (auto lin = find_linear_factor(f)) {
                out.push_back(*lin);
                f = *divide_integer_poly(f, *lin);
                continue;
            }
            if (degree(f) <= 3) {
                // Degree 2 or 3 with no linear factor over Z is irreducible.
                out.push_back(f);
                break;
            }
            if (auto quad = find_quadratic_factor(f)) {
                out.push_back(*quad);
                f = *divide_integer_poly(f, *quad);
                continue;
            }
            // A quartic with no linear and no quadratic factor is irreducible.
            out.push_back(f);
            break;
        }
        return out;
    }
};

}  // namespace

BoundedFactorization factor_bounded_univariate(const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (!f.is_integral())
        throw std::invalid_argument("bounded factorization requires integer coefficients");

    const int rank = f.rank();
    int var = -1;
    {
        Exponents lo = f.min_exponents();
        Exponents hi = lo;
        for (const auto& [e, c] : f.terms())
            for (int j = 0; j < rank; ++j) hi[j] = std::max(hi[j], e[j]);
        for (int j = 0; j < rank; ++j) {
            if (hi[j] == lo[j]) continue;
            if (var != -1)
                throw std::invalid_argument("input is multivariate; expected one effective variable");
            var = j;
        }
    }

    BoundedFactorization result;
    Exponents shift = f.min_exponents();
    LaurentPoly f0 = f.shifted(exponents_neg(shift));
    int sign = 1;

    if (var == -1) {  // monomial: everything is unit times a constant
        Integer c = numerator(*f0.as_constant());
        if (c < 0) {
            sign = -1;
            c = -c;
        }
        for (const Integer& p : prime_factors(c))
            result.factors.emplace_back(LaurentPoly::constant(rank, Rational(p)), 1);
    } else {
        int deg = 0;
        for (const auto& [e, c] : f0.terms()) deg = std::max(deg, e[var]);
        if (deg > 4) throw std::invalid_argument("degree exceeds the factorization bound of 4");

        Coeffs coeffs(deg + 1, Integer(0));
        for (const auto& [e, c] : f0.terms()) coeffs[e[var]] = numerator(c);
        trim(coeffs);
        if (coeffs.back() < 0) {
            sign = -1;
            for (Integer& x : coeffs) x = -x;
        }

        Integer cont = content_of(coeffs);
        if (cont > 1)
            for (Integer& x : coeffs) x /= cont;
        for (const Integer& p : prime_factors(cont))
            result.factors.emplace_back(LaurentPoly::constant(rank, Rational(p)), 1);

        Search search;
        for (const Coeffs& fac : search.factor_primitive(coeffs)) {
            LaurentPoly poly(rank);
            for (int i = 0; i <= degree(fac); ++i) {
                if (fac[i] == 0) continue;
                Exponents e(rank, 0);
                e[var] = i;
                poly = poly + LaurentPoly::monomial(rank, e, Rational(fac[i]));
            }
            result.factors.emplace_back(std::move(poly), 1);
        }
        result.candidates_tested = search.candidates;
    }

    result.unit = MonomialUnit(sign, shift);

    // Merge repeated factors into multiplicities.
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<LaurentPoly, int>> merged;
    for (auto& [poly, mult] : result.factors) {
        if (!merged.empty() && merged.back().first == poly)
            merged.back().second += mult;
        else
            merged.emplace_back(std::move(poly), mult);
    }
    result.factors = std::move(merged);
    return result;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> odd_primes_up_to(long long bound) {
    std::vector<long long> out;
    for (long long p = 3; p <= bound; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace concordia
