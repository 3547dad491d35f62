#include <doctest.h>

#include "concordia/factor.hpp"
#include "concordia/laurent.hpp"
#include "oracles.hpp"

using namespace concordia;

namespace {

const std::vector<std::string> ST{"s", "t"};
const std::vector<std::string> U{"u"};

LaurentPoly st(const std::string& text) { return parse_poly(text, ST); }
LaurentPoly up(const std::string& text) { return parse_poly(text, U); }

LaurentPoly g_p(long long p) {
    return up("-" + std::to_string(2 * p) + "*u^4+" + std::to_string(4 * p - 1) + "*u^2-" +
              std::to_string(2 * p));
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK(st("s") + st("-s") == LaurentPoly(2));
    CHECK(st("1-s") * st("1-t") == st("1-s-t+s*t"));

    // Entry-wise product/difference reproducing the 2x2 pairing determinant at n=1.
    LaurentPoly det = st("(1-t)*(1-s)") * st("-(s+t)") - st("-s") * st("-t");
    CHECK(det == st("-(s^2*t+s*t^2-s^2-t^2+s+t)+s*t"));

    CHECK_THROWS_AS(st("s") + up("u"), std::invalid_argument);
    CHECK_THROWS_AS(st("s") * up("u"), std::invalid_argument);
}

TEST_CASE("rational function field operations") {
    auto rf = [](const std::string& text) { return parse_ratfun(text, ST); };

    CHECK(rf("(1-s)/(1-t)") * rf("(1-t)/(1-s)") == rf("1"));
    CHECK(rf("t").inverse() == rf("1/t"));
    CHECK(rf("(s^2-1)/(s-1)") == rf("s+1"));

    CHECK_THROWS_AS(rf("0").inverse(), std::domain_error);
    CHECK_THROWS_AS(RationalFunction(st("1"), LaurentPoly(2)), std::invalid_argument);

    oracles::Rng rng(404);
    for (int i = 0; i < 40; ++i) {
        RationalFunction a = rng.ratfun(2), b = rng.ratfun(2), c = rng.ratfun(2);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction::constant(2, 1));
    }
}

TEST_CASE("ring axioms on random triples") {
    oracles::Rng rng(20240811);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly f = rng.poly(2), g = rng.poly(2), h = rng.poly(2);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("involution") {
    CHECK(st("3*s*t^2").involute() == st("3*s^-1*t^-2"));
    CHECK(st("1-s").involute() == st("1-s^-1"));

    LaurentPoly g3 = g_p(3);
    CHECK(g3.involute() == up("u^-4") * g3);

    oracles::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f = rng.poly(2), g = rng.poly(2);
        CHECK((f * g).involute() == f.involute() * g.involute());
        CHECK((f + g).involute() == f.involute() + g.involute());
        CHECK(f.involute().involute() == f);
    }
}

TEST_CASE("specialization") {
    auto u2 = SpecImage::monomial(MonomialUnit(1, {2}));
    auto minus_one = SpecImage::constant(-1);
    auto one = SpecImage::constant(1);

    // (s,t) -> (-1, u^2) on the n=3 closed form.
    LaurentPoly delta3 = st("3*(s^2*t+s*t^2-s^2-t^2+s+t)-5*s*t");
    CHECK(specialize(delta3, {minus_one, u2}, 1) == g_p(3));

    // Torres: value 1 at (1,1).
    CHECK(specialize(delta3, {one, one}, 1) == LaurentPoly::constant(1, 1));

    // Partial evaluation: t kept as the single target variable.
    auto t_var = SpecImage::monomial(MonomialUnit(1, {1}));
    CHECK(specialize(st("s*t+s^2"), {minus_one, t_var}, 1) == up("1-u"));

    CHECK_THROWS_AS(specialize(st("s"), {one}, 1), std::invalid_argument);

    oracles::Rng rng(99);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly f = rng.poly(2), g = rng.poly(2);
        std::vector<SpecImage> images{SpecImage::monomial(rng.unit(1)), SpecImage::constant(-1)};
        CHECK(specialize(f * g, images, 1) ==
              specialize(f, images, 1) * specialize(g, images, 1));
        CHECK(specialize(f + g, images, 1) ==
              specialize(f, images, 1) + specialize(g, images, 1));
    }
}

TEST_CASE("associate normal form") {
    auto form = normalize_associate(st("-s*t^2"));
    CHECK(form.canonical == st("1"));
    CHECK(form.unit == MonomialUnit(-1, {1, 2}));

    CHECK(normalize_associate(st("-(s^2*t+s*t^2-s^2-t^2+s+t)+s*t")).canonical ==
          normalize_associate(st("(s^2*t+s*t^2-s^2-t^2+s+t)-s*t")).canonical);

    CHECK(normalize_associate(parse_poly("s^-3*(1-s)", {"s"})).canonical ==
          normalize_associate(parse_poly("1-s", {"s"})).canonical);

    CHECK_THROWS_AS(normalize_associate(LaurentPoly(2)), std::invalid_argument);

    oracles::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f = rng.nonzero_poly(2);
        AssociateForm a = normalize_associate(f);
        CHECK(LaurentPoly::from_unit(a.unit) * a.canonical == f);
        CHECK(normalize_associate(a.canonical).canonical == a.canonical);
        LaurentPoly twisted = LaurentPoly::from_unit(rng.unit(2)) * f;
        CHECK(normalize_associate(twisted).canonical == a.canonical);
    }
}

TEST_CASE("exact divisibility") {
    for (long long n : {1, 2, 5}) {
        LaurentPoly product = st(std::to_string(n) + "*(1-t)*(1-s)");
        auto q = divides(st("1-s"), product);
        REQUIRE(q);
        CHECK(*q == st(std::to_string(n) + "*(1-t)"));
    }

    CHECK_FALSE(divides(g_p(3), g_p(5)));
    CHECK_FALSE(divides(g_p(5), g_p(3)));

    auto q = divides(up("u-1"), up("u^2-1"));
    REQUIRE(q);
    CHECK(*q == up("u+1"));

    CHECK_THROWS_AS(divides(LaurentPoly(1), up("u")), std::invalid_argument);

    // Integral inputs demand integral quotients.
    CHECK_FALSE(divides(up("2*u"), up("u^2-1")));
    CHECK(divides(up("2*u"), up("2*u^3")));

    oracles::Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly g = rng.nonzero_poly(2), h = rng.poly(2);
        auto quotient = try_divide(g * h, g);
        REQUIRE(quotient);
        CHECK(*quotient == h);
    }
}

TEST_CASE("symmetry detection") {
    auto a = is_symmetric(parse_poly("1-s", {"s"}));
    REQUIRE(a);
    CHECK(*a == MonomialUnit(-1, {1}));

    auto b = is_symmetric(g_p(3));
    REQUIRE(b);
    CHECK(*b == MonomialUnit(1, {4}));
    CHECK(g_p(3) == LaurentPoly::from_unit(*b) * g_p(3).involute());

    CHECK_FALSE(is_symmetric(parse_poly("s-2", {"s"})));
    CHECK_THROWS_AS(is_symmetric(LaurentPoly(1)), std::invalid_argument);
}

TEST_CASE("bounded factorization") {
    BoundedFactorization g3 = factor_bounded_univariate(g_p(3));
    CHECK(g3.is_irreducible());
    CHECK(g3.candidates_tested > 0);

    BoundedFactorization split = factor_bounded_univariate(up("2*u^4-5*u^2+2"));
    REQUIRE(split.factors.size() == 2);
    CHECK(split.factors[0].first * split.factors[1].first == up("2*u^4-5*u^2+2"));
    CHECK(!split.is_irreducible());

    BoundedFactorization quad = factor_bounded_univariate(up("u^2-1"));
    REQUIRE(quad.factors.size() == 2);
    CHECK(quad.factors[0].first == up("u-1"));
    CHECK(quad.factors[1].first == up("u+1"));

    CHECK_THROWS_AS(factor_bounded_univariate(up("u^5-1")), std::invalid_argument);
    CHECK_THROWS_AS(factor_bounded_univariate(st("s*t-1")), std::invalid_argument);
    CHECK_THROWS_AS(factor_bounded_univariate(up("1/2*u-1")), std::invalid_argument);
    CHECK_THROWS_AS(factor_bounded_univariate(LaurentPoly(1)), std::invalid_argument);

    // Multiplicities, content primes, and monomial units come back exactly.
    BoundedFactorization quartic = factor_bounded_univariate(up("(u-1)*(u-1)*(u-1)*(u-1)"));
    REQUIRE(quartic.factors.size() == 1);
    CHECK(quartic.factors[0] == std::pair<LaurentPoly, int>{up("u-1"), 4});

    BoundedFactorization mixed = factor_bounded_univariate(up("-6*u^-1*(u-1)*(u-1)*(2*u+3)"));
    REQUIRE(mixed.factors.size() == 4);
    std::map<LaurentPoly, int> mixed_map(mixed.factors.begin(), mixed.factors.end());
    CHECK(mixed_map.at(up("2")) == 1);
    CHECK(mixed_map.at(up("3")) == 1);
    CHECK(mixed_map.at(up("u-1")) == 2);
    CHECK(mixed_map.at(up("2*u+3")) == 1);
    CHECK(mixed.unit == MonomialUnit(-1, {-1}));

    BoundedFactorization square = factor_bounded_univariate(up("(2*u^2-1)*(2*u^2-1)"));
    REQUIRE(square.factors.size() == 1);
    CHECK(square.factors[0] == std::pair<LaurentPoly, int>{up("2*u^2-1"), 2});

    // Multiply-back and self-irreducibility of reported factors.
    oracles::Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly f(1);
        int pieces = rng.uniform(1, 2);
        f = LaurentPoly::constant(1, rng.uniform(1, 3));
        for (int k = 0; k < pieces; ++k) {
            LaurentPoly factor(1);
            do {
                factor = LaurentPoly(1);
                int deg = rng.uniform(1, 2);
                for (int d = 0; d <= deg; ++d)
                    factor = factor + LaurentPoly::monomial(1, {d}, rng.uniform(-4, 4));
            } while (factor.is_zero() || factor.is_constant());
            f = f * factor;
        }
        f = f.shifted({rng.uniform(-2, 2)});

        int total_degree = 0;
        {
            Exponents lo = f.min_exponents();
            for (const auto& [e, c] : f.terms()) total_degree = std::max(total_degree, e[0] - lo[0]);
        }
        if (total_degree > 4) continue;

        BoundedFactorization fac = factor_bounded_univariate(f);
        LaurentPoly back = LaurentPoly::from_unit(fac.unit);
        for (const auto& [factor, mult] : fac.factors)
            for (int k = 0; k < mult; ++k) back = back * factor;
        CHECK(back == f);
        for (const auto& [factor, mult] : fac.factors) {
            if (factor.is_constant()) continue;
            CHECK(factor_bounded_univariate(factor).is_irreducible());
        }
    }
}

TEST_CASE("polynomial text round-trips") {
    LaurentPoly f = st("2*s^2*t - 3*t^-1 + 1");
    CHECK(f.term_count() == 3);
    CHECK(f.coeff({2, 1}) == 2);
    CHECK(f.coeff({0, -1}) == -3);
    CHECK(f.coeff({0, 0}) == 1);

    CHECK(st("-(s+t)") == st("-s-t"));

    CHECK(st("3/-2*s") == st("-3/2*s"));
    CHECK_THROWS_AS(st("n"), ParseError);
    try {
        st("1+n*t");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
    CHECK_THROWS_AS(st("1/0"), ParseError);
    CHECK_THROWS_AS(st("s+"), ParseError);

    CHECK(to_string(LaurentPoly(2), ST) == "0");

    oracles::Rng rng(2024);
    for (int i = 0; i < 80; ++i) {
        LaurentPoly f = rng.poly(2, 5, 3);
        CHECK(parse_poly(to_string(f, ST), ST) == f);
    }
}
