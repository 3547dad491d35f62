#include <doctest.h>

#include "concordia/satellite.hpp"
#include "oracles.hpp"

using namespace concordia;

namespace {

const std::vector<std::string> U{"u"};
const std::vector<std::string> T{"t"};

LaurentPoly up(const std::string& text) { return parse_poly(text, U); }

LaurentPoly g_p(long long p) {
    return up("-" + std::to_string(2 * p) + "*u^4+" + std::to_string(4 * p - 1) + "*u^2-" +
              std::to_string(2 * p));
}

SatelliteSpec u2_spec() { return SatelliteSpec(MonomialUnit(1, {2})); }

}  // namespace

TEST_CASE("satellite spec validation") {
    CHECK(u2_spec().is_verified_case());
    CHECK_FALSE(SatelliteSpec(MonomialUnit(1, {4})).is_verified_case());
    CHECK_FALSE(SatelliteSpec(MonomialUnit(1, {2, 2})).is_verified_case());
    CHECK_THROWS_AS(SatelliteSpec(MonomialUnit(-1, {2})), std::invalid_argument);
    CHECK_THROWS_AS(SatelliteSpec(MonomialUnit(1, {0})), std::invalid_argument);
}

TEST_CASE("pattern specialization") {
    for (long long p : {3LL, 5LL, 7LL, 97LL})
        CHECK(specialize_pattern(mazur_alexander(p), u2_spec()) == g_p(p));

    // Local patterns specialize to the rational constant delta(-1).
    PatternPolynomial trefoil = local_pattern_alexander(parse_poly("t^2-t+1", T));
    CHECK(specialize_pattern(trefoil, u2_spec()) == LaurentPoly::constant(1, 3));

    PatternPolynomial constant{LaurentPoly::constant(2, 1), 1};
    CHECK(specialize_pattern(constant, u2_spec()) == LaurentPoly::constant(1, 1));

    PatternPolynomial univariate{LaurentPoly::constant(1, 1), 1};
    CHECK_THROWS_AS(specialize_pattern(univariate, u2_spec()), std::invalid_argument);

    // Torres consistency: the trivial character sends everything to 1.
    for (long long n = 1; n <= 50; ++n) {
        LaurentPoly v = specialize(mazur_alexander(n).poly,
                                   {SpecImage::constant(1),
                                    SpecImage::monomial(MonomialUnit(1, {0}))},
                                   1);
        CHECK(v == LaurentPoly::constant(1, 1));
    }
}

TEST_CASE("satellite torsion update") {
    TorsionClass base = TorsionClass::trivial();
    TorsionClass with_g3 = satellite_class(base, g_p(3));
    CHECK(with_g3.factors().size() == 1);
    CHECK(parity_hom(g_p(3), with_g3) == 1);

    TorsionClass g5 = TorsionClass::make({{g_p(5), 1}}, false);
    TorsionClass both = satellite_class(g5, g_p(3));
    CHECK(both.factors().size() == 2);

    // A rational constant (a local pattern's contribution) changes nothing.
    CHECK(satellite_class(g5, LaurentPoly::constant(1, 3)).factors() == g5.factors());

    // Reducible specialized polynomials factor completely.
    TorsionClass split = satellite_class(base, up("u^2-1"));
    CHECK(split.factors().size() == 2);

    CHECK_THROWS_AS(satellite_class(base, LaurentPoly(1)), std::invalid_argument);

    // Degree 8 is out of reach for the bounded search without a hint.
    LaurentPoly big = g_p(3) * g_p(5);
    CHECK_THROWS_AS(satellite_class(base, big), std::domain_error);

    std::vector<std::pair<LaurentPoly, long long>> hint{{g_p(3), 1}, {g_p(5), 1}};
    TorsionClass hinted = satellite_class(base, big, &hint);
    CHECK(hinted.factors().size() == 2);

    std::vector<std::pair<LaurentPoly, long long>> bad_hint{{g_p(3), 1}, {g_p(7), 1}};
    CHECK_THROWS_AS(satellite_class(base, big, &bad_hint), std::domain_error);
}

TEST_CASE("local knotting acts trivially") {
    BaseTorsionSet base = BaseTorsionSet::trivial();
    base.classes["rho1"] = TorsionClass::make({{g_p(7), 1}}, false);

    BaseTorsionSet after = local_knot_action(base, parse_poly("t^2-t+1", T));  // delta(-1) = 3
    CHECK(after.classes.size() == base.classes.size());
    for (const auto& [label, cls] : base.classes)
        CHECK(after.classes.at(label).factors() == cls.factors());

    CHECK(local_knot_action(base, parse_poly("1", T)).classes.size() == 2);

    CHECK_THROWS_AS(local_knot_action(base, parse_poly("t-1", T)), std::domain_error);
    CHECK_THROWS_AS(local_knot_action(base, parse_poly("t+1", T)), std::domain_error);
    CHECK_THROWS_AS(local_knot_action(base, LaurentPoly(1)), std::invalid_argument);
}

TEST_CASE("admissible primes") {
    LaurentPoly one = LaurentPoly::constant(1, 1);
    CHECK(admissible_primes(one, 20) ==
          std::vector<long long>{3, 5, 7, 11, 13, 17, 19});

    CHECK(admissible_primes(g_p(3), 10) == std::vector<long long>{5, 7});
    CHECK(admissible_primes(g_p(3) * g_p(7), 10) == std::vector<long long>{5});

    CHECK_THROWS_AS(admissible_primes(LaurentPoly(1), 10), std::invalid_argument);
}

TEST_CASE("distinguishing satellite families") {
    BaseTorsionSet trivial = BaseTorsionSet::trivial();

    DistinguishCertificate cert = distinguish_family(trivial, 3, 5, u2_spec());
    CHECK(cert.distinguished);
    CHECK(cert.separating_poly == class_key(g_p(5)));
    REQUIRE(cert.parity_table.count("rho0") == 1);
    CHECK(cert.parity_table.at("rho0").on_family_n == 0);
    CHECK(cert.parity_table.at("rho0").on_family_m == 1);
    CHECK(cert.warnings.empty());

    CHECK_FALSE(distinguish_family(trivial, 3, 3, u2_spec()).distinguished);

    BaseTorsionSet with_g7;
    with_g7.classes["rho1"] = TorsionClass::make({{g_p(7), 1}}, false);
    DistinguishCertificate cert7 = distinguish_family(with_g7, 3, 5, u2_spec());
    CHECK(cert7.distinguished);
    CHECK(cert7.parity_table.at("rho1").on_family_n == 0);
    CHECK(cert7.parity_table.at("rho1").on_family_m == 1);

    // g_3 in the base makes p = 3 inadmissible.
    BaseTorsionSet with_g3;
    with_g3.classes["rho0"] = TorsionClass::make({{g_p(3), 1}}, false);
    CHECK_THROWS_AS(distinguish_family(with_g3, 3, 5, u2_spec()), std::domain_error);

    CHECK_THROWS_AS(distinguish_family(trivial, 4, 5, u2_spec()), std::invalid_argument);
    CHECK_THROWS_AS(distinguish_family(trivial, 2, 5, u2_spec()), std::invalid_argument);
}

TEST_CASE("verdicts survive the local action") {
    oracles::Rng rng(2025);
    BaseTorsionSet base = BaseTorsionSet::trivial();
    base.classes["rho1"] = TorsionClass::make({{g_p(11), 1}}, false);

    for (int i = 0; i < 15; ++i) {
        LaurentPoly knot = rng.knot_poly(rng.uniform(-6, 6));
        if (rng.uniform(0, 1)) knot = knot * rng.knot_poly(rng.uniform(-4, 4));

        long long n = 3, m = 5;
        DistinguishCertificate before = distinguish_family(base, n, m, u2_spec());
        BaseTorsionSet acted = local_knot_action(base, knot);
        DistinguishCertificate after = distinguish_family(acted, n, m, u2_spec());
        CHECK(before.distinguished == after.distinguished);
        for (const auto& [label, row] : before.parity_table) {
            CHECK(after.parity_table.at(label).on_family_n == row.on_family_n);
            CHECK(after.parity_table.at(label).on_family_m == row.on_family_m);
        }
    }
}

TEST_CASE("unverified longitude images carry a warning") {
    SatelliteSpec u4(MonomialUnit(1, {4}));
    std::vector<std::string> warnings;
    SpecializedPattern g = specialized_mazur(3, u4, &warnings);
    CHECK_FALSE(g.irreducibility_verified);
    CHECK(warnings.size() == 1);

    DistinguishCertificate cert = distinguish_family(BaseTorsionSet::trivial(), 3, 5, u4);
    CHECK(cert.warnings.size() == 1);
    CHECK(cert.distinguished);  // the parity argument still runs on trusted factors
}
