#include <doctest.h>

#include "concordia/covering.hpp"
#include "oracles.hpp"

using namespace concordia;

namespace {

LinkingMultiset multiset(std::initializer_list<std::pair<long long, std::size_t>> pairs) {
    LinkingMultiset s;
    for (const auto& [value, count] : pairs) s.counts[value] = count;
    return s;
}

// Cyclic group of order n as an explicit table.
std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

}  // namespace

TEST_CASE("group specifications") {
    CHECK_THROWS_AS(FiniteGroupSpec::cyclic(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupSpec::cyclic(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupSpec::cyclic(5, 5), std::invalid_argument);

    FiniteGroupSpec c5 = FiniteGroupSpec::cyclic(5, 2);
    CHECK(c5.element_order(2) == 5);
    CHECK(c5.inverse(2) == 3);

    FiniteGroupSpec c6 = FiniteGroupSpec::from_table(cyclic_table(6), 3);
    CHECK(c6.element_order(3) == 2);
    CHECK(c6.identity() == 0);

    auto bad = cyclic_table(4);
    bad[1][2] = 0;  // breaks associativity/inverses
    CHECK_THROWS_AS(FiniteGroupSpec::from_table(bad, 1), std::invalid_argument);

    auto out_of_range = cyclic_table(3);
    out_of_range[0][0] = 7;
    CHECK_THROWS_AS(FiniteGroupSpec::from_table(out_of_range, 1), std::invalid_argument);

    CHECK_THROWS_AS(FiniteGroupSpec::from_table(cyclic_table(4), 0), std::invalid_argument);
}

TEST_CASE("spherical covering links") {
    LinkingMultiset n3 = spherical_cover_linking(FiniteGroupSpec::cyclic(5, 1), 3);
    CHECK(n3 == multiset({{3, 5}, {0, 5}}));

    LinkingMultiset two_torsion = spherical_cover_linking(FiniteGroupSpec::cyclic(2, 1), 4);
    CHECK(two_torsion == multiset({{8, 1}}));

    LinkingMultiset zero = spherical_cover_linking(FiniteGroupSpec::cyclic(7, 2), 0);
    CHECK(zero == multiset({{0, 21}}));

    CHECK_THROWS_AS(spherical_cover_linking(FiniteGroupSpec::cyclic(5, 1), -1),
                    std::invalid_argument);

    // Klein four-group: every translate is by an order-two element, so only
    // the distinguished one contributes, twice over the four components.
    std::vector<std::vector<int>> klein{
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    LinkingMultiset k = spherical_cover_linking(FiniteGroupSpec::from_table(klein, 1), 3);
    CHECK(k == multiset({{6, 2}, {0, 4}}));
}

TEST_CASE("spherical multisets agree with the brute-force oracle") {
    oracles::Rng rng(88);
    for (int i = 0; i < 60; ++i) {
        int order = rng.uniform(2, 8);
        int g = rng.uniform(1, order - 1);
        long long n = rng.uniform(0, 12);
        LinkingMultiset fast = spherical_cover_linking(FiniteGroupSpec::cyclic(order, g), n);
        LinkingMultiset brute = oracles::brute_force_cyclic_cover(order, g, n);
        CHECK(fast == brute);
        CHECK(fast.total_pairs() == static_cast<std::size_t>(order) * (order - 1) / 2);

        // The explicit-table route must agree with the cyclic shortcut.
        LinkingMultiset table_route =
            spherical_cover_linking(FiniteGroupSpec::from_table(cyclic_table(order), g), n);
        CHECK(table_route == fast);
    }
}

TEST_CASE("handlebody covering links") {
    CHECK(handlebody_cover_linking(3, 2) == multiset({{2, 3}}));
    CHECK(handlebody_cover_linking(4, 2) == multiset({{2, 4}, {0, 2}}));
    CHECK(handlebody_cover_linking(2, 5, /*two_torsion=*/true) == multiset({{10, 1}}));
    CHECK(handlebody_cover_linking(2, 5) == multiset({{5, 1}}));
    CHECK(handlebody_cover_linking(4, 2, false, 1) == multiset({{3, 4}, {0, 2}}));
    CHECK_THROWS_AS(handlebody_cover_linking(1, 2), std::invalid_argument);

    // Maximum grows strictly with the twist parameter.
    for (int k : {2, 3, 5})
        for (long long dist : {0LL, 2LL}) {
            long long prev = -1;
            for (long long n = 0; n <= 25; ++n) {
                long long max = handlebody_cover_linking(k, n, false, dist).max_value();
                CHECK(max > prev);
                prev = max;
            }
        }
}

TEST_CASE("linking obstruction separates different twists") {
    LinkingMultiset a = spherical_cover_linking(FiniteGroupSpec::cyclic(5, 1), 3);
    LinkingMultiset b = spherical_cover_linking(FiniteGroupSpec::cyclic(5, 1), 4);
    CHECK(linking_obstruction(a, b));
    CHECK_FALSE(linking_obstruction(a, a));

    CHECK(linking_obstruction(handlebody_cover_linking(3, 2), handlebody_cover_linking(3, 7)));

    FiniteGroupSpec c4 = FiniteGroupSpec::cyclic(4, 1);
    std::vector<LinkingMultiset> sph, hb;
    for (long long n = 2; n <= 100; ++n) {
        sph.push_back(spherical_cover_linking(c4, n));
        hb.push_back(handlebody_cover_linking(5, n));
    }
    for (std::size_t i = 0; i < sph.size(); ++i)
        for (std::size_t j = i + 1; j < sph.size(); ++j) {
            CHECK(linking_obstruction(sph[i], sph[j]));
            CHECK(linking_obstruction(hb[i], hb[j]));
        }
}
