#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpcstar/graph.hpp"
#include "helpers.hpp"

using namespace dpcstar;
using namespace testing_support;

namespace {

ConstraintGraph diamond_graph() {
    ConstraintGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

ConstraintGraph random_chordal(std::mt19937_64& rng, int n, double extra) {
    // Build by simulated elimination fill of a random graph: the filled graph
    // is chordal by construction.
    ConstraintGraph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < extra) g.add_edge(i, j);
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    std::shuffle(seq.begin(), seq.end(), rng);
    return fill_along(g, Ordering(seq));
}

}  // namespace

TEST_CASE("the natural order of the diamond is a PEO, the swapped one is not") {
    ConstraintGraph g = diamond_graph();
    CHECK(is_peo(g, Ordering({0, 1, 2, 3})));
    CHECK_FALSE(is_peo(g, Ordering({1, 0, 2, 3})));
}

TEST_CASE("every ordering of a complete graph is a PEO") {
    ConstraintGraph g(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    std::vector<int> seq{0, 1, 2, 3};
    do {
        CHECK(is_peo(g, Ordering(seq)));
    } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST_CASE("find_peo accepts the diamond and rejects the chordless 4-cycle") {
    auto peo = find_peo(diamond_graph());
    REQUIRE(peo.has_value());
    CHECK(is_peo(diamond_graph(), *peo));

    ConstraintGraph cycle(4);
    cycle.add_edge(0, 1);
    cycle.add_edge(1, 2);
    cycle.add_edge(2, 3);
    cycle.add_edge(3, 0);
    CHECK_FALSE(find_peo(cycle).has_value());
    CHECK_FALSE(is_triangulated(cycle));
}

TEST_CASE("find_peo succeeds on randomly constructed chordal graphs") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
        ConstraintGraph g = random_chordal(rng, 4 + int(rng() % 6), 0.35);
        auto peo = find_peo(g);
        REQUIRE(peo.has_value());
        CHECK(is_peo(g, *peo));
    }
}

TEST_CASE("induced width of a chain is 1") {
    ConstraintGraph g(5);
    for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
    CHECK(induced_width(g, Ordering::identity(5)) == 1);
}

TEST_CASE("induced width of a complete graph is n-1") {
    ConstraintGraph g(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) g.add_edge(i, j);
    CHECK(induced_width(g, Ordering::identity(5)) == 4);
}

TEST_CASE("induced width of the diamond along its natural order is 2") {
    // Eliminating v4 first sees {v2, v3}; v3 then sees {v2}; v2 sees {v1}.
    CHECK(induced_width(diamond_graph(), Ordering({0, 1, 2, 3})) == 2);
}

TEST_CASE("fill along any ordering makes the reverse ordering a PEO") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int round = 0; round < 50; ++round) {
        int n = 3 + int(rng() % 6);
        ConstraintGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < 0.4) g.add_edge(i, j);
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        std::shuffle(seq.begin(), seq.end(), rng);
        Ordering ord(seq);
        ConstraintGraph filled = fill_along(g, ord);
        CHECK(is_peo(filled, ord.reversed()));
    }
}

TEST_CASE("orderings must be permutations covering the vertex set") {
    CHECK_THROWS_AS(Ordering({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_peo(diamond_graph(), Ordering({0, 1, 2})), std::invalid_argument);
}
