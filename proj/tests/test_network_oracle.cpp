#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dpcstar/oracle.hpp"
#include "helpers.hpp"

using namespace dpcstar;
using namespace testing_support;

namespace {

Assignment bind_all(const Network& n, const std::vector<int>& values) {
    Assignment a(n.variable_count());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] >= 0) a.bind(int(i), values[i]);
    return a;
}

// Solutions as label tuples keyed by variable name, for order-independent comparison.
std::set<std::vector<std::pair<std::string, std::string>>> named_solutions(const Network& n) {
    std::set<std::vector<std::pair<std::string, std::string>>> out;
    for (const Assignment& a : enumerate_solutions(n, -1)) {
        std::vector<std::pair<std::string, std::string>> sol;
        for (int v = 0; v < n.variable_count(); ++v)
            sol.emplace_back(n.variable_name(v), n.domain(v).values[a.value(v)]);
        std::sort(sol.begin(), sol.end());
        out.insert(std::move(sol));
    }
    return out;
}

}  // namespace

TEST_CASE("the all-a tuple solves the diamond") {
    Network n = diamond_network();
    CHECK(is_solution(n, bind_all(n, {0, 0, 0, 0})));
    CHECK_FALSE(is_solution(n, bind_all(n, {2, 2, 2, 2})));
}

TEST_CASE("the empty assignment is vacuously a partial solution") {
    Network n = diamond_network();
    CHECK(is_solution(n, Assignment(n.variable_count())));
}

TEST_CASE("a partial solution of the blocked star does not extend") {
    Network n = blocked_star_network();
    Assignment partial = bind_all(n, {0, 2, 1, -1});  // x=a, y=c, z=b
    CHECK(is_solution(n, partial));
    CHECK_FALSE(extends_to_solution(n, partial));
}

TEST_CASE("reading a constraint in either orientation stays inverse-consistent") {
    Network n = diamond_network();
    for (auto [i, j] : n.constraint_scopes())
        CHECK(n.constraint(j, i) == n.constraint(i, j).inverse());
    // also after a mutation through the non-canonical orientation
    n.set_constraint(3, 2, rel_from_rows({"100", "010", "001"}));
    CHECK(n.constraint(2, 3) == n.constraint(3, 2).inverse());
}

TEST_CASE("restriction to all variables is the identity") {
    Network n = diamond_network();
    std::vector<int> all{0, 1, 2, 3};
    CHECK(n.restricted(all) == n);
}

TEST_CASE("restricting the star to its leaves drops every constraint") {
    Network n = blocked_star_network();
    Network leaves = n.restricted({0, 1, 2});
    CHECK(leaves.constraint_scopes().empty());
    CHECK(leaves.variable_count() == 3);
}

TEST_CASE("restriction never gains solutions") {
    std::mt19937_64 rng(91);
    for (int round = 0; round < 30; ++round) {
        Network n;
        int nv = 3 + int(rng() % 3);
        for (int v = 0; v < nv; ++v) {
            std::string name = "v" + std::to_string(v);
            n.add_variable(name, Domain{name, {"0", "1", "2"}});
        }
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                if (rng() % 2) n.set_constraint(i, j, random_relation(rng, 3, 3, 0.6));
        std::vector<int> keep;
        for (int v = 0; v < nv; ++v)
            if (rng() % 2) keep.push_back(v);
        if (keep.empty()) keep.push_back(0);
        Network sub = n.restricted(keep);
        for (const Assignment& a : enumerate_solutions(n, -1)) {
            Assignment projected(sub.variable_count());
            for (std::size_t i = 0; i < keep.size(); ++i) projected.bind(int(i), a.value(keep[i]));
            CHECK(is_solution(sub, projected));
        }
    }
}

TEST_CASE("oracle finds the diamond solution and rejects the blocked star") {
    auto diamond = enumerate_solutions(diamond_network(), -1);
    bool has_all_a = false;
    for (const auto& a : diamond)
        if (a.value(0) == 0 && a.value(1) == 0 && a.value(2) == 0 && a.value(3) == 0)
            has_all_a = true;
    CHECK(has_all_a);
    CHECK(enumerate_solutions(blocked_star_network(), -1).empty());
}

TEST_CASE("single-variable single-value network has exactly one solution") {
    Network n;
    n.add_variable("x", Domain{"x", {"a"}});
    CHECK(enumerate_solutions(n, -1).size() == 1);
}

TEST_CASE("oracle solution sets are declaration-order independent") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 20; ++round) {
        Network n;
        for (int v = 0; v < 4; ++v) {
            std::string name = "v" + std::to_string(v);
            n.add_variable(name, Domain{name, {"0", "1", "2"}});
        }
        std::vector<std::pair<int, int>> scopes;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (rng() % 2) scopes.emplace_back(i, j);
        for (auto [i, j] : scopes) n.set_constraint(i, j, random_relation(rng, 3, 3, 0.55));

        std::vector<int> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        Network shuffled = n.restricted(perm);
        CHECK(named_solutions(n) == named_solutions(shuffled));
    }
}

TEST_CASE("global consistency fails when a satisfiable pair cannot extend") {
    Network n = blocked_star_network();
    // x=a, y=c satisfies the (vacuous) constraints among the leaves but the
    // network has no solution at all.
    CHECK_FALSE(check_global_consistency(n, 2));
}

TEST_CASE("a complete single-solution network is globally consistent") {
    Network n;
    for (const char* name : {"p", "q"}) n.add_variable(name, Domain{name, {"0", "1"}});
    n.set_constraint(0, 1, rel_from_rows({"01", "00"}));  // p=0 -> q=1
    n.restrict_active(0, set_of(2, {0}));
    n.restrict_active(1, set_of(2, {1}));
    CHECK(check_global_consistency(n, 2));
}

TEST_CASE("the oracle refuses oversized search spaces") {
    Network n;
    for (int v = 0; v < 8; ++v) {
        std::string name = "v" + std::to_string(v);
        Domain d{name, {}};
        for (int x = 0; x < 50; ++x) d.values.push_back(std::to_string(x));
        n.add_variable(name, d);
    }
    CHECK_THROWS_AS(enumerate_solutions(n, -1, 1000), OracleBoundExceeded);
}
