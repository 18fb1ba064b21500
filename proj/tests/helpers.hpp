#pragma once

// Shared fixtures: the worked example networks used across the test suites,
// plus tuple-level reference implementations of the relation algebra that the
// bit-matrix code is checked against.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "dpcstar/majority.hpp"
#include "dpcstar/network.hpp"

namespace testing_support {

using namespace dpcstar;

// Rows like {"111", "110", "100"}: row index = source value, '1' = tuple.
inline Relation rel_from_rows(const std::vector<std::string>& rows) {
    Relation r(int(rows.size()), int(rows[0].size()));
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows[a].size(); ++b)
            if (rows[a][b] == '1') r.insert(int(a), int(b));
    return r;
}

inline Domain abc_domain(const std::string& name) {
    return Domain{name, {"a", "b", "c"}};
}

// Four variables over {a,b,c} in a diamond: edges (1,2), (2,3), (2,4), (3,4).
// <a,a,a,a> solves it; the path (v3, v2, v4) is not path-consistent.
inline Network diamond_network() {
    Network n;
    for (const char* name : {"v1", "v2", "v3", "v4"}) n.add_variable(name, abc_domain(name));
    n.set_constraint(0, 1, rel_from_rows({"111", "110", "100"}));  // v1 -> v2
    n.set_constraint(2, 1, rel_from_rows({"111", "011", "001"}));  // v3 -> v2
    n.set_constraint(1, 3, rel_from_rows({"111", "011", "001"}));  // v2 -> v4
    n.set_constraint(2, 3, rel_from_rows({"111", "100", "100"}));  // v3 -> v4
    return n;
}

// Chain v3 - v2 - v1 over {0,1} with both relations {<1,0>}: a unique solution
// exists for the restriction to {v1, v2} that does not extend back.
inline Network two_link_chain_network() {
    Network n;
    for (const char* name : {"v1", "v2", "v3"})
        n.add_variable(name, Domain{name, {"0", "1"}});
    n.set_constraint(2, 1, rel_from_rows({"00", "10"}));  // v3 -> v2: {<1,0>}
    n.set_constraint(1, 0, rel_from_rows({"00", "10"}));  // v2 -> v1: {<1,0>}
    return n;
}

// Star over {a,b,c}: leaves x, y, z each constrain the center w, and the three
// support sets {a,c}, {c,b}, {b,a} of w have empty intersection, so the
// network has no solution although every pair of leaves is compatible.
inline Relation star_r1() { return rel_from_rows({"101", "000", "000"}); }  // {<a,a>,<a,c>}
inline Relation star_r2() { return rel_from_rows({"000", "000", "011"}); }  // {<c,c>,<c,b>}
inline Relation star_r3() { return rel_from_rows({"000", "110", "000"}); }  // {<b,b>,<b,a>}

inline Network blocked_star_network() {
    Network n;
    for (const char* name : {"x", "y", "z", "w"}) n.add_variable(name, abc_domain(name));
    n.set_constraint(0, 3, star_r1());  // x -> w
    n.set_constraint(1, 3, star_r2());  // y -> w
    n.set_constraint(2, 3, star_r3());  // z -> w
    return n;
}

// The majority operation the star language is closed under: the repeated value
// when one exists, "a" on all-distinct triples.
inline MajorityTable star_majority() {
    const int d = 3;
    std::vector<int> table(d * d * d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                int& out = table[(x * d + y) * d + z];
                if (x == y || x == z) out = x;
                else if (y == z) out = y;
                else out = 0;
            }
    return MajorityTable(d, std::move(table));
}

// Consistent star around w whose center is arc-consistent, yet the least-value
// leaf prefix is only pairwise supported at w. dpc_star processes it and the
// greedy extraction dead-ends: the language is not majority-closed.
inline Network greedy_trap_network() {
    Network n;
    for (const char* name : {"x", "y", "z", "w"}) n.add_variable(name, abc_domain(name));
    n.set_constraint(0, 3, rel_from_rows({"110", "001", "000"}));
    n.set_constraint(1, 3, rel_from_rows({"011", "100", "000"}));
    n.set_constraint(2, 3, rel_from_rows({"101", "010", "000"}));
    return n;
}

// Three relations from singleton domains into a common 4-value domain whose
// images pairwise overlap and share a common element.
inline Language overlapping_images_language() {
    Language l;
    l.domains.push_back(Domain{"u0", {"a", "b", "c", "d"}});
    l.domains.push_back(Domain{"u1", {"e"}});
    l.domains.push_back(Domain{"u2", {"f"}});
    l.domains.push_back(Domain{"u3", {"g"}});
    l.relations.push_back({1, 0, rel_from_rows({"1110"})});  // e -> {a,b,c}
    l.relations.push_back({2, 0, rel_from_rows({"0111"})});  // f -> {b,c,d}
    l.relations.push_back({3, 0, rel_from_rows({"1011"})});  // g -> {a,c,d}
    return l;
}

// {<a,a>,<a,b>}, {<a,b>,<a,c>}, {<a,a>,<a,c>}: pairwise-overlapping images of
// "a" with empty total intersection; each is closed under any majority
// operation on the domain.
inline Language pairwise_overlap_triple_language(int d = 3) {
    Language l;
    Domain dom{"D", {}};
    for (int v = 0; v < d; ++v) dom.values.push_back(std::string(1, char('a' + v)));
    l.domains.push_back(dom);
    auto rel = [&](int u, int v) {
        Relation r(d, d);
        r.insert(0, u);
        r.insert(0, v);
        return r;
    };
    l.relations.push_back({0, 0, rel(0, 1)});
    l.relations.push_back({0, 0, rel(1, 2)});
    l.relations.push_back({0, 0, rel(0, 2)});
    return l;
}

// ---- tuple-level reference algebra (independent of the bit-matrix path) ----

using Tuples = std::set<std::pair<int, int>>;

inline Tuples tuples_of(const Relation& r) {
    auto v = r.tuples();
    return Tuples(v.begin(), v.end());
}

inline Tuples ref_compose(const Tuples& r, const Tuples& s) {
    Tuples out;
    for (auto [a, b] : r)
        for (auto [b2, c] : s)
            if (b == b2) out.insert({a, c});
    return out;
}

inline Tuples ref_inverse(const Tuples& r) {
    Tuples out;
    for (auto [a, b] : r) out.insert({b, a});
    return out;
}

inline std::set<int> ref_image(const Tuples& r, const std::set<int>& sources) {
    std::set<int> out;
    for (auto [a, b] : r)
        if (sources.count(a)) out.insert(b);
    return out;
}

inline Relation random_relation(std::mt19937_64& rng, int rows, int cols, double density) {
    Relation r(rows, cols);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b)
            if (coin(rng) < density) r.insert(a, b);
    return r;
}

inline ValueSet set_of(int universe, std::initializer_list<int> vals) {
    ValueSet s(universe);
    for (int v : vals) s.insert(v);
    return s;
}

}  // namespace testing_support
