#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcstar/relation.hpp"
#include "helpers.hpp"

using namespace dpcstar;
using namespace testing_support;

TEST_CASE("inverse is an involution") {
    Relation r12 = rel_from_rows({"111", "110", "100"});
    CHECK(r12.inverse().inverse() == r12);
}

TEST_CASE("composition tightens the diamond long edge") {
    // R_34 is not contained in R_32 o R_24, so intersecting is a strict cut.
    Relation r32 = rel_from_rows({"111", "011", "001"});
    Relation r24 = rel_from_rows({"111", "011", "001"});
    Relation r34 = rel_from_rows({"111", "100", "100"});
    Relation cut = r34 & compose(r32, r24);
    CHECK(cut.subset_of(r34));
    CHECK(cut != r34);
    CHECK_FALSE(r34.subset_of(compose(r32, r24)));
}

TEST_CASE("universal is the identity of intersection") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Relation r = random_relation(rng, 4, 5, 0.4);
        CHECK((r & Relation::universal(4, 5)) == r);
    }
}

TEST_CASE("star leg composition yields the singleton pair relation") {
    Relation r4 = compose(star_r1(), star_r2().inverse());
    CHECK(tuples_of(r4) == Tuples{{0, 2}});  // {<a,c>}
    Relation r6 = compose(star_r1(), star_r3().inverse());
    CHECK(tuples_of(r6) == Tuples{{0, 1}});  // {<a,b>}
    Relation r5 = compose(star_r2(), star_r3().inverse());
    CHECK(tuples_of(r5) == Tuples{{2, 1}});  // {<c,b>}
}

TEST_CASE("composing with the universal relation fills every supported row") {
    std::mt19937_64 rng(11);
    Relation r = random_relation(rng, 5, 4, 0.3);
    Relation filled = compose(r, Relation::universal(4, 6));
    for (int a = 0; a < 5; ++a) {
        if (r.image_of(a).empty())
            CHECK(filled.image_of(a).empty());
        else
            CHECK(filled.image_of(a).count() == 6);
    }
}

TEST_CASE("bit-level composition equals tuple-level composition") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        int a = 1 + int(rng() % 5), b = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        Relation r = random_relation(rng, a, b, 0.4);
        Relation s = random_relation(rng, b, c, 0.4);
        CHECK(tuples_of(compose(r, s)) == ref_compose(tuples_of(r), tuples_of(s)));
        CHECK(tuples_of(compose_transposed(r, s.inverse())) ==
              ref_compose(tuples_of(r), tuples_of(s)));
    }
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        Relation r = random_relation(rng, 4, 3, 0.5);
        Relation s = random_relation(rng, 3, 5, 0.5);
        Relation t = random_relation(rng, 5, 4, 0.5);
        CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    }
}

TEST_CASE("image of the star leg") {
    // w-values reachable from x = a: {a, c}; nothing reaches back from x = b.
    CHECK(star_r1().image(set_of(3, {0})) == set_of(3, {0, 2}));
    CHECK(star_r1().inverse().image(set_of(3, {0})) == set_of(3, {0}));
    CHECK(star_r1().image(set_of(3, {1})).empty());
}

TEST_CASE("image of the empty set is empty") {
    CHECK(star_r1().image(ValueSet(3)).empty());
}

TEST_CASE("image equals a per-tuple scan") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        Relation r = random_relation(rng, 6, 5, 0.35);
        ValueSet src(6);
        std::set<int> ref_src;
        for (int v = 0; v < 6; ++v)
            if (rng() % 2) {
                src.insert(v);
                ref_src.insert(v);
            }
        std::set<int> expect = ref_image(tuples_of(r), ref_src);
        std::vector<int> got = r.image(src).values();
        CHECK(std::set<int>(got.begin(), got.end()) == expect);
    }
}

TEST_CASE("preimage picks exactly the supported rows") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 50; ++i) {
        Relation r = random_relation(rng, 5, 6, 0.3);
        ValueSet tgt(6);
        for (int v = 0; v < 6; ++v)
            if (rng() % 2) tgt.insert(v);
        ValueSet got = r.preimage(tgt);
        for (int a = 0; a < 5; ++a)
            CHECK(got.contains(a) == r.image_of(a).intersects(tgt));
    }
}

TEST_CASE("intersection requires matching dimensions") {
    Relation r(3, 4), s(4, 3);
    CHECK_THROWS_AS(r &= s, std::invalid_argument);
    CHECK_THROWS_AS(compose(r, r), std::invalid_argument);
}

TEST_CASE("restrict_to and covers_product") {
    Relation r = Relation::universal(4, 4);
    ValueSet some = set_of(4, {1, 2}), all(4, true);
    CHECK(r.covers_product(all, all));
    r.restrict_to(some, all);
    CHECK(r.covers_product(some, all));
    CHECK_FALSE(r.covers_product(all, all));
    CHECK(r.count() == 8);
    CHECK(r == Relation::product(some, all));
}
