#include <doctest.h>

#include <random>

#include "bicard/shuttle.hpp"

using namespace bicard;

TEST_CASE("finite size comparison") {
    Concept e = Concept::empty(4), x = Concept::of({0, 1}, 4), y = Concept::of({2}, 4);
    CHECK(tri_le_concepts(e, e));
    CHECK(tri_le_concepts(e, x));
    CHECK(tri_le_concepts(x, y));  // any nonempty set covers with enough copies
    CHECK(!tri_le_concepts(x, e));
    CHECK_THROWS_AS(tri_le_concepts(x, Concept::of({0}, 5)), error);
}

TEST_CASE("almost complementary pairs are the proper complement splits") {
    int n = 4;
    Concept X = Concept::of({0, 1}, n);
    CHECK(almost_complementary(X, X.complement()));
    CHECK(!almost_complementary(X, Concept::of({1, 2}, n)));
    CHECK(!almost_complementary(X, X));
    CHECK_THROWS_AS(almost_complementary(X, Concept::of({0}, n)), error);
    // Exhaustive collapse check: AC holds exactly for complement pairs.
    for (std::uint32_t xb = 0; xb < 16u; ++xb)
        for (std::uint32_t yb = 0; yb < 16u; ++yb) {
            Concept A(xb, n), B(yb, n);
            if (A.size() != B.size()) continue;
            CHECK(almost_complementary(A, B) ==
                  (yb == (~xb & Concept::mask(n)) && A.size() == B.size()));
        }
}

TEST_CASE("symmetric pairs collapse to proper self-pairs") {
    int n = 5;
    for (std::uint32_t xb = 0; xb < 32u; ++xb)
        for (std::uint32_t yb = 0; yb < 32u; ++yb) {
            Concept A(xb, n), B(yb, n);
            if (A.size() != B.size()) continue;
            bool expect = xb == yb && A.size() > 0 && A.size() < n;
            CHECK(symmetric_pair(A, B) == expect);
        }
}

TEST_CASE("opportune pairs") {
    InvariantRelation total = catalog("TOTAL", 4);
    Concept X = Concept::of({0, 1}, 4), Y = Concept::of({1, 2}, 4);
    CHECK(opportune(total, X, Y));
    CHECK(!opportune(total, X, X));                         // not distinct
    CHECK(!opportune(total, X, X.complement()));            // almost complementary
    CHECK(!opportune(total, X, Concept::of({0}, 4)));       // sizes differ
    CHECK(!opportune(catalog("BLV", 4), X, Y));             // unrelated
    CHECK(relatively_finite(X, Y));
    CHECK(relatively_finite(X, X));
    CHECK(!relatively_finite(X, Concept::of({0}, 4)));
}

TEST_CASE("concept bijections") {
    Concept dom = Concept::of({0, 1, 3}, 5), rng = Concept::of({1, 2, 4}, 5);
    ConceptBijection f = ConceptBijection::canonical(dom, rng);
    CHECK(f.fixes_overlap());
    CHECK(f.apply(1) == 1);
    CHECK(f.apply(0) == 2);
    CHECK(f.apply(3) == 4);
    CHECK(f.image(dom) == rng);
    CHECK(f.inverse().apply(2) == 0);
    CHECK_THROWS_AS(f.apply(2), error);
    CHECK_THROWS_AS(f.image(Concept::of({2}, 5)), error);

    ConceptBijection twisted(dom, rng, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(!twisted.fixes_overlap());
    ConceptBijection fixed = normalize_fixing_overlap(twisted);
    CHECK(fixed.fixes_overlap());
    CHECK(fixed.apply(1) == 1);
    CHECK(normalize_fixing_overlap(f).apply(0) == 2);

    CHECK_THROWS_AS(ConceptBijection(dom, rng, {{0, 1}, {1, 2}}), error);  // partial
    CHECK_THROWS_AS(ConceptBijection(dom, rng, {{0, 1}, {1, 1}, {3, 4}}), error);
}

TEST_CASE("a fully hand-checked shuttle run") {
    int n = 4;
    InvariantRelation total = catalog("TOTAL", n);
    Concept X = Concept::of({0, 1}, n);
    Concept Y = Concept::of({1, 2}, n);
    Concept Z = Concept::of({2, 3}, n);
    ConceptBijection f = ConceptBijection::canonical(X, Z);  // 0->2, 1->3

    ShuttleTrace tr = shuttle(total, X, Y, Z, f);
    REQUIRE(tr.stages.size() == 4);
    CHECK(tr.ok);
    CHECK(tr.x_final == Z);

    // Stage 1 routes {2} through the overlap {1}; net effect swaps 0 and 2.
    CHECK(tr.stages[0].tag == StageTag::AtoX);
    CHECK(tr.stages[0].moved == Concept::of({0, 2}, n));
    CHECK(tr.stages[0].x_after == Concept::of({1, 2}, n));
    CHECK(tr.stages[0].route == "via intersection");

    // Stages 2 and 3 have empty blocks here.
    CHECK(tr.stages[1].moved.is_empty());
    CHECK(tr.stages[2].moved.is_empty());

    // Stage 4 shuttles {3} through the left difference {2}; swaps 1 and 3.
    CHECK(tr.stages[3].tag == StageTag::ExttoS);
    CHECK(tr.stages[3].moved == Concept::of({1, 3}, n));
    CHECK(tr.stages[3].route == "via left difference");
    CHECK(tr.stages[3].x_after == Z);

    for (const ShuttleStage& st : tr.stages) CHECK(st.class_preserved);
    CHECK(tr.composite.apply(X) == Z);
}

TEST_CASE("shuttle preconditions throw") {
    int n = 4;
    InvariantRelation total = catalog("TOTAL", n);
    Concept X = Concept::of({0, 1}, n), Y = Concept::of({1, 2}, n);
    Concept Z = Concept::of({2, 3}, n);
    ConceptBijection f = ConceptBijection::canonical(X, Z);
    CHECK_THROWS_AS(shuttle(total, X, X, Z, f), error);  // not opportune
    CHECK_THROWS_AS(shuttle(total, X, Y, Concept::of({2}, n),
                            ConceptBijection::canonical(X, Concept::of({2}, n))),
                    error);  // sizes differ
    CHECK_THROWS_AS(shuttle(total, Y, X, Z, f), error);  // f does not map Y
    ConceptBijection twisted(Concept::of({0, 1}, n), Concept::of({1, 2}, n),
                             {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(shuttle(total, X, Y, Concept::of({1, 2}, n), twisted), error);
}

TEST_CASE("shuttle succeeds on random opportune instances") {
    std::mt19937_64 rng(2024);
    int runs = 0;
    for (int n = 3; n <= 6; ++n) {
        std::vector<InvariantRelation> rels;
        for (const std::string& name : catalog_names()) rels.push_back(catalog(name, n));
        for (const InvariantRelation& E : sample(n, 99, 20)) rels.push_back(E);
        std::uint32_t all = 1u << n;
        for (const InvariantRelation& E : rels)
            for (int trial = 0; trial < 40; ++trial) {
                Concept X(static_cast<std::uint32_t>(rng()) % all, n);
                Concept Y(static_cast<std::uint32_t>(rng()) % all, n);
                if (!opportune(E, X, Y)) continue;
                Concept Z(static_cast<std::uint32_t>(rng()) % all, n);
                if (Z.size() != X.size()) continue;
                ShuttleTrace tr = shuttle(E, X, Y, Z, ConceptBijection::canonical(X, Z));
                CHECK(tr.ok);
                CHECK(tr.x_final == Z);
                CHECK(tr.composite.apply(X) == Z);
                CHECK(E.holds(Z, X));
                ++runs;
            }
    }
    CHECK(runs > 100);  // the filter must leave real work behind
}
