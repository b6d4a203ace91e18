#include <doctest.h>

#include "bicard/classify.hpp"

using namespace bicard;

TEST_CASE("slice partitions are canonical") {
    InvariantRelation hp = catalog("HP", 4);
    SlicePartition part = slice_classes(hp, 2);
    REQUIRE(part.blocks.size() == 1);
    CHECK(part.blocks[0].size() == 6);
    CHECK(part.blocks[0][0] == Concept::of({0, 1}, 4));

    InvariantRelation blv = catalog("BLV", 4);
    SlicePartition sep = slice_classes(blv, 2);
    CHECK(sep.blocks.size() == 6);
    for (const auto& block : sep.blocks) CHECK(block.size() == 1);

    CHECK_THROWS_AS(slice_classes(hp, 5), error);
}

TEST_CASE("profiles of the catalog relations") {
    InvariantRelation total = catalog("TOTAL", 5);
    for (int k = 0; k <= 5; ++k)
        CHECK(classify_slice(total, k).profile == SliceProfile::Trivial);

    InvariantRelation blv = catalog("BLV", 4);
    CHECK(classify_slice(blv, 0).profile == SliceProfile::Trivial);
    for (int k = 1; k <= 3; ++k)
        CHECK(classify_slice(blv, k).profile == SliceProfile::ProperSeparation);
    CHECK(classify_slice(blv, 4).profile == SliceProfile::Trivial);

    InvariantRelation cp = catalog("CP", 4);
    CHECK(classify_slice(cp, 2).profile == SliceProfile::ProperComplementation);
    CHECK(classify_slice(cp, 1).profile == SliceProfile::Trivial);
    CHECK(classify_slice(cp, 3).profile == SliceProfile::Trivial);

    InvariantRelation lcp = catalog("LCP", 6);
    CHECK(classify_slice(lcp, 3).profile == SliceProfile::ProperComplementation);
}

TEST_CASE("trichotomy holds for every relation at small sizes") {
    for (int n = 1; n <= 4; ++n)
        for (const InvariantRelation& E : enumerate_all(n)) {
            TrichotomyReport rep = trichotomy_check(E);
            CHECK(rep.pass);
            CHECK(rep.violations.empty());
            if (n > 2)
                for (const SliceReport& sr : rep.slices)
                    CHECK(sr.profile != SliceProfile::Violation);
        }
}

TEST_CASE("degenerate overlaps at tiny sizes are flagged and exempt") {
    InvariantRelation hp2 = catalog("HP", 2);
    SliceReport sr = classify_slice(hp2, 1);
    CHECK(sr.profile == SliceProfile::Trivial);
    CHECK(sr.flags.trivial);
    CHECK(sr.flags.complementative);
    CHECK(sr.degenerate_overlap);
    CHECK(sr.exempt);

    // One-concept slices overlap trivial/separative at any n, also exempt.
    SliceReport s0 = classify_slice(catalog("BLV", 5), 0);
    CHECK(s0.degenerate_overlap);
    CHECK(s0.exempt);
}

TEST_CASE("tightness holds across sweeps") {
    for (int n = 1; n <= 4; ++n)
        for (const InvariantRelation& E : enumerate_all(n)) CHECK(check_tightness(E).pass);
    for (const InvariantRelation& E : sample(6, 5, 300)) CHECK(check_tightness(E).pass);
}
