#include <doctest.h>

#include "bicard/abstraction.hpp"

using namespace bicard;

TEST_CASE("class counts of the built-in relations") {
    CHECK(class_count(catalog("TOTAL", 4)) == 1);
    CHECK(class_count(catalog("HP", 4)) == 5);      // one class per size
    CHECK(class_count(catalog("CP", 4)) == 4);      // junk class + 3 complement pairs
    CHECK(class_count(catalog("BLV", 4)) == 16);    // identity
    CHECK(class_count(basal(6)) == 45);             // 64 - 20 + 1
    CHECK(basal(4) == catalog("BLV", 4));
}

TEST_CASE("satisfiability and kernel round trips") {
    SatReport total = satisfiable(catalog("TOTAL", 3));
    CHECK(total.satisfiable);
    CHECK(total.classes == 1);
    REQUIRE(total.witness.has_value());
    CHECK(total.witness->kernel() == catalog("TOTAL", 3));

    SatReport cp = satisfiable(catalog("CP", 4));
    CHECK(cp.satisfiable);
    CHECK(cp.classes == 4);
    REQUIRE(cp.witness.has_value());
    CHECK(cp.witness->kernel() == catalog("CP", 4));
    CHECK(cp.witness->surjective());

    // Equinumerosity needs n+1 values, one per size.
    for (int n = 1; n <= 8; ++n) {
        SatReport hp = satisfiable(catalog("HP", n));
        CHECK(hp.classes == n + 1);
        CHECK(!hp.satisfiable);
    }
    CHECK(!satisfiable(catalog("BLV", 4)).satisfiable);
}

TEST_CASE("operator construction guards") {
    CHECK_THROWS_AS(AbstractionOperator(3, std::vector<std::uint8_t>(4, 0)), error);
    CHECK_THROWS_AS(AbstractionOperator(3, std::vector<std::uint8_t>(8, 3)), error);
    // A table that looks at identity, not shape, has no invariant kernel.
    AbstractionOperator skew(2, {0, 0, 1, 1});
    CHECK_THROWS_AS(skew.kernel(), error);
}

TEST_CASE("all kernel operators are found in order") {
    auto ops = kernel_operators(catalog("TOTAL", 3), 100);
    REQUIRE(ops.size() == 3);  // constants
    for (int v = 0; v < 3; ++v) CHECK(ops[static_cast<std::size_t>(v)].apply_bits(5u) == v);

    auto cp_ops = kernel_operators(catalog("CP", 4), 1000);
    CHECK(cp_ops.size() == 24);  // 4 classes into 4 values, injectively
    for (const AbstractionOperator& op : cp_ops) CHECK(op.kernel() == catalog("CP", 4));
    CHECK(kernel_operators(catalog("CP", 4), 5).size() == 5);
    CHECK(kernel_operators(catalog("BLV", 4), 10).empty());
}

TEST_CASE("restricted satisfiability, single-slice agreement") {
    // Middle-slice complement pairing fits at n=4 but not at n=6.
    SatReport r4 = restricted_satisfiable(catalog("LCP", 4), 2, RestrictMode::Eq);
    CHECK(r4.satisfiable);
    REQUIRE(r4.witness.has_value());
    CHECK(r4.witness->kernel() == catalog("CP", 4));

    SatReport r6 = restricted_satisfiable(catalog("LCP", 6), 3, RestrictMode::Eq);
    CHECK(!r6.satisfiable);
    CHECK(r6.classes == 10);  // ten complement pairs already overflow

    // A fully separated proper slice never fits.
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(!restricted_satisfiable(catalog("BLV", n), k, RestrictMode::Eq).satisfiable);

    // Trivial slices are always easy.
    CHECK(restricted_satisfiable(catalog("NP", 6), 2, RestrictMode::Eq).satisfiable);
    CHECK(restricted_satisfiable(catalog("BLV", 5), 0, RestrictMode::Eq).satisfiable);
    CHECK_THROWS_AS(restricted_satisfiable(catalog("BLV", 4), 7, RestrictMode::Eq), error);
}

TEST_CASE("restricted satisfiability, everything below a slice") {
    CHECK(!restricted_satisfiable(catalog("BLV", 4), 1, RestrictMode::Le).satisfiable);
    SatReport hp = restricted_satisfiable(catalog("HP", 6), 2, RestrictMode::Le);
    CHECK(hp.satisfiable);  // sizes 0,1,2 apart, everything bigger merged
    CHECK(restricted_satisfiable(catalog("TOTAL", 6), 6, RestrictMode::Le).satisfiable);
    CHECK(!restricted_satisfiable(catalog("BLV", 6), 6, RestrictMode::Le).satisfiable);
}

TEST_CASE("nontrivial middle slices blow up the class count") {
    MiddleSliceReport odd = check_middle_slice_blowup(catalog("BLV", 5));
    CHECK(!odd.applicable);
    MiddleSliceReport small = check_middle_slice_blowup(catalog("BLV", 4));
    CHECK(!small.applicable);

    MiddleSliceReport hp = check_middle_slice_blowup(catalog("HP", 6));
    CHECK(hp.applicable);
    CHECK(!hp.nontrivial_middle);
    CHECK(hp.confirmed);

    for (const char* name : {"BLV", "CP", "LCP"}) {
        MiddleSliceReport rep = check_middle_slice_blowup(catalog(name, 6));
        CHECK(rep.applicable);
        CHECK(rep.nontrivial_middle);
        CHECK(rep.classes > 6);
        CHECK(rep.confirmed);
    }
}

TEST_CASE("indicator relations are broken by every non-permutation") {
    IndicatorReport bp = indicator_check(catalog("BP", 3), 1'000'000);
    CHECK(bp.exhaustive);
    CHECK(bp.indicator);
    CHECK(bp.maps_checked == 27 - 6);

    IndicatorReport total = indicator_check(catalog("TOTAL", 3), 1'000'000);
    CHECK(!total.indicator);
    REQUIRE(total.unbroken_map.has_value());

    // Over budget falls back to seeded sampling, still deterministic.
    IndicatorReport sampled = indicator_check(catalog("BP", 8), 500, 11);
    CHECK(!sampled.exhaustive);
    CHECK(sampled.indicator);
    CHECK(sampled.maps_checked == 500);
}

TEST_CASE("size overflow predicates") {
    CHECK(expl_size(3, 6));
    CHECK(!expl_size(2, 6));
    CHECK(top_size(3, 6));
    CHECK(!top_size(2, 6));
    CHECK(!top_size(4, 6));  // the complement side is too small
    CHECK(top_size(3, 7));
    CHECK(top_size(4, 7));
    CHECK(top(Concept::of({0, 1, 2}, 6)));
    CHECK(!expl(Concept::of({0, 1}, 6)));
}

TEST_CASE("satisfiable relations are trivial on top slices") {
    TopTrivialityReport total = check_top_triviality(catalog("TOTAL", 6));
    CHECK(total.applicable);
    CHECK(total.pass);
    TopTrivialityReport blv = check_top_triviality(catalog("BLV", 6));
    CHECK(!blv.applicable);  // not satisfiable, vacuous
    CHECK(blv.pass);

    for (int n = 5; n <= 6; ++n)
        for (const InvariantRelation& E : sample(n, 3, 200))
            CHECK(check_top_triviality(E).pass);
}

TEST_CASE("the basal relation refines everything satisfiable") {
    for (int n = 2; n <= 4; ++n) {
        FinerReport rep = finer_than_all_satisfiable(n);
        CHECK(rep.basal_is_identity);
        CHECK(rep.pass);
        CHECK(rep.satisfiable_count > 0);
    }
    FinerReport big = finer_than_all_satisfiable(6, 7, 500);
    CHECK(!big.basal_is_identity);
    CHECK(big.pass);
}
