#include "doctest.h"
#include "ncsf/composition.hpp"

using namespace ncsf;

namespace {
Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }
}

TEST_CASE("descent round trip") {
    CHECK(Composition::from_descents(std::vector<int>{}, 3) == C({3}));
    CHECK(Composition::from_descents({1, 2}, 3) == C({1, 1, 1}));
    CHECK(Composition::from_descents({2}, 3) == C({2, 1}));
    CHECK_THROWS_AS(Composition::from_descents({3}, 3), std::domain_error);

    for (int n = 0; n <= 8; ++n)
        for (const Composition& I : compositions_of(n))
            CHECK(Composition::from_descent_mask(I.descent_mask(), n) == I);
}

TEST_CASE("lattice operations on descent sets") {
    CHECK(descent_op(C({2, 1}), C({1, 2}), DescentOp::meet) == C({3}));
    CHECK(descent_op(C({2, 1}), C({1, 2}), DescentOp::join) == C({1, 1, 1}));
    for (const Composition& I : compositions_of(5))
        CHECK(descent_op(I, I, DescentOp::diff) == C({5}));
    CHECK_THROWS_AS(descent_op(C({2}), C({3}), DescentOp::meet), std::domain_error);

    // meet/join units in each degree
    for (int n = 1; n <= 6; ++n) {
        const Composition row({std::vector<int>{n}});
        const Composition ones(std::vector<int>(n, 1));
        for (const Composition& I : compositions_of(n)) {
            CHECK(descent_op(I, row, DescentOp::meet) == row);
            CHECK(descent_op(I, ones, DescentOp::meet) == I);
            CHECK(descent_op(I, row, DescentOp::join) == I);
            CHECK(descent_op(I, ones, DescentOp::join) == ones);
        }
    }

    // the empty composition is its own lattice
    CHECK(descent_op(Composition(), Composition(), DescentOp::meet) == Composition());
    CHECK(descent_op(Composition(), Composition(), DescentOp::join) == Composition());
}

TEST_CASE("complement and conjugate are involutions") {
    CHECK(C({3}).complement() == C({1, 1, 1}));
    CHECK(C({5}).conjugate() == C({1, 1, 1, 1, 1}));
    CHECK(C({2, 1}).conjugate() == C({2, 1}));
    CHECK(C({1, 2}).conjugate() == C({1, 2}));
    for (int n = 0; n <= 8; ++n) {
        for (const Composition& I : compositions_of(n)) {
            CHECK(I.complement().complement() == I);
            CHECK(I.conjugate().conjugate() == I);
        }
    }
}

TEST_CASE("descent compositions of permutations and words") {
    CHECK(Permutation({1, 3, 2}).descent_composition() == C({2, 1}));
    CHECK(Permutation::identity(4).descent_composition() == C({4}));
    CHECK(descent_composition({2, 2, 1}) == C({2, 1}));
    CHECK_THROWS_AS(descent_composition({}), std::domain_error);
}

TEST_CASE("ribbon numbers") {
    CHECK(ribbon_number(C({4})) == 1);
    CHECK(ribbon_number(C({1, 1, 1, 1})) == 1);
    CHECK(ribbon_number(C({2, 1})) == 2);  // 132 and 231
    CHECK(ribbon_number(Composition()) == 1);

    for (int n = 1; n <= 7; ++n)
        for (const Composition& I : compositions_of(n))
            CHECK(ribbon_number(I) == ribbon_number_brute(I));

    for (int n = 0; n <= 8; ++n) {
        Int total = 0;
        for (const Composition& I : compositions_of(n)) total += ribbon_number(I);
        CHECK(total == factorial(n));
    }

    // the reversed-complement class has the same size
    for (int n = 1; n <= 6; ++n)
        for (const Composition& I : compositions_of(n))
            CHECK(ribbon_number_brute(I) == ribbon_number_brute(I.complement().reversed()));
}

TEST_CASE("maj and coimaj") {
    CHECK(C({3}).maj() == 0);
    CHECK(C({1, 2}).maj() == 1);
    CHECK(C({1, 1, 1}).maj() == 3);
    CHECK(Permutation::identity(5).coimaj() == 0);
    CHECK(Permutation({2, 1}).coimaj() == 1);
}

TEST_CASE("serialization") {
    CHECK(C({2, 1}).to_string() == "2,1");
    CHECK(Composition().to_string() == "");
    CHECK(Composition::parse("2,1") == C({2, 1}));
    CHECK(Composition::parse("") == Composition());
    CHECK_THROWS_AS(Composition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("2,"), std::invalid_argument);
}
