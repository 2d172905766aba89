#include <doctest.h>

#include "addcomb/examples.hpp"
#include "addcomb/rep.hpp"
#include "addcomb/theorems.hpp"

using namespace addcomb;

TEST_CASE("family 1 anchor instance") {
    // H = Z_2, quotient Z_6, d = 1, s = 3, r = 2, x = 1 (t = 3); flat indices
    // match the order-12 layout {0,1,2,6,7,8} / {0,1,6,7}.
    const auto inst = build_example1(2, 6, 1, 3, 2, 1);
    CHECK(inst.t == 3);
    CHECK(inst.A.indices() == std::vector<std::uint32_t>{0, 1, 2, 6, 7, 8});
    CHECK(inst.B.indices() == std::vector<std::uint32_t>{0, 1, 6, 7});
    CHECK(inst.A.card() == 6);
    CHECK(inst.B.card() == 4);
    CHECK(pollard_sum(inst.A, inst.B, inst.t) == 20);
    CHECK(inst.predicted_defect == -1);
    CHECK(measured_defect(inst) == -1);
}

TEST_CASE("family 1 half-H defect") {
    // x = |H|/2 makes the defect -|H|^2/4
    const auto inst = build_example1(4, 8, 1, 3, 2, 2);
    CHECK(inst.predicted_defect == -4);
    CHECK(measured_defect(inst) == -4);

    const auto inst6 = build_example1(6, 8, 1, 2, 2, 3);
    CHECK(inst6.predicted_defect == -9);
    CHECK(measured_defect(inst6) == -9);
}

TEST_CASE("family 1 minimal parameters") {
    const auto inst = build_example1(2, 3, 1, 2, 2, 1);
    CHECK(inst.t == 3);
    CHECK(inst.predicted_defect == -1);
    CHECK(measured_defect(inst) == -1);
}

TEST_CASE("family 1 constraint violations") {
    CHECK_THROWS_AS(build_example1(1, 6, 1, 3, 2, 1), std::invalid_argument);  // |H| = 1
    CHECK_THROWS_AS(build_example1(2, 6, 1, 2, 3, 1), std::invalid_argument);  // s < r
    CHECK_THROWS_AS(build_example1(2, 6, 1, 3, 1, 1), std::invalid_argument);  // r < 2
    CHECK_THROWS_AS(build_example1(2, 6, 0, 3, 2, 1), std::invalid_argument);  // d = 0
    CHECK_THROWS_AS(build_example1(2, 6, 1, 3, 2, 0), std::invalid_argument);  // x = 0
    CHECK_THROWS_AS(build_example1(2, 6, 1, 3, 2, 2), std::invalid_argument);  // x = |H|
    CHECK_THROWS_AS(build_example1(2, 6, 2, 3, 2, 1), std::invalid_argument);  // ord(d)=3 < 4
    CHECK_THROWS_AS(build_example1(2, 4, 1, 4, 2, 1), std::invalid_argument);  // r+s-1 > ord(d)
}

TEST_CASE("family 1 structural invariants over a parameter sweep") {
    const auto params = enumerate_example1_params(4, 6);
    CHECK(!params.empty());
    for (const auto& p : params) {
        const auto inst = build_example1(p.H_order, p.quotient_order, p.d, p.s, p.r, p.x);
        CHECK(measured_defect(inst) == inst.predicted_defect);

        const GSet AtB = i_representable(inst.A, inst.B, inst.t);
        CHECK(stabilizer(AtB) == inst.periodizer);
        CHECK(inst.periodizer.order() <= inst.t - 1);

        // the main theorem still holds: the weak bound absorbs these
        const auto v = check_main_theorem(inst.A, inst.B, inst.t, inst.t);
        CHECK(v.holds);
        CHECK(v.branch == Branch::WeakBound);

        // the structural condition (witness equality of sumsets) fails
        if (inst.t <= 4 && inst.A.card() + inst.B.card() <= 14)
            CHECK(!find_structural_witness(inst.A, inst.B, inst.t, inst.t - 1).has_value());
    }
}

TEST_CASE("family 2 minimal instances") {
    // Z_16 with H = <4>, L = <8>
    const Group z16 = make_group({16});
    const Subgroup H = subgroup_generated_by(z16, std::vector<std::uint32_t>{4});
    const Subgroup L = subgroup_generated_by(z16, std::vector<std::uint32_t>{8});
    const auto inst = build_example2(z16, H, L, 2, 1);
    CHECK(inst.t == 5);
    CHECK(inst.A.card() == 14);  // |G| - |H| + |L|
    CHECK(inst.B.card() == 6);   // (r-1)|H| + |L|
    CHECK(inst.predicted_defect == -1);
    CHECK(measured_defect(inst) == -1);
    CHECK(stabilizer(i_representable(inst.A, inst.B, inst.t)) == L);

    // Z_2 x Z_8 with H = <(1,2)>, L = <(0,4)>
    const Group g28 = make_group({2, 8});
    const Subgroup H2 = subgroup_generated_by(g28, std::vector<std::uint32_t>{10});
    const Subgroup L2 = subgroup_generated_by(g28, std::vector<std::uint32_t>{4});
    REQUIRE(H2.order() == 4);
    REQUIRE(L2.order() == 2);
    const auto inst2 = build_example2(g28, H2, L2, 2, 1);
    CHECK(inst2.predicted_defect == -1);
    CHECK(measured_defect(inst2) == -1);
    CHECK(stabilizer(i_representable(inst2.A, inst2.B, inst2.t)) == L2);
}

TEST_CASE("family 2 chain violations") {
    const Group z16 = make_group({16});
    const Subgroup H = subgroup_generated_by(z16, std::vector<std::uint32_t>{4});
    const Subgroup L = subgroup_generated_by(z16, std::vector<std::uint32_t>{8});
    const Subgroup trivial = Subgroup::trivial(z16);
    const Subgroup full = Subgroup::full(z16);

    CHECK_THROWS_AS(build_example2(z16, H, trivial, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_example2(z16, full, L, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_example2(z16, L, L, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_example2(z16, H, L, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_example2(z16, H, L, 2, 2), std::invalid_argument);  // x > |L|-1
    CHECK_THROWS_AS(build_example2(z16, H, L, 5, 1), std::invalid_argument);  // r > |G/H|

    // non-cyclic quotient: Z_2 x Z_8 over <(0,2)> has quotient Z_2 x Z_2
    const Group g28 = make_group({2, 8});
    const Subgroup Hbad = subgroup_generated_by(g28, std::vector<std::uint32_t>{2});
    const Subgroup L2 = subgroup_generated_by(g28, std::vector<std::uint32_t>{4});
    REQUIRE(Hbad.order() == 4);
    CHECK_THROWS_AS(build_example2(g28, Hbad, L2, 2, 1), std::invalid_argument);
}

TEST_CASE("family 2 sweep up to order 16") {
    const auto params = enumerate_example2_params(16);
    CHECK(!params.empty());
    for (const auto& p : params) {
        const auto inst = build_example2(p.G, p.H, p.L, p.r, p.x);
        CHECK(measured_defect(inst) == inst.predicted_defect);
        CHECK(stabilizer(i_representable(inst.A, inst.B, inst.t)) == p.L);
        const auto v = check_main_theorem(inst.A, inst.B, inst.t, inst.t);
        CHECK(v.holds);
        CHECK(v.branch == Branch::WeakBound);
    }
}

TEST_CASE("neither family admits t = 2") {
    CHECK(enumerate_example1_params(6, 8, 2).empty());
    CHECK(enumerate_example2_params(32, 2).empty());
    CHECK(!enumerate_example1_params(6, 8, 3).empty());
}
