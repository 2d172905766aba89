#include <doctest.h>

#include <random>

#include "addcomb/group.hpp"
#include "oracle.hpp"

using namespace addcomb;

TEST_CASE("make_group basics") {
    CHECK(make_group({5})->order() == 5);
    CHECK(make_group({2, 2})->order() == 4);

    const Group g = make_group({2, 6});
    CHECK(g->order() == 12);
    const std::uint32_t coords[] = {1, 3};
    CHECK(g->flatten(coords) == 9);
    CHECK(g->coords(9) == std::vector<std::uint32_t>{1, 3});

    CHECK_THROWS_AS(make_group({}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({1u << 11, 1u << 11}), std::domain_error);  // 2^22
}

TEST_CASE("flatten is a bijection") {
    for (auto orders : {std::vector<std::uint32_t>{12}, {2, 6}, {3, 2, 2}, {1, 5, 1}}) {
        const Group g = make_group(orders);
        for (std::uint32_t i = 0; i < g->order(); ++i)
            CHECK(g->flatten(g->coords(i)) == i);
    }
}

TEST_CASE("add/neg agree with the mixed-radix oracle") {
    std::mt19937_64 rng(7);
    for (auto orders : {std::vector<std::uint32_t>{16}, {2, 6}, {4, 3, 2}, {7, 7}}) {
        const Group g = make_group(orders);
        for (int it = 0; it < 500; ++it) {
            const auto a = static_cast<std::uint32_t>(rng() % g->order());
            const auto b = static_cast<std::uint32_t>(rng() % g->order());
            CHECK(g->add(a, b) == oracle::add(orders, a, b));
            CHECK(g->neg(a) == oracle::neg(orders, a));
            CHECK(g->add(a, g->neg(a)) == 0);
            CHECK(g->sub(g->add(a, b), b) == a);
        }
    }
}

TEST_CASE("element orders") {
    const Group z12 = make_group({12});
    CHECK(z12->element_order(0) == 1);
    CHECK(z12->element_order(1) == 12);
    CHECK(z12->element_order(2) == 6);
    CHECK(z12->element_order(6) == 2);

    const Group g = make_group({2, 6});
    const std::vector<std::uint32_t> c{1, 3};
    CHECK(g->element_order(g->flatten(c)) == 2);  // (1,3) has order lcm(2,2)
    const std::vector<std::uint32_t> c2{1, 1};
    CHECK(g->element_order(g->flatten(c2)) == 6);
}

TEST_CASE("invariant factors canonicalize presentations") {
    CHECK(make_group({2, 6})->invariant_factors() == std::vector<std::uint32_t>{2, 6});
    CHECK(make_group({6, 2})->invariant_factors() == std::vector<std::uint32_t>{2, 6});
    CHECK(make_group({2, 3})->invariant_factors() == std::vector<std::uint32_t>{6});
    CHECK(make_group({12})->invariant_factors() == std::vector<std::uint32_t>{12});
    CHECK(make_group({1})->invariant_factors() == std::vector<std::uint32_t>{1});
    CHECK(make_group({4, 6})->invariant_factors() == std::vector<std::uint32_t>{2, 12});

    CHECK(make_group({2, 3})->is_cyclic());
    CHECK(!make_group({2, 6})->is_cyclic());
    CHECK(make_group({5})->is_cyclic());
    CHECK(make_group({1})->is_cyclic());
}
