#include <doctest.h>

#include <random>

#include "addcomb/rep.hpp"
#include "oracle.hpp"

using namespace addcomb;

namespace {

GSet random_nonempty(const Group& g, std::mt19937_64& rng) {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < g->order(); ++i)
        if (rng() & 1) idx.push_back(i);
    if (idx.empty()) idx.push_back(static_cast<std::uint32_t>(rng() % g->order()));
    return GSet::from_indices(g, idx);
}

std::vector<std::uint32_t> u32(const std::vector<std::uint32_t>& v) { return v; }

}  // namespace

TEST_CASE("sumset examples") {
    const Group z5 = make_group({5});
    CHECK(sumset(GSet::of(z5, {0, 1, 2}), GSet::of(z5, {0, 1, 2})) == GSet::full(z5));

    const Group z6 = make_group({6});
    CHECK(sumset(GSet::of(z6, {0, 3}), GSet::of(z6, {0, 3})) == GSet::of(z6, {0, 3}));

    const GSet s = GSet::of(z6, {1, 2, 5});
    CHECK(sumset(GSet::of(z6, {0}), s) == s);

    CHECK_THROWS_AS(sumset(GSet(z6), s), std::invalid_argument);
    CHECK_THROWS_AS(sumset(GSet::of(z5, {0}), s), std::invalid_argument);
}

TEST_CASE("rep_counts examples") {
    const Group z5 = make_group({5});
    CHECK(rep_counts(GSet::of(z5, {0, 1, 2}), GSet::of(z5, {0, 1, 2})).counts ==
          u32({1, 2, 3, 2, 1}));

    const Group z4 = make_group({4});
    CHECK(rep_counts(GSet::full(z4), GSet::full(z4)).counts == u32({4, 4, 4, 4}));

    const Group z6 = make_group({6});
    const auto p = rep_counts(GSet::of(z6, {0, 1, 2, 3}), GSet::of(z6, {0, 1}));
    CHECK(p.counts == u32({1, 2, 2, 2, 1, 0}));
    CHECK(p.total == 8);
    CHECK(p.max_count == 2);
}

TEST_CASE("i_representable examples and nesting") {
    const Group z5 = make_group({5});
    const GSet a = GSet::of(z5, {0, 1, 2});
    CHECK(i_representable(a, a, 2) == GSet::of(z5, {1, 2, 3}));
    CHECK(i_representable(a, a, 4).empty());
    CHECK(i_representable(a, a, 1) == sumset(a, a));
    CHECK_THROWS_AS(i_representable(a, a, 0), std::invalid_argument);

    std::mt19937_64 rng(3);
    const Group g = make_group({2, 6});
    for (int it = 0; it < 50; ++it) {
        const GSet A = random_nonempty(g, rng), B = random_nonempty(g, rng);
        const auto prof = rep_counts(A, B);
        for (std::uint32_t i = 1; i + 1 <= prof.max_count + 1; ++i)
            CHECK(prof.at_least(i + 1).subset_of(prof.at_least(i)));
    }
}

TEST_CASE("pollard_sum examples") {
    const Group z5 = make_group({5});
    const GSet a5 = GSet::of(z5, {0, 1, 2});
    CHECK(pollard_sum(a5, a5, 2) == 8);

    const Group z12 = make_group({12});
    CHECK(pollard_sum(GSet::of(z12, {0, 1, 2, 6, 7, 8}), GSet::of(z12, {0, 1, 6, 7}), 3) == 20);

    CHECK(pollard_sum(a5, a5, 3) == 9);   // t = max count
    CHECK(pollard_sum(a5, a5, 7) == 9);   // t beyond max count gives |A||B|
}

TEST_CASE("profile invariants: total, symmetry, translation equivariance") {
    std::mt19937_64 rng(5);
    for (auto orders : {std::vector<std::uint32_t>{9}, {2, 6}, {3, 3, 2}}) {
        const Group g = make_group(orders);
        for (int it = 0; it < 60; ++it) {
            const GSet A = random_nonempty(g, rng), B = random_nonempty(g, rng);
            const auto p = rep_counts(A, B);
            CHECK(p.total == A.card() * B.card());
            CHECK(p.counts == rep_counts(B, A).counts);
            for (auto c : p.counts) CHECK(c <= std::min(A.card(), B.card()));

            const auto shift = static_cast<std::uint32_t>(rng() % g->order());
            const auto q = rep_counts(A.translated(shift), B);
            for (std::uint32_t c = 0; c < g->order(); ++c)
                CHECK(q.counts[c] == p.counts[g->sub(c, shift)]);
            CHECK(pollard_sum(A.translated(shift), B, 2) == pollard_sum(A, B, 2));
        }
    }
}

TEST_CASE("kernels agree bit-exactly with the double-loop oracle") {
    std::mt19937_64 rng(23);
    for (auto orders : {std::vector<std::uint32_t>{64}, {2, 6}, {12}, {2, 2, 2, 2},
                        std::vector<std::uint32_t>{4, 16}}) {
        const Group g = make_group(orders);
        for (int it = 0; it < 1000; ++it) {
            const GSet A = random_nonempty(g, rng), B = random_nonempty(g, rng);
            const auto expect = oracle::rep_counts(orders, A.indices(), B.indices());
            CHECK(rep_counts(A, B, RepKernel::Naive).counts == expect);
            CHECK(rep_counts(A, B, RepKernel::Bitset).counts == expect);
        }
    }
}

TEST_CASE("transform kernel agrees with naive" * doctest::skip(!transform_kernel_available())) {
    std::mt19937_64 rng(29);
    for (auto orders : {std::vector<std::uint32_t>{256}, {2, 128}, {3, 5, 7}}) {
        const Group g = make_group(orders);
        for (int it = 0; it < 50; ++it) {
            const GSet A = random_nonempty(g, rng), B = random_nonempty(g, rng);
            CHECK(rep_counts(A, B, RepKernel::Transform).counts ==
                  rep_counts(A, B, RepKernel::Naive).counts);
        }
    }
}

TEST_CASE("dyson transform examples and invariants") {
    const Group z5 = make_group({5});
    const GSet A = GSet::of(z5, {0, 1, 2}), B = GSet::of(z5, {0, 1});

    auto [a0, b0] = dyson_transform(A, B, 0);
    CHECK(a0 == A);
    CHECK(b0 == B);

    auto [a2, b2] = dyson_transform(A, B, 2);
    CHECK(a2 == GSet::of(z5, {0, 1, 2, 3}));
    CHECK(b2 == GSet::of(z5, {2}));
    CHECK(a2.card() + b2.card() == A.card() + B.card());

    // disjoint case: (x+B) n A empty
    auto [a3, b3] = dyson_transform(GSet::of(z5, {0}), GSet::of(z5, {0}), 3);
    CHECK(b3.empty());
    CHECK(a3 == GSet::of(z5, {0, 3}));

    std::mt19937_64 rng(31);
    const Group g = make_group({3, 4});
    for (int it = 0; it < 300; ++it) {
        const GSet X = random_nonempty(g, rng), Y = random_nonempty(g, rng);
        const auto x = static_cast<std::uint32_t>(rng() % g->order());
        const auto [xa, xb] = dyson_transform(X, Y, x);
        CHECK(xa.card() + xb.card() == X.card() + Y.card());
        if (!xa.empty() && !xb.empty()) {
            const auto before = rep_counts(X, Y);
            const auto after = rep_counts(xa, xb);
            for (std::uint32_t c = 0; c < g->order(); ++c)
                CHECK(after.counts[c] <= before.counts[g->sub(c, x)]);
        }
    }
}

TEST_CASE("is_sidon examples") {
    const Group z7 = make_group({7});
    const GSet b = GSet::of(z7, {0, 1, 3});
    CHECK(is_sidon(b));
    CHECK(sumset(b, b).card() == 6);  // |B|(|B|+1)/2
    CHECK(!is_sidon(GSet::of(z7, {0, 1, 2})));
    CHECK(is_sidon(GSet::of(z7, {4})));
    CHECK_THROWS_AS(is_sidon(GSet(z7)), std::invalid_argument);
}

TEST_CASE("additive energy examples and bijection") {
    const Group z5 = make_group({5});
    const GSet A = GSet::of(z5, {0, 1, 2});
    CHECK(additive_energy(A, A) == 5);
    CHECK(additive_energy(A, GSet::of(z5, {0, 3, 4})) == 5);
    CHECK(additive_energy(GSet::of(z5, {2}), A) == 0);

    std::mt19937_64 rng(37);
    for (auto orders : {std::vector<std::uint32_t>{11}, {2, 8}, {3, 3}}) {
        const Group g = make_group(orders);
        for (int it = 0; it < 200; ++it) {
            const GSet X = random_nonempty(g, rng), Y = random_nonempty(g, rng);
            CHECK(additive_energy(X, Y) == additive_energy(X, Y.negated()));
            if (X.card() * Y.card() <= 36)
                CHECK(additive_energy(X, Y) ==
                      oracle::energy_by_pairs(orders, X.indices(), Y.indices()));
        }
    }
}
