#include <doctest.h>

#include <random>

#include "addcomb/gset.hpp"
#include "oracle.hpp"

using namespace addcomb;

namespace {

GSet random_set(const Group& g, std::mt19937_64& rng, bool allow_empty = true) {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < g->order(); ++i)
        if (rng() & 1) idx.push_back(i);
    if (!allow_empty && idx.empty()) idx.push_back(static_cast<std::uint32_t>(rng() % g->order()));
    return GSet::from_indices(g, idx);
}

}  // namespace

TEST_CASE("construction and membership") {
    const Group g = make_group({12});
    const GSet s = GSet::of(g, {0, 1, 6, 7});
    CHECK(s.card() == 4);
    CHECK(s.contains(6));
    CHECK(!s.contains(5));
    CHECK(s.indices() == std::vector<std::uint32_t>{0, 1, 6, 7});
    CHECK(s.first() == 0);
    CHECK(s.to_string() == "{0,1,6,7}");

    CHECK(GSet(g).empty());
    CHECK(GSet::full(g).card() == 12);
    CHECK_THROWS_AS(GSet::of(g, {12}), std::out_of_range);
    CHECK_THROWS_AS(GSet(g).first(), std::logic_error);
}

TEST_CASE("translate matches elementwise oracle") {
    std::mt19937_64 rng(11);
    for (auto orders : {std::vector<std::uint32_t>{17}, {2, 6}, {4, 3, 2}, {64}, {2, 2, 2, 2}}) {
        const Group g = make_group(orders);
        for (int it = 0; it < 200; ++it) {
            const GSet s = random_set(g, rng);
            const auto shift = static_cast<std::uint32_t>(rng() % g->order());
            CHECK(s.translated(shift).indices() ==
                  oracle::translate(orders, s.indices(), shift));
        }
    }
}

TEST_CASE("negate, set algebra, subset") {
    std::mt19937_64 rng(13);
    const Group g = make_group({3, 5});
    for (int it = 0; it < 100; ++it) {
        const GSet a = random_set(g, rng);
        const GSet b = random_set(g, rng);

        std::vector<std::uint32_t> negd;
        for (auto i : a.indices()) negd.push_back(oracle::neg({3, 5}, i));
        std::sort(negd.begin(), negd.end());
        CHECK(a.negated().indices() == negd);
        CHECK(a.negated().negated() == a);

        CHECK(a.united(b).card() + a.intersected(b).card() == a.card() + b.card());
        CHECK(a.minus(b) == a.minus(a.intersected(b)));
        CHECK(a.complement().card() == g->order() - a.card());
        CHECK(a.intersected(b).subset_of(a));
        CHECK(a.subset_of(a.united(b)));
    }
}

TEST_CASE("translation is a bijection and composes") {
    std::mt19937_64 rng(17);
    const Group g = make_group({4, 9});
    for (int it = 0; it < 100; ++it) {
        const GSet s = random_set(g, rng);
        const auto u = static_cast<std::uint32_t>(rng() % g->order());
        const auto v = static_cast<std::uint32_t>(rng() % g->order());
        CHECK(s.translated(u).card() == s.card());
        CHECK(s.translated(u).translated(v) == s.translated(g->add(u, v)));
        CHECK(s.translated(u).translated(g->neg(u)) == s);
    }
}
