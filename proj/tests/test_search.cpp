#include <doctest.h>

#include <random>

#include "addcomb/json_io.hpp"
#include "addcomb/search.hpp"

using namespace addcomb;

namespace {

std::vector<std::vector<std::uint32_t>> factor_lists(const std::vector<Group>& gs) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& g : gs) out.push_back(g->orders());
    return out;
}

std::string dump_campaign(const CampaignConfig& cfg) {
    std::string out;
    run_campaign(cfg, [&](const CampaignRecord& rec) {
        out += record_to_json(rec).dump();
        out += '\n';
    });
    return out;
}

}  // namespace

TEST_CASE("enumerate_abelian_groups") {
    using V = std::vector<std::vector<std::uint32_t>>;
    CHECK(factor_lists(enumerate_abelian_groups(4)) ==
          V{{1}, {2}, {3}, {4}, {2, 2}});

    const auto upto8 = factor_lists(enumerate_abelian_groups(8));
    CHECK(std::count(upto8.begin(), upto8.end(), std::vector<std::uint32_t>{8}) == 1);
    CHECK(std::count(upto8.begin(), upto8.end(), std::vector<std::uint32_t>{2, 4}) == 1);
    CHECK(std::count(upto8.begin(), upto8.end(), std::vector<std::uint32_t>{2, 2, 2}) == 1);

    CHECK(enumerate_abelian_groups(12).size() == 17);
}

TEST_CASE("exhaustive campaign order <= 6 finds no counterexample") {
    CampaignConfig cfg;
    cfg.max_order = 6;
    cfg.t_min = 1;
    cfg.t_max = 2;
    cfg.threads = 2;
    std::uint64_t seen = 0;
    const auto result = run_campaign(cfg, [&](const CampaignRecord& rec) {
        ++seen;
        CHECK(rec.all_hold());
    });
    CHECK(result.failures == 0);
    CHECK(!result.counterexample.has_value());
    CHECK(result.records == seen);
    CHECK(result.records > 1000);
    CHECK(result.witness_records > 0);  // e.g. Z_4 {0,2} pairs
    // Z_6, A = {0,2,4}, B = {0,1,2,4} forces l = 1 for the t = 2 bound:
    // with l = 0, A'+B' = Z_6 but A +_2 B = {0,2,4}.
    CHECK(result.max_witness_l == 1);
}

TEST_CASE("record streams are identical across thread counts") {
    CampaignConfig cfg;
    cfg.max_order = 5;
    cfg.t_max = 2;
    cfg.threads = 1;
    const std::string one = dump_campaign(cfg);
    cfg.threads = 4;
    const std::string four = dump_campaign(cfg);
    CHECK(one == four);
    CHECK(!one.empty());
}

TEST_CASE("sampled campaigns are seed-deterministic") {
    CampaignConfig cfg;
    cfg.max_order = 8;
    cfg.mode = CampaignConfig::Mode::Sampled;
    cfg.samples_per_group = 40;
    cfg.seed = 42;
    cfg.t_max = 2;
    cfg.threads = 3;
    const std::string a = dump_campaign(cfg);
    const std::string b = dump_campaign(cfg);
    CHECK(a == b);

    cfg.seed = 43;
    CHECK(dump_campaign(cfg) != a);
}

TEST_CASE("tightness harvest includes the Z_5 AP at t = 2") {
    CampaignConfig cfg;
    cfg.max_order = 5;
    cfg.t_max = 2;
    bool found = false;
    run_campaign(cfg, [&](const CampaignRecord& rec) {
        if (rec.t == 2 && rec.tightness_gap == 0 &&
            rec.group_factors == std::vector<std::uint32_t>{5} &&
            rec.A == std::vector<std::uint32_t>{0, 1, 2} && rec.A == rec.B)
            found = true;
    });
    CHECK(found);
}

TEST_CASE("verdicts are translation invariant") {
    std::mt19937_64 rng(53);
    for (auto orders : {std::vector<std::uint32_t>{9}, {2, 4}, {7}}) {
        const Group g = make_group(orders);
        const auto lattice = subgroup_lattice(g);
        for (int it = 0; it < 60; ++it) {
            std::vector<std::uint32_t> ia, ib;
            for (std::uint32_t i = 0; i < g->order(); ++i) {
                if (rng() & 1) ia.push_back(i);
                if (rng() & 1) ib.push_back(i);
            }
            if (ia.empty()) ia.push_back(1 % static_cast<std::uint32_t>(g->order()));
            if (ib.empty()) ib.push_back(0);
            const GSet A = GSet::from_indices(g, ia), B = GSet::from_indices(g, ib);
            const auto u = static_cast<std::uint32_t>(rng() % g->order());
            const auto v = static_cast<std::uint32_t>(rng() % g->order());
            const GSet At = A.translated(u), Bt = B.translated(v);

            auto same = [](const TheoremVerdict& x, const TheoremVerdict& y) {
                return x.holds == y.holds && x.branch == y.branch && x.lhs == y.lhs &&
                       x.rhs == y.rhs;
            };
            CHECK(same(check_kneser(A, B), check_kneser(At, Bt)));
            CHECK(same(check_multiplicity_prop(A, B), check_multiplicity_prop(At, Bt)));
            CHECK(same(check_critical_pair(A, B), check_critical_pair(At, Bt)));
            const auto t = 1 + static_cast<std::uint32_t>(rng() % std::min(A.card(), B.card()));
            if (t <= 3) {
                const auto m1 = check_main_theorem(A, B, t);
                const auto m2 = check_main_theorem(At, Bt, t);
                CHECK(same(m1, m2));
                if (m1.witness && m2.witness) {
                    CHECK(m1.witness->l == m2.witness->l);
                    CHECK(m1.witness->H.order() == m2.witness->H.order());
                    CHECK(m1.witness->rho == m2.witness->rho);
                }
            }
            if (A.card() >= 2 && B.card() >= 2)
                CHECK(same(check_corollary(A, B, &lattice), check_corollary(At, Bt, &lattice)));
        }
    }
}

TEST_CASE("campaign rejects bad configs") {
    CampaignConfig cfg;
    cfg.max_order = 0;
    CHECK_THROWS_AS(run_campaign(cfg, nullptr), std::invalid_argument);
    cfg.max_order = 20;
    CHECK_THROWS_AS(run_campaign(cfg, nullptr), std::domain_error);
    cfg.max_order = 4;
    cfg.t_min = 3;
    cfg.t_max = 2;
    CHECK_THROWS_AS(run_campaign(cfg, nullptr), std::invalid_argument);
}
