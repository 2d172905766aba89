#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "addcomb/theorems.hpp"

namespace addcomb {

/// One representative per isomorphism class of abelian groups for every
/// order <= max_order, in canonical invariant-factor presentation, ordered
/// by (order, factor list).
std::vector<Group> enumerate_abelian_groups(std::uint32_t max_order);

struct CampaignConfig {
    std::uint32_t max_order = 10;
    std::uint32_t t_min = 1;
    std::uint32_t t_max = 3;
    enum class Mode { Exhaustive, Sampled } mode = Mode::Exhaustive;
    std::uint64_t samples_per_group = 1000;  // Sampled mode only
    std::uint64_t seed = 0;
    std::vector<TheoremId> checkers;  // empty = default checker set
    unsigned threads = 1;
    bool stop_on_failure = true;

    /// Exhaustive pair spaces grow as 4^(order-1).
    static constexpr std::uint32_t kMaxExhaustiveOrder = 12;
};

struct CampaignRecord {
    std::vector<std::uint32_t> group_factors;  // canonical invariant factors
    std::vector<std::uint32_t> A, B;
    std::uint32_t t = 1;
    std::vector<TheoremVerdict> verdicts;
    /// sum_{i<=t} |A +_i B| minus the weak bound for this t (the sharper
    /// 2|A|+2|B|-4 constant when t = 2).
    std::int64_t tightness_gap = 0;
    std::int64_t elapsed_ns = 0;

    bool all_hold() const;
};

struct CampaignResult {
    std::uint64_t records = 0;
    std::uint64_t failures = 0;
    std::uint64_t witness_records = 0;
    std::uint32_t max_witness_l = 0;  // largest deletion count seen in a witness
    std::optional<CampaignRecord> counterexample;  // first in canonical order
};

/// Runs the configured verification campaign, invoking sink for every record
/// in canonical enumeration order regardless of thread count. Exhaustive
/// mode enumerates ordered pairs of subsets with 0 in A and 0 in B
/// (translation normalization); sampled mode draws seeded uniform nonempty
/// subset pairs. Aborts at the first failing record when stop_on_failure.
CampaignResult run_campaign(const CampaignConfig& config,
                            const std::function<void(const CampaignRecord&)>& sink);

namespace detail {
/// splitmix64 stream; deterministic across platforms and threads.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t group_idx, std::uint64_t sample_idx);
}  // namespace detail

}  // namespace addcomb
