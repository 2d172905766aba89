#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addcomb/gset.hpp"
#include "addcomb/subgroup.hpp"

namespace addcomb {

/// A constructed extremal instance with its closed-form defect prediction:
/// sum_{i<=t} |A +_i B| - t|A| - t|B| + t^2 should equal predicted_defect.
struct ExampleInstance {
    int family;  // 1 or 2
    Group G;
    GSet A;
    GSet B;
    Subgroup periodizer;  // H (family 1) or L (family 2)
    std::uint32_t t;
    std::uint32_t x;
    std::uint32_t s;  // |phi_H(A)|
    std::uint32_t r;  // |phi_H(B)| resp. |phi_H(B')|
    std::int64_t predicted_defect;
};

/// Family 1: H-periodic A and B whose quotient images are arithmetic
/// progressions of the same difference d; G is synthesized as
/// Z_H_order x Z_quotient_order with H the first factor. Defect x^2 - x|H|.
/// Throws std::invalid_argument naming the violated constraint.
ExampleInstance build_example1(std::uint32_t H_order, std::uint32_t quotient_order,
                               std::uint32_t d, std::uint32_t s, std::uint32_t r,
                               std::uint32_t x);

/// Family 2: a chain 0 < L < H < G with G/H cyclic; A = (G \ H) u L and B
/// built from an H-periodic progression with one end coset 0. Defect
/// x^2 - x|L|.
ExampleInstance build_example2(const Group& G, const Subgroup& H, const Subgroup& L,
                               std::uint32_t r, std::uint32_t x);

/// sum_{i<=t} |A +_i B| - t|A| - t|B| + t^2, brute-forced from the profile.
std::int64_t measured_defect(const ExampleInstance& inst);

struct Example1Params {
    std::uint32_t H_order, quotient_order, d, s, r, x;
    std::uint32_t t() const { return (r - 1) * H_order + x; }
};

/// All admissible family-1 parameter tuples within the given caps,
/// optionally filtered to a single t value.
std::vector<Example1Params> enumerate_example1_params(
    std::uint32_t max_H, std::uint32_t max_quotient,
    std::optional<std::uint32_t> t_filter = std::nullopt);

struct Example2Params {
    Group G;
    Subgroup H;
    Subgroup L;
    std::uint32_t r, x;
    std::uint32_t t() const { return (r - 1) * static_cast<std::uint32_t>(H.order()) + x; }
};

/// All admissible family-2 chains over every abelian group of order
/// <= max_group_order.
std::vector<Example2Params> enumerate_example2_params(
    std::uint32_t max_group_order,
    std::optional<std::uint32_t> t_filter = std::nullopt);

}  // namespace addcomb
