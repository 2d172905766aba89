#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace addcomb {

/// A finite abelian group presented as a product of cyclic factors
/// Z_{n_1} x ... x Z_{n_k}. Elements are flat indices in [0, order())
/// under mixed-radix flattening with the most significant factor first:
/// index(a) = sum_j a_j * prod_{m>j} n_m.
class GroupSpec {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

    explicit GroupSpec(std::vector<std::uint32_t> orders,
                       std::uint64_t max_order = kDefaultMaxOrder);

    std::uint64_t order() const noexcept { return order_; }
    const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    const std::vector<std::uint32_t>& strides() const noexcept { return strides_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t zero() const noexcept { return 0; }

    std::uint32_t flatten(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> coords(std::uint32_t index) const;

    /// Additive order of the element with the given flat index.
    std::uint64_t element_order(std::uint32_t a) const;

    /// Canonical invariant factors d_1 | d_2 | ... (ascending divisibility;
    /// {1} for the trivial group). Isomorphic presentations map to the same
    /// list.
    std::vector<std::uint32_t> invariant_factors() const;
    bool is_cyclic() const;

    bool operator==(const GroupSpec& other) const noexcept {
        return orders_ == other.orders_;
    }

    std::string describe() const;  // e.g. "Z4 x Z2"

private:
    std::vector<std::uint32_t> orders_;
    std::vector<std::uint32_t> strides_;  // strides_[j] = prod_{m>j} n_m
    std::uint64_t order_;
};

using Group = std::shared_ptr<const GroupSpec>;

/// Builds a group from a list of cyclic factor orders (each >= 1).
/// Throws std::invalid_argument on an empty list and std::domain_error when
/// the product exceeds max_order.
Group make_group(std::vector<std::uint32_t> orders,
                 std::uint64_t max_order = GroupSpec::kDefaultMaxOrder);

inline bool same_group(const Group& a, const Group& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace addcomb
