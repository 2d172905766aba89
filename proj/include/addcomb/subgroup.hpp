#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "addcomb/gset.hpp"

namespace addcomb {

/// A subgroup of a finite abelian group, held as its carrier set.
class Subgroup {
public:
    /// Validates that carrier contains 0 and is closed under addition;
    /// throws std::invalid_argument otherwise.
    static Subgroup from_carrier(GSet carrier);
    static Subgroup trivial(const Group& g);
    static Subgroup full(const Group& g);

    const GSet& carrier() const noexcept { return carrier_; }
    const Group& group() const noexcept { return carrier_.group(); }
    std::uint64_t order() const noexcept { return carrier_.card(); }
    bool is_trivial() const noexcept { return order() == 1; }
    bool is_full() const noexcept { return carrier_.is_full(); }
    bool contains(std::uint32_t g) const { return carrier_.contains(g); }

    /// The coset rep + H.
    GSet coset(std::uint32_t rep) const { return carrier_.translated(rep); }

    bool operator==(const Subgroup& other) const { return carrier_ == other.carrier_; }

private:
    struct Trusted {};
    Subgroup(Trusted, GSet carrier) : carrier_(std::move(carrier)) {}
    GSet carrier_;

    friend Subgroup stabilizer(const GSet&);
    friend Subgroup subgroup_generated_by(const Group&, std::span<const std::uint32_t>);
    friend std::vector<Subgroup> subgroup_lattice(const Group&, std::uint64_t);
};

/// H(S) = { x : x + S = S }. For the empty set this is the full group
/// (vacuous-truth convention).
Subgroup stabilizer(const GSet& S);

/// The smallest subgroup containing the given generators.
Subgroup subgroup_generated_by(const Group& g, std::span<const std::uint32_t> generators);

/// All subgroups of g, computed as the closure of joins starting from the
/// cyclic subgroups, iterated to fixpoint. Sorted by (order, carrier).
/// Throws std::domain_error when the group order exceeds max_order.
std::vector<Subgroup> subgroup_lattice(const Group& g, std::uint64_t max_order = 256);

/// Size of a maximum-cardinality proper subgroup (0 for the trivial group).
std::uint64_t max_proper_subgroup_size(const Group& g, std::uint64_t max_order = 256);

/// rho = |A+H| - |A| + |B+H| - |B|, the number of H-holes in A and B.
std::uint64_t holes_rho(const GSet& A, const GSet& B, const Subgroup& H);

/// S is H-periodic iff it is a union of H-cosets, i.e. S + H = S.
bool is_periodic(const GSet& S, const Subgroup& H);

}  // namespace addcomb
