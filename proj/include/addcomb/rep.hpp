#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "addcomb/gset.hpp"

namespace addcomb {

/// Backend selection for rep_counts. Auto picks by a cost crossover between
/// the naive pair loop and the word-parallel shift-and-accumulate kernel;
/// the transform backend is chosen automatically only for order >= 2^14.
enum class RepKernel { Auto, Naive, Bitset, Transform };

bool transform_kernel_available();

/// The representation profile of a pair (A, B): counts[g] is the number of
/// ways to write g = a + b with a in A, b in B.
struct RepProfile {
    Group group;
    std::vector<std::uint32_t> counts;
    std::uint64_t total = 0;      // sum of counts = |A| * |B|
    std::uint32_t max_count = 0;

    /// { g : counts[g] >= i }, the i-representable sums. Requires i >= 1.
    GSet at_least(std::uint32_t i) const;
    /// { g : counts[g] > k }.
    GSet above(std::uint32_t k) const;
    /// sum_g min(counts[g], t)  =  sum_{i=1..t} |A +_i B|. Requires t >= 1.
    std::uint64_t sum_min(std::uint32_t t) const;
};

RepProfile rep_counts(const GSet& A, const GSet& B,
                      RepKernel kernel = RepKernel::Auto);

/// { a + b : a in A, b in B }. Throws on group mismatch or empty input.
GSet sumset(const GSet& A, const GSet& B);

/// The set of sums with at least i representations. Requires i >= 1.
GSet i_representable(const GSet& A, const GSet& B, std::uint32_t i,
                     RepKernel kernel = RepKernel::Auto);

/// sum_{i=1..t} |A +_i B|. Requires t >= 1.
std::uint64_t pollard_sum(const GSet& A, const GSet& B, std::uint32_t t,
                          RepKernel kernel = RepKernel::Auto);

/// Dyson transform at x: returns (A(x), B(x)) with A(x) = (x+B) u A and
/// B(x) = (x+B) n A. Preserves |A|+|B| and contracts representability.
std::pair<GSet, GSet> dyson_transform(const GSet& A, const GSet& B,
                                      std::uint32_t x);

/// True iff all nonzero differences of B are distinct, i.e. the only g with
/// r_{B,-B}(g) >= 2 is g = 0. Requires B nonempty.
bool is_sidon(const GSet& B);

/// Reduced additive energy: sum over c of C(r_{A,B}(c), 2).
std::uint64_t additive_energy(const GSet& A, const GSet& B);
std::uint64_t additive_energy(const RepProfile& profile);

}  // namespace addcomb
