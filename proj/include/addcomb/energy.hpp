#pragma once

#include <cstdint>

#include "addcomb/rep.hpp"
#include "addcomb/theorems.hpp"

namespace addcomb {

/// Evaluation record for the additive-energy lemma on a pair (A, B).
struct EnergyReport {
    Group group;
    std::uint64_t energy = 0;        // E(A,B)
    GSet T;                          // exceptional set for the (A,-B) pairing
    std::uint32_t k = 0;
    std::uint32_t t = 0;
    std::uint64_t lower_bound = 0;   // floor of t*min(...), conservative
    std::uint64_t upper_bound_rhs = 0;  // |T||B|(|B|-k) + (k-1)|A||B|, bounds 2E
};

/// Minimal T with r_{A,-B}(x) <= k off T, i.e. { x : |(x+B) n A| > k }.
GSet derive_exceptional_set(const GSet& A, const GSet& B, std::uint32_t k);

/// E(A,B) = E(A,-B): the energy-graph edge bijection, checked by direct
/// evaluation of both sides.
TheoremVerdict check_energy_bijection(const GSet& A, const GSet& B);

/// 2*E(A,B) <= |T||B|(|B|-k) + (k-1)|A||B|. Hypothesis failures (|A| >= |B|
/// >= k, |A| >= |T|, T covering the minimal exceptional set) give
/// NOT_APPLICABLE. Precomputed profiles for (A,B) and (A,-B) may be passed
/// to avoid recomputation in sweeps.
TheoremVerdict check_energy_upper_bound(const GSet& A, const GSet& B, const GSet& T,
                                        std::uint32_t k,
                                        const RepProfile* sum_profile = nullptr,
                                        const RepProfile* diff_profile = nullptr);

/// floor of t*min{ |A||B|/(t+sqrt(t(t-1))), |A|^2|B|/(|T|(|B|-k)+k|A|) },
/// computed in exact integer arithmetic (never exceeds the real bound).
std::uint64_t energy_lower_bound(const GSet& A, const GSet& B, const GSet& T,
                                 std::uint32_t k, std::uint32_t t);

/// The lemma's conclusion with T auto-derived: sum_{i<=t} |A +_i B| is at
/// least the two-term bound and its weaker min{|A||B|/2, ...} form.
TheoremVerdict check_energy_lemma(const GSet& A, const GSet& B, std::uint32_t k,
                                  std::uint32_t t,
                                  const RepProfile* sum_profile = nullptr,
                                  const RepProfile* diff_profile = nullptr);

EnergyReport energy_report(const GSet& A, const GSet& B, std::uint32_t k,
                           std::uint32_t t);

namespace detail {
using u128 = unsigned __int128;
std::uint64_t isqrt_u128(u128 x);
/// sigma >= t*M/(t + sqrt(t(t-1))), decided exactly by squaring.
bool meets_sqrt_term(std::uint64_t sigma, std::uint64_t M, std::uint32_t t);
/// floor(M * (t - sqrt(t(t-1)))) = floor of t*M/(t + sqrt(t(t-1))).
std::uint64_t floor_sqrt_term(std::uint64_t M, std::uint32_t t);
}  // namespace detail

}  // namespace addcomb
