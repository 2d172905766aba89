#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "addcomb/rep.hpp"
#include "addcomb/subgroup.hpp"

namespace addcomb {

enum class TheoremId {
    Kneser,
    Pollard,
    Chowla,
    GreenRuzsa,
    Main,
    MainT2,
    Corollary,
    Multiplicity,
    Critical,
    Remark,
    EnergyLemma,
};

enum class Branch {
    Bound,          // the statement's single inequality (or conjunction) held
    Equality,       // Kneser equality case applied
    WeakBound,      // first branch of the main/t=2 disjunction
    Witness,        // structural branch with witness pair
    Coset,          // corollary's coset branch
    NotApplicable,  // hypotheses not satisfied; vacuously true
};

const char* theorem_name(TheoremId id);
const char* branch_name(Branch b);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// Witness for the structural branch: subsets missing at most t-1 elements
/// whose plain sumset already equals the t-representable sums.
struct WitnessData {
    GSet A_prime;
    GSet B_prime;
    std::uint32_t l;  // |A \ A'| + |B \ B'|
    Subgroup H;       // stabilizer of A +_t B
    std::uint64_t rho;
};

struct TheoremVerdict {
    TheoremId theorem = TheoremId::Main;
    bool holds = false;
    Branch branch = Branch::Bound;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::optional<WitnessData> witness;
    std::int64_t elapsed_ns = 0;
};

/// Witness searches enumerate deletions; C(|A|+|B|, t-1) grows too fast
/// beyond this.
inline constexpr std::uint32_t kMaxWitnessSearchT = 4;

/// |A+B| >= |A+H| + |B+H| - |H| >= |A|+|B| - |H| + rho with H the stabilizer
/// of A+B; equality in both when |A+B| <= |A|+|B|-1.
TheoremVerdict check_kneser(const GSet& A, const GSet& B);

/// Over Z_p, p prime: sum_{i<=t} |A +_i B| >= t*min(p, |A|+|B|-t).
/// NOT_APPLICABLE for non-prime order; throws for t outside [1, min(|A|,|B|)].
TheoremVerdict check_pollard_cyclic(const GSet& A, const GSet& B, std::uint32_t t);

/// Cyclic groups: if every difference of distinct elements of B generates,
/// sum_{i<=t} |A +_i B| >= t*min(n, |A|+|B|-t).
TheoremVerdict check_chowla_pollard(const GSet& A, const GSet& B, std::uint32_t t);

/// sum_{i<=t} |A +_i B| >= t*min(|G|, |A|+|B|-D-t) with D the size of a
/// maximum proper subgroup.
TheoremVerdict check_green_ruzsa(const GSet& A, const GSet& B, std::uint32_t t,
                                 const std::vector<Subgroup>* lattice = nullptr);

/// The t-representable disjunction: either the weak bound
/// sum >= t|A|+t|B|-2t^2+1 holds, or a witness pair exists and the
/// stabilizer bound holds.
TheoremVerdict check_main_theorem(const GSet& A, const GSet& B, std::uint32_t t,
                                  std::uint32_t max_witness_t = kMaxWitnessSearchT);

/// The t=2 refinement with weak bound 2|A|+2|B|-4.
TheoremVerdict check_t2_theorem(const GSet& A, const GSet& B);

/// |A+B| + |A +_2 B| >= 2|A|+2|B|-4, or some coset x+H with |H| >= 3 lies
/// inside A +_2 B.
TheoremVerdict check_corollary(const GSet& A, const GSet& B,
                               const std::vector<Subgroup>* lattice = nullptr);

/// (i) |A+B| <= |A|+|B|-k forces every sum to have >= k representations;
/// (ii) |A|+|B| >= |G|+1 forces A+B = G.
TheoremVerdict check_multiplicity_prop(const GSet& A, const GSet& B);

/// If |A+B| = |A|+|B|-1 and A+B is aperiodic, adjoining any b outside B
/// grows the sumset.
TheoremVerdict check_critical_pair(const GSet& A, const GSet& B);

/// When the weak bound fails: A +_t B = A +_{2t} B and |H| >= 2t + rho.
TheoremVerdict check_double_rep_remark(const GSet& A, const GSet& B, std::uint32_t t);

/// First (in deletion enumeration order) pair (A',B') with
/// |A\A'| + |B\B'| <= l_max and A' +_t B' = A'+B' = A +_t B, ignoring the
/// stabilizer bound. Used to probe whether the structural condition is
/// satisfiable at all.
std::optional<WitnessData> find_structural_witness(const GSet& A, const GSet& B,
                                                   std::uint32_t t, std::uint32_t l_max);

/// Recomputes every quantity behind a WITNESS verdict from scratch with the
/// naive kernel and confirms the equalities and the inequality chain.
bool revalidate_witness(const GSet& A, const GSet& B, std::uint32_t t,
                        const TheoremVerdict& verdict);

}  // namespace addcomb
