#include "addcomb/energy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace addcomb {

namespace detail {

std::uint64_t isqrt_u128(u128 x) {
    if (x == 0) return 0;
    // long double gives ~64 mantissa bits on x86; correct the estimate.
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && static_cast<u128>(r) * r > x) --r;
    while (r < UINT64_MAX && static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

bool meets_sqrt_term(std::uint64_t sigma, std::uint64_t M, std::uint32_t t) {
    // sigma*(t + sqrt(q)) >= t*M  with q = t(t-1). Move the rational part
    // across and square; all quantities fit 128 bits at the configured
    // maximum group order.
    const u128 q = static_cast<u128>(t) * (t - 1);
    const u128 tm = static_cast<u128>(t) * M;
    const u128 ts = static_cast<u128>(t) * sigma;
    if (ts >= tm) return true;
    const u128 p = tm - ts;  // need sigma*sqrt(q) >= p
    return static_cast<u128>(sigma) * sigma * q >= p * p;
}

std::uint64_t floor_sqrt_term(std::uint64_t M, std::uint32_t t) {
    // t*M/(t+sqrt(q)) = M*(t - sqrt(q)), so the floor is M*t - ceil(M*sqrt(q)).
    const u128 q = static_cast<u128>(t) * (t - 1);
    const u128 x = static_cast<u128>(M) * M * q;
    const std::uint64_t s = isqrt_u128(x);
    const u128 ceil_ms = (static_cast<u128>(s) * s == x) ? s : static_cast<u128>(s) + 1;
    const u128 mt = static_cast<u128>(M) * t;
    return static_cast<std::uint64_t>(mt > ceil_ms ? mt - ceil_ms : 0);
}

}  // namespace detail

namespace {

using detail::u128;
using Clock = std::chrono::steady_clock;

std::int64_t ns_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
}

RepProfile diff_prof_of(const GSet& A, const GSet& B) {
    return rep_counts(A, B.negated());
}

}  // namespace

GSet derive_exceptional_set(const GSet& A, const GSet& B, std::uint32_t k) {
    require_same_group(A, B, "derive_exceptional_set");
    if (k == 0) throw std::invalid_argument("derive_exceptional_set: k must be >= 1");
    return diff_prof_of(A, B).above(k);
}

TheoremVerdict check_energy_bijection(const GSet& A, const GSet& B) {
    const auto t0 = Clock::now();
    require_same_group(A, B, "check_energy_bijection");
    TheoremVerdict v;
    v.theorem = TheoremId::EnergyLemma;
    v.branch = Branch::Bound;
    v.lhs = static_cast<std::int64_t>(additive_energy(A, B));
    v.rhs = static_cast<std::int64_t>(additive_energy(A, B.negated()));
    v.holds = v.lhs == v.rhs;
    v.elapsed_ns = ns_since(t0);
    return v;
}

TheoremVerdict check_energy_upper_bound(const GSet& A, const GSet& B, const GSet& T,
                                        std::uint32_t k,
                                        const RepProfile* sum_profile,
                                        const RepProfile* diff_profile) {
    const auto t0 = Clock::now();
    require_same_group(A, B, "check_energy_upper_bound");
    if (k == 0) throw std::invalid_argument("check_energy_upper_bound: k must be >= 1");

    TheoremVerdict v;
    v.theorem = TheoremId::EnergyLemma;

    const std::uint64_t na = A.card(), nb = B.card(), nt = T.card();
    bool applicable = na >= nb && nb >= k && na >= nt;
    if (applicable) {
        const GSet minimal =
            diff_profile ? diff_profile->above(k) : derive_exceptional_set(A, B, k);
        applicable = minimal.subset_of(T);
    }
    if (!applicable) {
        v.holds = true;
        v.branch = Branch::NotApplicable;
        v.elapsed_ns = ns_since(t0);
        return v;
    }

    const std::uint64_t energy =
        sum_profile ? additive_energy(*sum_profile) : additive_energy(A, B);
    const std::uint64_t rhs = nt * nb * (nb - k) + std::uint64_t{k - 1} * na * nb;
    v.lhs = static_cast<std::int64_t>(2 * energy);
    v.rhs = static_cast<std::int64_t>(rhs);
    v.holds = 2 * energy <= rhs;
    v.branch = Branch::Bound;
    v.elapsed_ns = ns_since(t0);
    return v;
}

std::uint64_t energy_lower_bound(const GSet& A, const GSet& B, const GSet& T,
                                 std::uint32_t k, std::uint32_t t) {
    require_same_group(A, B, "energy_lower_bound");
    if (k == 0 || t == 0)
        throw std::invalid_argument("energy_lower_bound: k and t must be >= 1");
    const std::uint64_t na = A.card(), nb = B.card(), nt = T.card();
    if (!(na >= nb && nb >= k && na >= nt))
        throw std::domain_error("energy_lower_bound: requires |A| >= |B| >= k and |A| >= |T|");

    const std::uint64_t M = na * nb;
    const std::uint64_t D = nt * (nb - k) + std::uint64_t{k} * na;
    const std::uint64_t term1 = detail::floor_sqrt_term(M, t);
    const u128 term2 = static_cast<u128>(t) * na * na * nb / D;
    return std::min<std::uint64_t>(term1, static_cast<std::uint64_t>(term2));
}

TheoremVerdict check_energy_lemma(const GSet& A, const GSet& B, std::uint32_t k,
                                  std::uint32_t t, const RepProfile* sum_profile,
                                  const RepProfile* diff_profile) {
    const auto t0 = Clock::now();
    require_same_group(A, B, "check_energy_lemma");
    if (k == 0 || t == 0)
        throw std::invalid_argument("check_energy_lemma: k and t must be >= 1");

    TheoremVerdict v;
    v.theorem = TheoremId::EnergyLemma;

    const std::uint64_t na = A.card(), nb = B.card();
    if (!(na >= nb && nb >= k)) {
        v.holds = true;
        v.branch = Branch::NotApplicable;
        v.elapsed_ns = ns_since(t0);
        return v;
    }
    const GSet T = diff_profile ? diff_profile->above(k) : derive_exceptional_set(A, B, k);
    if (T.card() > na) {
        v.holds = true;
        v.branch = Branch::NotApplicable;
        v.elapsed_ns = ns_since(t0);
        return v;
    }

    const std::uint64_t sigma =
        sum_profile ? sum_profile->sum_min(t) : pollard_sum(A, B, t);
    const std::uint64_t M = na * nb;
    const std::uint64_t D = T.card() * (nb - k) + std::uint64_t{k} * na;
    const u128 t_a2b = static_cast<u128>(t) * na * na * nb;
    const bool ratio_ok = static_cast<u128>(sigma) * D >= t_a2b;

    const bool two_term = detail::meets_sqrt_term(sigma, M, t) || ratio_ok;
    const bool weaker = (2 * sigma >= M) || ratio_ok;

    v.holds = two_term && weaker;
    v.branch = Branch::Bound;
    v.lhs = static_cast<std::int64_t>(sigma);
    v.rhs = static_cast<std::int64_t>(energy_lower_bound(A, B, T, k, t));
    v.elapsed_ns = ns_since(t0);
    return v;
}

EnergyReport energy_report(const GSet& A, const GSet& B, std::uint32_t k,
                           std::uint32_t t) {
    require_same_group(A, B, "energy_report");
    if (k == 0 || t == 0)
        throw std::invalid_argument("energy_report: k and t must be >= 1");
    const std::uint64_t na = A.card(), nb = B.card();
    if (!(na >= nb && nb >= k))
        throw std::domain_error("energy_report: requires |A| >= |B| >= k >= 1");

    EnergyReport r{A.group(), additive_energy(A, B),
                   derive_exceptional_set(A, B, k), k, t, 0, 0};
    r.upper_bound_rhs =
        r.T.card() * nb * (nb - k) + std::uint64_t{k - 1} * na * nb;
    r.lower_bound = r.T.card() <= na ? energy_lower_bound(A, B, r.T, k, t) : 0;
    return r;
}

}  // namespace addcomb
