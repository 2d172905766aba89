#include "addcomb/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace addcomb {

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point t0 = Clock::now();
    std::int64_t ns() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0)
            .count();
    }
};

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void require_nonempty(const GSet& A, const GSet& B, const char* op) {
    if (A.empty() || B.empty())
        throw std::invalid_argument(std::string(op) + ": sets must be nonempty");
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Lexicographic k-subsets of items; fn returns true to stop the enumeration.
template <class F>
bool for_each_combination(const std::vector<std::uint32_t>& items, std::uint32_t k, F&& fn) {
    const std::size_t n = items.size();
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::uint32_t> pick(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
        if (fn(pick)) return true;
        // advance
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (k == 0) return false;
    }
}

GSet remove_all(const GSet& S, const std::vector<std::uint32_t>& del) {
    GSet r = S;
    for (std::uint32_t g : del) r = r.without(g);
    return r;
}

// Shared disjunction checker for the main theorem and its t=2 refinement;
// they differ only in the weak-bound constant.
TheoremVerdict main_disjunction(TheoremId id, const GSet& A, const GSet& B,
                                std::uint32_t t, std::int64_t weak_rhs,
                                std::uint32_t max_witness_t) {
    Stopwatch sw;
    TheoremVerdict v;
    v.theorem = id;

    const RepProfile prof = rep_counts(A, B);
    const std::int64_t sigma = i64(prof.sum_min(t));
    const std::int64_t na = i64(A.card());
    const std::int64_t nb = i64(B.card());

    if (sigma >= weak_rhs) {
        v.holds = true;
        v.branch = Branch::WeakBound;
        v.lhs = sigma;
        v.rhs = weak_rhs;
        v.elapsed_ns = sw.ns();
        return v;
    }

    v.branch = Branch::Witness;
    v.lhs = sigma;
    v.rhs = weak_rhs;

    const GSet AtB = prof.at_least(t);
    if (AtB.empty()) {
        // sum_min equals |A||B| here and the weak bound always holds, so this
        // path is unreachable; treat it as a counterexample rather than guess.
        v.holds = false;
        v.elapsed_ns = sw.ns();
        return v;
    }
    const Subgroup H = stabilizer(AtB);
    if (H.is_trivial()) {
        v.holds = false;
        v.elapsed_ns = sw.ns();
        return v;
    }
    if (t > max_witness_t)
        throw std::domain_error("witness search not supported beyond t = " +
                                std::to_string(max_witness_t));

    const auto as = A.indices();
    const auto bs = B.indices();
    const std::int64_t hsize = i64(H.order());

    // Deletion order: l ascending, within l the split (la, lb) by la
    // ascending, combinations lexicographic. First full witness wins.
    for (std::uint32_t l = 0; l + 1 <= t; ++l) {
        for (std::uint32_t la = 0; la <= l; ++la) {
            const std::uint32_t lb = l - la;
            bool found = for_each_combination(as, la, [&](const std::vector<std::uint32_t>& da) {
                const GSet Ap = remove_all(A, da);
                return for_each_combination(bs, lb, [&](const std::vector<std::uint32_t>& db) {
                    const GSet Bp = remove_all(B, db);
                    const RepProfile pp = rep_counts(Ap, Bp);
                    if (!(pp.at_least(t) == AtB)) return false;
                    if (!(pp.at_least(1) == AtB)) return false;
                    const std::uint64_t rho = holes_rho(Ap, Bp, H);
                    const std::int64_t bound =
                        t * na + t * nb -
                        (i64(t) - i64(l)) * (hsize - i64(rho)) - i64(t) * i64(l);
                    const std::int64_t weaker = t * (na + nb - hsize);
                    if (bound < weaker) return false;  // chain must hold as stated
                    if (sigma < bound) return false;
                    v.holds = true;
                    v.lhs = sigma;
                    v.rhs = bound;
                    v.witness = WitnessData{Ap, Bp, l, H, rho};
                    return true;
                });
            });
            if (found) {
                v.elapsed_ns = sw.ns();
                return v;
            }
        }
    }
    v.holds = false;
    v.elapsed_ns = sw.ns();
    return v;
}

}  // namespace

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::Kneser: return "kneser";
        case TheoremId::Pollard: return "pollard";
        case TheoremId::Chowla: return "chowla";
        case TheoremId::GreenRuzsa: return "green-ruzsa";
        case TheoremId::Main: return "main";
        case TheoremId::MainT2: return "t2";
        case TheoremId::Corollary: return "corollary";
        case TheoremId::Multiplicity: return "mult";
        case TheoremId::Critical: return "critical";
        case TheoremId::Remark: return "remark";
        case TheoremId::EnergyLemma: return "energy";
    }
    return "?";
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Bound: return "BOUND";
        case Branch::Equality: return "EQUALITY";
        case Branch::WeakBound: return "WEAK_BOUND";
        case Branch::Witness: return "WITNESS";
        case Branch::Coset: return "COSET";
        case Branch::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId id :
         {TheoremId::Kneser, TheoremId::Pollard, TheoremId::Chowla, TheoremId::GreenRuzsa,
          TheoremId::Main, TheoremId::MainT2, TheoremId::Corollary, TheoremId::Multiplicity,
          TheoremId::Critical, TheoremId::Remark, TheoremId::EnergyLemma})
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

TheoremVerdict check_kneser(const GSet& A, const GSet& B) {
    Stopwatch sw;
    require_nonempty(A, B, "check_kneser");
    TheoremVerdict v;
    v.theorem = TheoremId::Kneser;

    const GSet S = sumset(A, B);
    const Subgroup H = stabilizer(S);
    const std::uint64_t rho = holes_rho(A, B, H);
    const std::int64_t lhs = i64(S.card());
    const std::int64_t strong =
        i64(sumset(A, H.carrier()).card()) + i64(sumset(B, H.carrier()).card()) -
        i64(H.order());
    const std::int64_t with_holes =
        i64(A.card()) + i64(B.card()) - i64(H.order()) + i64(rho);

    v.lhs = lhs;
    v.rhs = strong;
    v.holds = lhs >= strong && lhs >= with_holes;
    if (lhs <= i64(A.card()) + i64(B.card()) - 1) {
        v.branch = Branch::Equality;
        v.holds = v.holds && lhs == strong && lhs == with_holes;
    } else {
        v.branch = Branch::Bound;
    }
    v.elapsed_ns = sw.ns();
    return v;
}

TheoremVerdict check_pollard_cyclic(const GSet& A, const GSet& B, std::uint32_t t) {
    Stopwatch sw;
    require_nonempty(A, B, "check_pollard_cyclic");
    require_same_group(A, B, "check_pollard_cyclic");
    if (t == 0 || t > std::min(A.card(), B.card()))
        throw std::domain_error("check_pollard_cyclic: t outside [1, min(|A|,|B|)]");

    TheoremVerdict v;
    v.theorem = TheoremId::Pollard;
    const std::uint64_t p = A.group()->order();
    if (!is_prime(p)) {
        v.holds = true;
        v.branch = Branch::NotApplicable;
        v.elapsed_ns = sw.ns();
        return v;
    }
    const std::int64_t sigma = i64(pollard_sum(A, B, t));
    const std::int64_t rhs =
        i64(t) * std::min<std::int64_t>(i64(p), i64(A.card()) + i64(B.card()) - t);
    v.lhs = sigma;
    v.rhs = rhs;
    v.holds = sigma >= rhs;
    v.branch = Branch::Bound;
    v.elapsed_ns = sw.ns();
    return v;
}

TheoremVerdict check_chowla_pollard(const GSet& A, const GSet& B, std::uint32_t t) {
    Stopwatch sw;
    require_nonempty(A, B, "check_chowla_pollard");
    require_same_group(A, B, "check_chowla_pollard");
    if (!A.group()->is_cyclic())
        throw std::invalid_argument("check_chowla_pollard: group must be cyclic");
    if (t == 0 || A.card() < t || B.card() < t)
        throw std::domain_error("check_chowla_pollard: requires |A|,|B| >= t >= 1");

    TheoremVerdict v;
    v.theorem = TheoremId::Chowla;
    const GroupSpec& g = *A.group();
    const std::uint64_t n = g.order();

    const auto bs = B.indices();
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (g.element_order(g.sub(bs[i], bs[j])) != n) {
                v.holds = true;
                v.branch = Branch::NotApplicable;
                v.lhs = i64(g.element_order(g.sub(bs[i], bs[j])));
                v.rhs = i64(n);
                v.elapsed_ns = sw.ns();
                return v;
            }

    const std::int64_t sigma = i64(pollard_sum(A, B, t));
    const std::int64_t rhs =
        i64(t) * std::min<std::int64_t>(i64(n), i64(A.card()) + i64(B.card()) - t);
    v.lhs = sigma;
    v.rhs = rhs;
    v.holds = sigma >= rhs;
    v.branch = Branch::Bound;
    v.elapsed_ns = sw.ns();
    return v;
}

TheoremVerdict check_green_ruzsa(const GSet& A, const GSet& B, std::uint32_t t,
                                 const std::vector<Subgroup>* lattice) {
    Stopwatch sw;
    require_nonempty(A, B, "check_green_ruzsa");
    require_same_group(A, B, "check_green_ruzsa");
    if (t == 0) throw std::invalid_argument("check_green_ruzsa: t must be >= 1");

    TheoremVerdict v;
    v.theorem = TheoremId::GreenRuzsa;
    if (t > std::min(A.card(), B.card())) {
        v.holds = true;
        v.branch = Branch::NotApplicable;
        v.elapsed_ns = sw.ns();
        return v;
    }
    std::uint64_t D = 0;
    if (lattice) {
        for (const auto& h : *lattice)
            if (h.order() < A.group()->order()) D = std::max(D, h.order());
    } else {
        D = max_proper_subgroup_size(A.group());
    }
    const std::int64_t sigma = i64(pollard_sum(A, B, t));
    const std::int64_t rhs =
        i64(t) * std::min<std::int64_t>(i64(A.group()->order()),
                                        i64(A.card()) + i64(B.card()) - i64(D) - t);
    v.lhs = sigma;
    v.rhs = rhs;
    v.holds = sigma >= rhs;
    v.branch = Branch::Bound;
    v.elapsed_ns = sw.ns();
    return v;
}

TheoremVerdict check_main_theorem(const GSet& A, const GSet& B, std::uint32_t t,
                                  std::uint32_t max_witness_t) {
    require_nonempty(A, B, "check_main_theorem");
    require_same_group(A, B, "check_main_theorem");
    if (t == 0) throw std::invalid_argument("check_main_theorem: t must be >= 1");
    if (t > std::min(A.card(), B.card()))
        throw std::domain_error("check_main_theorem: requires t <= min(|A|,|B|)");
    const std::int64_t weak_rhs = i64(t) * i64(A.card()) + i64(t) * i64(B.card()) -
                                  2 * i64(t) * i64(t) + 1;
    return main_disjunction(TheoremId::Main, A, B, t, weak_rhs, max_witness_t);
}

TheoremVerdict check_t2_theorem(const GSet& A, const GSet& B) {
    require_nonempty(A, B, "check_t2_theorem");
    require_same_group(A, B, "check_t2_theorem");
    if (A.card() < 2 || B.card() < 2)
        throw std::domain_error("check_t2_theorem: requires |A|,|B| >= 2");
    const std::int64_t weak_rhs = 2 * i64(A.card()) + 2 * i64(B.card()) - 4;
    return main_disjunction(TheoremId::MainT2, A, B, 2, weak_rhs, kMaxWitnessSearchT);
}

TheoremVerdict check_corollary(const GSet& A, const GSet& B,
                               const std::vector<Subgroup>* lattice) {
    Stopwatch sw;
    require_nonempty(A, B, "check_corollary");
    require_same_group(A, B, "check_corollary");
    if (A.card() < 2 || B.card() < 2)
        throw std::domain_error("check_corollary: requires |A|,|B| >= 2");

    TheoremVerdict v;
    v.theorem = TheoremId::Corollary;
    const RepProfile prof = rep_counts(A, B);
    const std::int64_t sigma2 = i64(prof.sum_min(2));
    const std::int64_t rhs = 2 * i64(A.card()) + 2 * i64(B.card()) - 4;
    if (sigma2 >= rhs) {
        v.holds = true;
        v.branch = Branch::WeakBound;
        v.lhs = sigma2;
        v.rhs = rhs;
        v.elapsed_ns = sw.ns();
        return v;
    }

    const GSet A2B = prof.at_least(2);
    std::vector<Subgroup> local;
    if (!lattice) {
        local = subgroup_lattice(A.group());
        lattice = &local;
    }
    for (const auto& h : *lattice) {
        if (h.order() < 3) continue;
        std::vector<bool> seen(A.group()->order(), false);
        for (std::uint32_t rep = 0; rep < A.group()->order(); ++rep) {
            if (seen[rep]) continue;
            const GSet coset = h.coset(rep);
            coset.for_each([&](std::uint32_t x) { seen[x] = true; });
            if (coset.subset_of(A2B)) {
                v.holds = true;
                v.branch = Branch::Coset;
                v.lhs = i64(h.order());
                v.rhs = 3;
                v.elapsed_ns = sw.ns();
                return v;
            }
        }
    }
    v.holds = false;
    v.branch = Branch::Coset;
    v.lhs = sigma2;
    v.rhs = rhs;
    v.elapsed_ns = sw.ns();
    return v;
}

TheoremVerdict check_multiplicity_prop(const GSet& A, const GSet& B) {
    Stopwatch sw;
    require_nonempty(A, B, "check_multiplicity_prop");
    require_same_group(A, B, "check_multiplicity_prop");

    TheoremVerdict v;
    v.theorem = TheoremId::Multiplicity;
    const RepProfile prof = rep_counts(A, B);
    const GSet AB = prof.at_least(1);
    const std::int64_t k = i64(A.card()) + i64(B.card()) - i64(AB.card());

    std::uint32_t min_count = std::numeric_limits<std::uint32_t>::max();
    AB.for_each([&](std::uint32_t g) { min_count = std::min(min_count, prof.counts[g]); });

    v.holds = true;
    if (k >= 1) v.holds = v.holds && i64(min_count) >= k;
    if (i64(A.card()) + i64(B.card()) >= i64(A.group()->order()) + 1)
        v.holds = v.holds && AB.is_full();
    v.branch = Branch::Bound;
    v.lhs = i64(min_count);
    v.rhs = k;
    v.elapsed_ns = sw.ns();
    return v;
}

TheoremVerdict check_critical_pair(const GSet& A, const GSet& B) {
    Stopwatch sw;
    require_nonempty(A, B, "check_critical_pair");
    require_same_group(A, B, "check_critical_pair");

    TheoremVerdict v;
    v.theorem = TheoremId::Critical;
    const GSet S = sumset(A, B);
    if (i64(S.card()) != i64(A.card()) + i64(B.card()) - 1 ||
        !stabilizer(S).is_trivial()) {
        v.holds = true;
        v.branch = Branch::NotApplicable;
        v.elapsed_ns = sw.ns();
        return v;
    }
    std::int64_t min_grown = std::numeric_limits<std::int64_t>::max();
    B.complement().for_each([&](std::uint32_t b) {
        min_grown = std::min(min_grown, i64(sumset(A, B.with(b)).card()));
    });
    if (min_grown == std::numeric_limits<std::int64_t>::max())
        min_grown = i64(S.card()) + 1;  // B = G, vacuously true
    v.branch = Branch::Bound;
    v.lhs = min_grown;
    v.rhs = i64(S.card()) + 1;
    v.holds = v.lhs >= v.rhs;
    v.elapsed_ns = sw.ns();
    return v;
}

TheoremVerdict check_double_rep_remark(const GSet& A, const GSet& B, std::uint32_t t) {
    Stopwatch sw;
    require_nonempty(A, B, "check_double_rep_remark");
    require_same_group(A, B, "check_double_rep_remark");
    if (t == 0) throw std::invalid_argument("check_double_rep_remark: t must be >= 1");
    if (t > std::min(A.card(), B.card()))
        throw std::domain_error("check_double_rep_remark: requires t <= min(|A|,|B|)");

    TheoremVerdict v;
    v.theorem = TheoremId::Remark;
    const RepProfile prof = rep_counts(A, B);
    const std::int64_t sigma = i64(prof.sum_min(t));
    const std::int64_t weak_rhs =
        i64(t) * i64(A.card()) + i64(t) * i64(B.card()) - 2 * i64(t) * i64(t) + 1;
    if (sigma >= weak_rhs) {
        v.holds = true;
        v.branch = Branch::NotApplicable;
        v.lhs = sigma;
        v.rhs = weak_rhs;
        v.elapsed_ns = sw.ns();
        return v;
    }

    const TheoremVerdict main = check_main_theorem(A, B, t);
    if (!main.holds || !main.witness) {
        v.holds = false;
        v.branch = Branch::Bound;
        v.lhs = sigma;
        v.rhs = weak_rhs;
        v.elapsed_ns = sw.ns();
        return v;
    }
    const bool same_sets = prof.at_least(t) == prof.at_least(2 * t);
    v.branch = Branch::Bound;
    v.lhs = i64(main.witness->H.order());
    v.rhs = 2 * i64(t) + i64(main.witness->rho);
    v.holds = same_sets && v.lhs >= v.rhs;
    v.witness = main.witness;
    v.elapsed_ns = sw.ns();
    return v;
}

std::optional<WitnessData> find_structural_witness(const GSet& A, const GSet& B,
                                                   std::uint32_t t, std::uint32_t l_max) {
    require_nonempty(A, B, "find_structural_witness");
    require_same_group(A, B, "find_structural_witness");
    if (t == 0) throw std::invalid_argument("find_structural_witness: t must be >= 1");

    const RepProfile prof = rep_counts(A, B);
    const GSet AtB = prof.at_least(t);
    const Subgroup H = stabilizer(AtB);
    const auto as = A.indices();
    const auto bs = B.indices();

    std::optional<WitnessData> result;
    for (std::uint32_t l = 0; l <= l_max && !result; ++l) {
        for (std::uint32_t la = 0; la <= l && !result; ++la) {
            const std::uint32_t lb = l - la;
            if (la >= A.card() || lb >= B.card()) continue;  // keep A', B' nonempty
            for_each_combination(as, la, [&](const std::vector<std::uint32_t>& da) {
                const GSet Ap = remove_all(A, da);
                return for_each_combination(bs, lb, [&](const std::vector<std::uint32_t>& db) {
                    const GSet Bp = remove_all(B, db);
                    const RepProfile pp = rep_counts(Ap, Bp);
                    if (!(pp.at_least(t) == AtB) || !(pp.at_least(1) == AtB)) return false;
                    result = WitnessData{Ap, Bp, l, H, holes_rho(Ap, Bp, H)};
                    return true;
                });
            });
        }
    }
    return result;
}

bool revalidate_witness(const GSet& A, const GSet& B, std::uint32_t t,
                        const TheoremVerdict& verdict) {
    if (verdict.branch != Branch::Witness || !verdict.witness) return false;
    const WitnessData& w = *verdict.witness;
    if (!w.A_prime.subset_of(A) || !w.B_prime.subset_of(B)) return false;
    const std::uint64_t l =
        (A.card() - w.A_prime.card()) + (B.card() - w.B_prime.card());
    if (l != w.l || l + 1 > t) return false;

    const RepProfile prof = rep_counts(A, B, RepKernel::Naive);
    const RepProfile pp = rep_counts(w.A_prime, w.B_prime, RepKernel::Naive);
    const GSet AtB = prof.at_least(t);
    if (!(pp.at_least(t) == AtB) || !(pp.at_least(1) == AtB)) return false;

    const Subgroup H = stabilizer(AtB);
    if (H.is_trivial() || !(H == w.H)) return false;
    if (holes_rho(w.A_prime, w.B_prime, H) != w.rho) return false;

    const std::int64_t sigma = i64(prof.sum_min(t));
    const std::int64_t strong =
        i64(t) * i64(A.card()) + i64(t) * i64(B.card()) -
        (i64(t) - i64(l)) * (i64(H.order()) - i64(w.rho)) - i64(t) * i64(l);
    const std::int64_t weaker =
        i64(t) * (i64(A.card()) + i64(B.card()) - i64(H.order()));
    return sigma >= strong && strong >= weaker && sigma == verdict.lhs &&
           strong == verdict.rhs;
}

}  // namespace addcomb
