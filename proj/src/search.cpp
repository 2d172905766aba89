#include "addcomb/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "addcomb/energy.hpp"

namespace addcomb {

namespace detail {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t group_idx,
                       std::uint64_t sample_idx) {
    std::uint64_t s = seed ^ 0xA24BAED4963EE407ull;
    s = s * 0x9E3779B97F4A7C15ull + group_idx + 1;
    s = s * 0x9E3779B97F4A7C15ull + sample_idx + 1;
    return s;
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

// Partitions of e (parts descending), lexicographically largest-first.
void partitions_rec(std::uint32_t e, std::uint32_t max_part,
                    std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t p = std::min(e, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(e - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t e) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    partitions_rec(e, e, cur, out);
    return out;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) {
    std::uint32_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace

std::vector<Group> enumerate_abelian_groups(std::uint32_t max_order) {
    if (max_order == 0) throw std::invalid_argument("enumerate_abelian_groups: max_order >= 1");
    std::vector<Group> out;
    for (std::uint32_t n = 1; n <= max_order; ++n) {
        // factorize
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pe;
        std::uint32_t m = n;
        for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p) {
            if (m % p) continue;
            std::uint32_t e = 0;
            while (m % p == 0) { m /= p; ++e; }
            pe.emplace_back(p, e);
        }
        if (m > 1) pe.emplace_back(m, 1);

        // one partition choice per prime; combine into invariant factors
        std::vector<std::vector<std::vector<std::uint32_t>>> choices;
        for (auto& [p, e] : pe) choices.push_back(partitions(e));

        std::vector<std::vector<std::uint32_t>> classes;
        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            std::size_t width = 1;
            for (std::size_t i = 0; i < choices.size(); ++i)
                width = std::max(width, choices[i][pick[i]].size());
            std::vector<std::uint32_t> factors(width, 1);
            for (std::size_t i = 0; i < choices.size(); ++i) {
                const auto& parts = choices[i][pick[i]];  // descending
                for (std::size_t j = 0; j < parts.size(); ++j)
                    factors[j] *= ipow(pe[i].first, parts[j]);
            }
            std::reverse(factors.begin(), factors.end());  // ascending divisibility
            classes.push_back(std::move(factors));

            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
        std::sort(classes.begin(), classes.end(), std::greater<>());  // cyclic first
        for (auto& f : classes) out.push_back(make_group(f));
    }
    return out;
}

bool CampaignRecord::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const TheoremVerdict& v) { return v.holds; });
}

namespace {

bool checker_requested(const CampaignConfig& cfg, TheoremId id) {
    static const TheoremId kDefault[] = {
        TheoremId::Kneser,     TheoremId::Main,     TheoremId::MainT2,
        TheoremId::Corollary,  TheoremId::Multiplicity, TheoremId::Critical,
        TheoremId::Remark,     TheoremId::EnergyLemma};
    if (cfg.checkers.empty())
        return std::find(std::begin(kDefault), std::end(kDefault), id) !=
               std::end(kDefault);
    return std::find(cfg.checkers.begin(), cfg.checkers.end(), id) !=
           cfg.checkers.end();
}

// Aggregate energy verdict: lemma and upper bound over every k in
// [1, min(|A|,|B|)] with the minimal exceptional set.
TheoremVerdict energy_sweep_verdict(const GSet& A, const GSet& B, std::uint32_t t,
                                    const RepProfile& sum_prof,
                                    const RepProfile& diff_prof) {
    TheoremVerdict agg;
    agg.theorem = TheoremId::EnergyLemma;
    agg.holds = true;
    agg.branch = Branch::NotApplicable;
    const std::uint32_t kmax =
        static_cast<std::uint32_t>(std::min(A.card(), B.card()));
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        const TheoremVerdict lemma = check_energy_lemma(A, B, k, t, &sum_prof, &diff_prof);
        agg.elapsed_ns += lemma.elapsed_ns;
        TheoremVerdict upper;
        if (A.card() >= B.card()) {
            const GSet T = diff_prof.above(k);
            upper = check_energy_upper_bound(A, B, T, k, &sum_prof, &diff_prof);
            agg.elapsed_ns += upper.elapsed_ns;
        } else {
            upper.holds = true;
            upper.branch = Branch::NotApplicable;
        }
        const bool applicable = lemma.branch != Branch::NotApplicable;
        if (applicable) {
            agg.branch = Branch::Bound;
            agg.lhs = lemma.lhs;
            agg.rhs = lemma.rhs;
        }
        if (!lemma.holds || !upper.holds) {
            agg.holds = false;
            agg.lhs = !lemma.holds ? lemma.lhs : upper.lhs;
            agg.rhs = !lemma.holds ? lemma.rhs : upper.rhs;
            break;
        }
    }
    return agg;
}

CampaignRecord evaluate_pair(const CampaignConfig& cfg, const Group& g,
                             const std::vector<Subgroup>* lattice, const GSet& A,
                             const GSet& B, std::uint32_t t, bool first_t) {
    const auto t0 = Clock::now();
    CampaignRecord rec;
    rec.group_factors = g->invariant_factors();
    rec.A = A.indices();
    rec.B = B.indices();
    rec.t = t;

    const RepProfile sum_prof = rep_counts(A, B);
    const RepProfile diff_prof = rep_counts(A, B.negated());
    const std::int64_t sigma = static_cast<std::int64_t>(sum_prof.sum_min(t));
    const std::int64_t na = static_cast<std::int64_t>(A.card());
    const std::int64_t nb = static_cast<std::int64_t>(B.card());
    const std::int64_t weak =
        t == 2 ? 2 * na + 2 * nb - 4
               : static_cast<std::int64_t>(t) * (na + nb) - 2 * t * t + 1;
    rec.tightness_gap = sigma - weak;

    if (first_t && checker_requested(cfg, TheoremId::Kneser))
        rec.verdicts.push_back(check_kneser(A, B));
    if (checker_requested(cfg, TheoremId::Main))
        rec.verdicts.push_back(check_main_theorem(A, B, t));
    if (t == 2 && na >= 2 && nb >= 2 && checker_requested(cfg, TheoremId::MainT2))
        rec.verdicts.push_back(check_t2_theorem(A, B));
    if (t == 2 && na >= 2 && nb >= 2 && lattice &&
        checker_requested(cfg, TheoremId::Corollary))
        rec.verdicts.push_back(check_corollary(A, B, lattice));
    if (first_t && checker_requested(cfg, TheoremId::Multiplicity))
        rec.verdicts.push_back(check_multiplicity_prop(A, B));
    if (first_t && checker_requested(cfg, TheoremId::Critical))
        rec.verdicts.push_back(check_critical_pair(A, B));
    if (checker_requested(cfg, TheoremId::Remark))
        rec.verdicts.push_back(check_double_rep_remark(A, B, t));
    if (checker_requested(cfg, TheoremId::EnergyLemma))
        rec.verdicts.push_back(energy_sweep_verdict(A, B, t, sum_prof, diff_prof));
    if (checker_requested(cfg, TheoremId::Pollard))
        rec.verdicts.push_back(check_pollard_cyclic(A, B, t));
    if (g->is_cyclic() && checker_requested(cfg, TheoremId::Chowla))
        rec.verdicts.push_back(check_chowla_pollard(A, B, t));
    if (lattice && checker_requested(cfg, TheoremId::GreenRuzsa))
        rec.verdicts.push_back(check_green_ruzsa(A, B, t, lattice));

    rec.elapsed_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
    return rec;
}

struct Chunk {
    std::size_t group_idx;
    std::uint64_t begin, end;  // pair indices (exhaustive) or sample indices
};

GSet subset_from_mask(const Group& g, std::uint64_t mask) {
    // bit j of mask selects element j+1; 0 is always included
    std::vector<std::uint32_t> idx{0};
    for (std::uint32_t j = 0; j + 1 < g->order(); ++j)
        if ((mask >> j) & 1) idx.push_back(j + 1);
    return GSet::from_indices(g, idx);
}

GSet random_nonempty_subset(const Group& g, std::uint64_t& state) {
    const std::size_t nwords = detail::words_for(g->order());
    for (;;) {
        std::vector<detail::Word> w(nwords);
        for (auto& word : w) word = detail::splitmix64(state);
        GSet s(g, std::move(w));
        if (!s.empty()) return s;
    }
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg,
                            const std::function<void(const CampaignRecord&)>& sink) {
    if (cfg.max_order == 0)
        throw std::invalid_argument("run_campaign: max_order must be >= 1");
    if (cfg.t_min == 0 || cfg.t_min > cfg.t_max)
        throw std::invalid_argument("run_campaign: bad t range");
    if (cfg.mode == CampaignConfig::Mode::Exhaustive &&
        cfg.max_order > CampaignConfig::kMaxExhaustiveOrder)
        throw std::domain_error("run_campaign: exhaustive mode capped at order " +
                                std::to_string(CampaignConfig::kMaxExhaustiveOrder));

    const auto groups = enumerate_abelian_groups(cfg.max_order);
    std::vector<std::optional<std::vector<Subgroup>>> lattices(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (groups[i]->order() <= 256) lattices[i] = subgroup_lattice(groups[i]);

    const bool exhaustive = cfg.mode == CampaignConfig::Mode::Exhaustive;
    std::vector<Chunk> chunks;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const std::uint64_t total =
            exhaustive ? std::uint64_t{1} << (2 * (groups[gi]->order() - 1))
                       : cfg.samples_per_group;
        const std::uint64_t step = exhaustive ? 2048 : 256;
        for (std::uint64_t b = 0; b < total; b += step)
            chunks.push_back({gi, b, std::min(b + step, total)});
    }

    unsigned threads = cfg.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(chunks.size(), 1));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex m;
    std::condition_variable cv;
    std::map<std::size_t, std::vector<CampaignRecord>> ready;
    std::exception_ptr worker_error;

    auto eval_chunk = [&](const Chunk& c) {
        std::vector<CampaignRecord> out;
        const Group& g = groups[c.group_idx];
        const std::vector<Subgroup>* lat =
            lattices[c.group_idx] ? &*lattices[c.group_idx] : nullptr;
        const std::uint64_t half_bits = g->order() - 1;
        for (std::uint64_t p = c.begin; p < c.end && !stop.load(); ++p) {
            GSet A(g), B(g);
            if (exhaustive) {
                const std::uint64_t mask_a = p >> half_bits;
                const std::uint64_t mask_b = p & ((std::uint64_t{1} << half_bits) - 1);
                A = subset_from_mask(g, mask_a);
                B = subset_from_mask(g, mask_b);
            } else {
                std::uint64_t state = detail::mix_seed(cfg.seed, c.group_idx, p);
                A = random_nonempty_subset(g, state);
                B = random_nonempty_subset(g, state);
            }
            const std::uint32_t tcap = static_cast<std::uint32_t>(
                std::min<std::uint64_t>(cfg.t_max, std::min(A.card(), B.card())));
            bool first = true;
            for (std::uint32_t t = cfg.t_min; t <= tcap; ++t) {
                out.push_back(evaluate_pair(cfg, g, lat, A, B, t, first));
                first = false;
            }
        }
        return out;
    };

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= chunks.size() || stop.load()) return;
            std::vector<CampaignRecord> recs;
            try {
                recs = eval_chunk(chunks[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!worker_error) worker_error = std::current_exception();
                stop.store(true);
                ready[i] = {};
                cv.notify_all();
                return;
            }
            {
                std::lock_guard<std::mutex> lock(m);
                ready[i] = std::move(recs);
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);

    CampaignResult result;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        std::vector<CampaignRecord> recs;
        {
            std::unique_lock<std::mutex> lock(m);
            cv.wait(lock, [&] { return ready.count(i) || stop.load(); });
            if (worker_error) break;
            if (!ready.count(i)) break;  // stopped before this chunk completed
            recs = std::move(ready[i]);
            ready.erase(i);
        }
        bool failed = false;
        for (const auto& rec : recs) {
            result.records++;
            for (const auto& v : rec.verdicts)
                if (v.witness) {
                    result.witness_records++;
                    result.max_witness_l = std::max(result.max_witness_l, v.witness->l);
                    break;
                }
            if (sink) sink(rec);
            if (!rec.all_hold()) {
                result.failures++;
                if (!result.counterexample) result.counterexample = rec;
                if (cfg.stop_on_failure) {
                    failed = true;
                    break;
                }
            }
        }
        if (failed) {
            stop.store(true);
            cv.notify_all();
            break;
        }
    }
    stop.store(true);
    cv.notify_all();
    for (auto& th : pool) th.join();
    if (worker_error) std::rethrow_exception(worker_error);
    return result;
}

}  // namespace addcomb
