#include "addcomb/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "addcomb/rep.hpp"

namespace addcomb {

using detail::Word;

namespace {

// Closure of a set containing 0 under addition: iterate S <- S u (S+S).
// Doubles the reachable sums each pass, so O(log |G|) rounds.
GSet close_under_addition(GSet s) {
    for (;;) {
        GSet next = sumset(s, s).united(s);
        if (next == s) return s;
        s = std::move(next);
    }
}

}  // namespace

Subgroup Subgroup::from_carrier(GSet carrier) {
    if (carrier.empty() || !carrier.contains(0))
        throw std::invalid_argument("subgroup: carrier must contain 0");
    for (std::uint32_t x : carrier.indices())
        if (!carrier.translated(x).subset_of(carrier))
            throw std::invalid_argument("subgroup: carrier not closed under addition");
    return Subgroup(Trusted{}, std::move(carrier));
}

Subgroup Subgroup::trivial(const Group& g) {
    return Subgroup(Trusted{}, GSet::singleton(g, 0));
}

Subgroup Subgroup::full(const Group& g) {
    return Subgroup(Trusted{}, GSet::full(g));
}

Subgroup stabilizer(const GSet& S) {
    const Group& g = S.group();
    if (S.empty()) return Subgroup::full(g);

    // Any x with x + S = S must map the least element into S, so it suffices
    // to test the candidates S - s0.
    const std::uint32_t s0 = S.first();
    const GSet candidates = S.translated(g->neg(s0));
    const std::size_t nwords = detail::words_for(g->order());
    std::vector<Word> carrier(nwords, 0), shifted(nwords, 0), scratch(nwords, 0);
    candidates.for_each([&](std::uint32_t x) {
        detail::translate_words(*g, x, S.words(), shifted, scratch);
        if (shifted == S.words()) detail::set_bit(carrier.data(), x);
    });
    return Subgroup(Subgroup::Trusted{}, GSet(g, std::move(carrier)));
}

Subgroup subgroup_generated_by(const Group& g,
                               std::span<const std::uint32_t> generators) {
    std::vector<std::uint32_t> seed{0};
    seed.insert(seed.end(), generators.begin(), generators.end());
    GSet s = GSet::from_indices(g, seed);
    return Subgroup(Subgroup::Trusted{}, close_under_addition(std::move(s)));
}

std::vector<Subgroup> subgroup_lattice(const Group& g, std::uint64_t max_order) {
    if (g->order() > max_order)
        throw std::domain_error("subgroup_lattice: group order exceeds configured maximum");

    std::vector<GSet> subs;
    std::set<std::vector<Word>> seen;
    auto insert = [&](GSet s) {
        if (seen.insert(s.words()).second) subs.push_back(std::move(s));
    };

    for (std::uint32_t x = 0; x < g->order(); ++x)
        insert(close_under_addition(GSet::of(g, {0, x})));

    // Join fixpoint: every pair of known subgroups produces the subgroup
    // generated by their union; new entries re-enter the pairing.
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            insert(close_under_addition(subs[i].united(subs[j])));

    std::sort(subs.begin(), subs.end(), [](const GSet& a, const GSet& b) {
        if (a.card() != b.card()) return a.card() < b.card();
        return a.indices() < b.indices();
    });

    std::vector<Subgroup> out;
    out.reserve(subs.size());
    for (auto& s : subs)
        out.push_back(Subgroup(Subgroup::Trusted{}, std::move(s)));
    return out;
}

std::uint64_t max_proper_subgroup_size(const Group& g, std::uint64_t max_order) {
    std::uint64_t best = 0;
    for (const auto& h : subgroup_lattice(g, max_order))
        if (h.order() < g->order()) best = std::max(best, h.order());
    return best;
}

std::uint64_t holes_rho(const GSet& A, const GSet& B, const Subgroup& H) {
    require_same_group(A, B, "holes_rho");
    require_same_group(A, H.carrier(), "holes_rho");
    auto holes = [&](const GSet& S) -> std::uint64_t {
        if (S.empty()) return 0;
        return sumset(S, H.carrier()).card() - S.card();
    };
    return holes(A) + holes(B);
}

bool is_periodic(const GSet& S, const Subgroup& H) {
    if (S.empty()) return true;
    return sumset(S, H.carrier()) == S;
}

}  // namespace addcomb
