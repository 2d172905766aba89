#include "addcomb/examples.hpp"

#include <numeric>
#include <stdexcept>

#include "addcomb/rep.hpp"
#include "addcomb/search.hpp"

namespace addcomb {

namespace {

void constraint(bool ok, const char* violated) {
    if (!ok) throw std::invalid_argument(std::string("constraint violated: ") + violated);
}

std::uint32_t order_in_cyclic(std::uint32_t d, std::uint32_t n) {
    const std::uint32_t dm = d % n;
    return dm == 0 ? 1 : n / std::gcd(dm, n);
}

// Order of g+H in G/H: least m >= 1 with m*g in H.
std::uint32_t coset_order(const GroupSpec& g, const Subgroup& H, std::uint32_t x) {
    std::uint32_t y = x;
    std::uint32_t m = 1;
    while (!H.contains(y)) {
        y = g.add(y, x);
        ++m;
    }
    return m;
}

}  // namespace

ExampleInstance build_example1(std::uint32_t H_order, std::uint32_t quotient_order,
                               std::uint32_t d, std::uint32_t s, std::uint32_t r,
                               std::uint32_t x) {
    constraint(H_order >= 2, "1 <= x <= |H|-1 requires |H| >= 2");
    constraint(quotient_order >= 2, "quotient order >= 2");
    constraint(r >= 2, "r >= 2");
    constraint(s >= r, "s >= r");
    constraint(d % quotient_order != 0, "d nonzero in the quotient");
    constraint(r + s - 1 <= order_in_cyclic(d, quotient_order), "r+s-1 <= ord(d)");
    constraint(x >= 1, "x >= 1");
    constraint(x <= H_order - 1, "x <= |H|-1");

    const Group G = make_group({H_order, quotient_order});
    const std::uint32_t t = (r - 1) * H_order + x;

    auto coset_union = [&](std::uint32_t count) {
        std::vector<std::uint32_t> idx;
        idx.reserve(static_cast<std::size_t>(count) * H_order);
        for (std::uint32_t j = 0; j < count; ++j) {
            const std::uint32_t q =
                static_cast<std::uint32_t>((static_cast<std::uint64_t>(j) * d) % quotient_order);
            for (std::uint32_t h = 0; h < H_order; ++h)
                idx.push_back(h * quotient_order + q);
        }
        return GSet::from_indices(G, idx);
    };

    std::vector<std::uint32_t> h_idx;
    for (std::uint32_t h = 0; h < H_order; ++h) h_idx.push_back(h * quotient_order);
    const Subgroup H = Subgroup::from_carrier(GSet::from_indices(G, h_idx));

    ExampleInstance inst{1,
                         G,
                         coset_union(s),
                         coset_union(r),
                         H,
                         t,
                         x,
                         s,
                         r,
                         static_cast<std::int64_t>(x) * x -
                             static_cast<std::int64_t>(x) * H_order};
    return inst;
}

ExampleInstance build_example2(const Group& G, const Subgroup& H, const Subgroup& L,
                               std::uint32_t r, std::uint32_t x) {
    constraint(same_group(G, H.group()) && same_group(G, L.group()),
               "H and L must be subgroups of G");
    constraint(L.order() >= 2, "0 < L (L nontrivial)");
    constraint(L.carrier().subset_of(H.carrier()) && L.order() < H.order(), "L < H");
    constraint(H.order() < G->order(), "H < G");
    constraint(r >= 2, "r >= 2");
    constraint(x >= 1, "x >= 1");
    constraint(x + 1 <= L.order(), "x <= |L|-1");

    const std::uint32_t qn = static_cast<std::uint32_t>(G->order() / H.order());
    constraint(r <= qn, "r <= |G/H| (the progression needs r distinct cosets)");

    // G/H must be cyclic: take the smallest generator coset.
    std::optional<std::uint32_t> found;
    for (std::uint32_t g = 0; g < G->order() && !found; ++g)
        if (coset_order(*G, H, g) == qn) found = g;
    constraint(found.has_value(), "G/H cyclic");
    const std::uint32_t gen = *found;

    const std::uint32_t t = (r - 1) * static_cast<std::uint32_t>(H.order()) + x;

    const GSet A = H.carrier().complement().united(L.carrier());
    // B' spans the cosets {0, gen, ..., (r-1) gen}; B drops the 0 coset and
    // keeps L instead.
    GSet B = L.carrier();
    std::uint32_t rep = 0;
    for (std::uint32_t j = 1; j < r; ++j) {
        rep = G->add(rep, gen);
        B = B.united(H.coset(rep));
    }

    ExampleInstance inst{2,
                         G,
                         A,
                         B,
                         L,
                         t,
                         x,
                         qn,
                         r,
                         static_cast<std::int64_t>(x) * x -
                             static_cast<std::int64_t>(x) *
                                 static_cast<std::int64_t>(L.order())};
    return inst;
}

std::int64_t measured_defect(const ExampleInstance& inst) {
    const std::int64_t sigma =
        static_cast<std::int64_t>(pollard_sum(inst.A, inst.B, inst.t));
    const std::int64_t t = inst.t;
    return sigma - t * static_cast<std::int64_t>(inst.A.card()) -
           t * static_cast<std::int64_t>(inst.B.card()) + t * t;
}

std::vector<Example1Params> enumerate_example1_params(
    std::uint32_t max_H, std::uint32_t max_quotient,
    std::optional<std::uint32_t> t_filter) {
    std::vector<Example1Params> out;
    for (std::uint32_t h = 2; h <= max_H; ++h)
        for (std::uint32_t q = 2; q <= max_quotient; ++q)
            for (std::uint32_t d = 1; d < q; ++d) {
                const std::uint32_t ord = order_in_cyclic(d, q);
                for (std::uint32_t r = 2; r + 1 <= ord + 1; ++r)
                    for (std::uint32_t s = r; r + s - 1 <= ord; ++s)
                        for (std::uint32_t x = 1; x + 1 <= h; ++x) {
                            const Example1Params p{h, q, d, s, r, x};
                            if (!t_filter || p.t() == *t_filter) out.push_back(p);
                        }
            }
    return out;
}

std::vector<Example2Params> enumerate_example2_params(
    std::uint32_t max_group_order, std::optional<std::uint32_t> t_filter) {
    std::vector<Example2Params> out;
    for (const Group& G : enumerate_abelian_groups(max_group_order)) {
        if (G->order() < 8) continue;  // needs 2 <= |L| < |H| < |G|
        const auto lattice = subgroup_lattice(G);
        for (const auto& H : lattice) {
            if (H.order() >= G->order() || H.order() < 4) continue;
            const std::uint32_t qn = static_cast<std::uint32_t>(G->order() / H.order());
            bool cyclic_quotient = qn == 1;
            for (std::uint32_t g = 0; g < G->order() && !cyclic_quotient; ++g)
                cyclic_quotient = coset_order(*G, H, g) == qn;
            if (!cyclic_quotient) continue;
            for (const auto& L : lattice) {
                if (L.order() < 2 || L.order() >= H.order()) continue;
                if (!L.carrier().subset_of(H.carrier())) continue;
                for (std::uint32_t r = 2; r <= qn; ++r)
                    for (std::uint32_t x = 1; x + 1 <= L.order(); ++x) {
                        const Example2Params p{G, H, L, r, x};
                        if (!t_filter || p.t() == *t_filter) out.push_back(p);
                    }
            }
        }
    }
    return out;
}

}  // namespace addcomb
