#pragma once

// Test-only oracles: independent mixed-radix arithmetic and plain double
// loops. These deliberately avoid the library's kernels and set types so
// kernel bugs cannot hide behind shared code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::uint64_t group_order(const std::vector<std::uint32_t>& orders) {
    std::uint64_t n = 1;
    for (auto f : orders) n *= f;
    return n;
}

inline std::uint32_t add(const std::vector<std::uint32_t>& orders, std::uint32_t a,
                         std::uint32_t b) {
    std::uint64_t stride = 1;
    std::uint64_t result = 0;
    for (std::size_t j = orders.size(); j-- > 0;) {
        const std::uint64_t n = orders[j];
        const std::uint64_t da = (a / stride) % n;
        const std::uint64_t db = (b / stride) % n;
        result += ((da + db) % n) * stride;
        stride *= n;
    }
    return static_cast<std::uint32_t>(result);
}

inline std::uint32_t neg(const std::vector<std::uint32_t>& orders, std::uint32_t a) {
    std::uint64_t stride = 1;
    std::uint64_t result = 0;
    for (std::size_t j = orders.size(); j-- > 0;) {
        const std::uint64_t n = orders[j];
        const std::uint64_t da = (a / stride) % n;
        result += ((n - da) % n) * stride;
        stride *= n;
    }
    return static_cast<std::uint32_t>(result);
}

inline std::vector<std::uint32_t> rep_counts(const std::vector<std::uint32_t>& orders,
                                             const std::vector<std::uint32_t>& A,
                                             const std::vector<std::uint32_t>& B) {
    std::vector<std::uint32_t> counts(group_order(orders), 0);
    for (auto a : A)
        for (auto b : B) counts[add(orders, a, b)]++;
    return counts;
}

inline std::vector<std::uint32_t> sumset(const std::vector<std::uint32_t>& orders,
                                         const std::vector<std::uint32_t>& A,
                                         const std::vector<std::uint32_t>& B) {
    const auto counts = rep_counts(orders, A, B);
    std::vector<std::uint32_t> out;
    for (std::uint32_t g = 0; g < counts.size(); ++g)
        if (counts[g] > 0) out.push_back(g);
    return out;
}

inline std::uint64_t pollard_sum(const std::vector<std::uint32_t>& counts,
                                 std::uint32_t t) {
    std::uint64_t s = 0;
    for (auto c : counts) s += std::min(c, t);
    return s;
}

inline std::vector<std::uint32_t> translate(const std::vector<std::uint32_t>& orders,
                                            const std::vector<std::uint32_t>& S,
                                            std::uint32_t g) {
    std::vector<std::uint32_t> out;
    for (auto s : S) out.push_back(add(orders, s, g));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint32_t> stabilizer(const std::vector<std::uint32_t>& orders,
                                             std::vector<std::uint32_t> S) {
    std::sort(S.begin(), S.end());
    std::vector<std::uint32_t> H;
    for (std::uint32_t x = 0; x < group_order(orders); ++x)
        if (translate(orders, S, x) == S) H.push_back(x);
    return H;
}

// Unordered pairs of distinct vertices (a,b) != (a',b') of A x B with
// a + b = a' + b'.
inline std::uint64_t energy_by_pairs(const std::vector<std::uint32_t>& orders,
                                     const std::vector<std::uint32_t>& A,
                                     const std::vector<std::uint32_t>& B) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> verts;
    for (auto a : A)
        for (auto b : B) verts.emplace_back(a, b);
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (add(orders, verts[i].first, verts[i].second) ==
                add(orders, verts[j].first, verts[j].second))
                ++e;
    return e;
}

// Every subset containing 0 that is closed under addition; usable up to
// order ~16.
inline std::vector<std::vector<std::uint32_t>> all_subgroups_brute(
    const std::vector<std::uint32_t>& orders) {
    const std::uint64_t n = group_order(orders);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & 1)) continue;  // must contain 0
        std::vector<std::uint32_t> S;
        for (std::uint32_t g = 0; g < n; ++g)
            if ((mask >> g) & 1) S.push_back(g);
        bool closed = true;
        for (auto a : S)
            for (auto b : S)
                if (!((mask >> add(orders, a, b)) & 1)) { closed = false; break; }
        if (closed) out.push_back(S);
    }
    return out;
}

}  // namespace oracle
