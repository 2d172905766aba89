#include "addcomb/rep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

#ifdef ADDCOMB_HAVE_FFTW
#include <fftw3.h>
#endif

namespace addcomb {

using detail::Word;

GSet RepProfile::at_least(std::uint32_t i) const {
    if (i == 0) throw std::invalid_argument("at_least: i must be >= 1");
    std::vector<Word> w(detail::words_for(group->order()), 0);
    for (std::uint64_t g = 0; g < counts.size(); ++g)
        if (counts[g] >= i) detail::set_bit(w.data(), g);
    return GSet(group, std::move(w));
}

GSet RepProfile::above(std::uint32_t k) const {
    std::vector<Word> w(detail::words_for(group->order()), 0);
    for (std::uint64_t g = 0; g < counts.size(); ++g)
        if (counts[g] > k) detail::set_bit(w.data(), g);
    return GSet(group, std::move(w));
}

std::uint64_t RepProfile::sum_min(std::uint32_t t) const {
    if (t == 0) throw std::invalid_argument("sum_min: t must be >= 1");
    std::uint64_t s = 0;
    for (std::uint32_t c : counts) s += std::min<std::uint32_t>(c, t);
    return s;
}

namespace {

RepProfile make_profile(Group group, std::vector<std::uint32_t> counts) {
    RepProfile p;
    p.group = std::move(group);
    p.counts = std::move(counts);
    for (std::uint32_t c : p.counts) {
        p.total += c;
        p.max_count = std::max(p.max_count, c);
    }
    return p;
}

RepProfile rep_counts_naive(const GSet& A, const GSet& B) {
    const GroupSpec& g = *A.group();
    std::vector<std::uint32_t> counts(g.order(), 0);
    const auto as = A.indices();
    const auto bs = B.indices();
    for (std::uint32_t a : as)
        for (std::uint32_t b : bs) counts[g.add(a, b)]++;
    return make_profile(A.group(), std::move(counts));
}

// Word-parallel shift-and-accumulate: translate the larger set by each
// element of the smaller one and add the indicator vectors into bit-sliced
// counters (one bitset per binary digit of the count).
RepProfile rep_counts_bitset(const GSet& A, const GSet& B) {
    const GroupSpec& g = *A.group();
    const std::uint64_t n = g.order();
    const std::size_t nwords = detail::words_for(n);
    const GSet& small = A.card() <= B.card() ? A : B;
    const GSet& large = A.card() <= B.card() ? B : A;

    std::vector<std::vector<Word>> planes;
    std::vector<Word> addend(nwords, 0), scratch(nwords, 0);
    small.for_each([&](std::uint32_t s) {
        detail::translate_words(g, s, large.words(), addend, scratch);
        for (std::size_t p = 0;; ++p) {
            if (p == planes.size()) planes.emplace_back(nwords, 0);
            Word any_carry = 0;
            auto& plane = planes[p];
            for (std::size_t w = 0; w < nwords; ++w) {
                const Word carry = plane[w] & addend[w];
                plane[w] ^= addend[w];
                addend[w] = carry;
                any_carry |= carry;
            }
            if (any_carry == 0) break;
        }
    });

    std::vector<std::uint32_t> counts(n, 0);
    for (std::size_t p = 0; p < planes.size(); ++p) {
        const std::uint32_t weight = std::uint32_t{1} << p;
        detail::for_each_bit(std::span<const Word>(planes[p]),
                             [&](std::uint64_t i) { counts[i] += weight; });
    }
    return make_profile(A.group(), std::move(counts));
}

#ifdef ADDCOMB_HAVE_FFTW
std::mutex fftw_plan_mutex;

// counts = indicator(A) (*) indicator(B), a multidimensional cyclic
// convolution over the factor orders, via real FFTs. Exact values are
// recovered by rounding; the total is validated against |A||B|.
RepProfile rep_counts_transform(const GSet& A, const GSet& B) {
    const GroupSpec& g = *A.group();
    const std::uint64_t n = g.order();
    std::vector<int> dims(g.orders().begin(), g.orders().end());
    const int rank = static_cast<int>(dims.size());
    const std::uint64_t nlast = g.orders().back();
    const std::uint64_t ncplx = n / nlast * (nlast / 2 + 1);

    double* ra = fftw_alloc_real(n);
    double* rb = fftw_alloc_real(n);
    fftw_complex* ca = fftw_alloc_complex(ncplx);
    fftw_complex* cb = fftw_alloc_complex(ncplx);
    if (!ra || !rb || !ca || !cb) throw std::bad_alloc();

    std::fill(ra, ra + n, 0.0);
    std::fill(rb, rb + n, 0.0);
    A.for_each([&](std::uint32_t i) { ra[i] = 1.0; });
    B.for_each([&](std::uint32_t i) { rb[i] = 1.0; });

    fftw_plan fa, fb, bi;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fa = fftw_plan_dft_r2c(rank, dims.data(), ra, ca, FFTW_ESTIMATE);
        fb = fftw_plan_dft_r2c(rank, dims.data(), rb, cb, FFTW_ESTIMATE);
        bi = fftw_plan_dft_c2r(rank, dims.data(), ca, ra, FFTW_ESTIMATE);
    }
    fftw_execute(fa);
    fftw_execute(fb);
    for (std::uint64_t i = 0; i < ncplx; ++i) {
        const double re = ca[i][0] * cb[i][0] - ca[i][1] * cb[i][1];
        const double im = ca[i][0] * cb[i][1] + ca[i][1] * cb[i][0];
        ca[i][0] = re;
        ca[i][1] = im;
    }
    fftw_execute(bi);

    std::vector<std::uint32_t> counts(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const long long c = std::llround(ra[i] * scale);
        counts[i] = c < 0 ? 0u : static_cast<std::uint32_t>(c);
    }
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(fa);
        fftw_destroy_plan(fb);
        fftw_destroy_plan(bi);
    }
    fftw_free(ra);
    fftw_free(rb);
    fftw_free(ca);
    fftw_free(cb);

    auto prof = make_profile(A.group(), std::move(counts));
    if (prof.total != A.card() * B.card())
        throw std::runtime_error("transform kernel: rounded convolution failed the total check");
    return prof;
}
#endif

RepKernel choose_kernel(const GSet& A, const GSet& B) {
    const GroupSpec& g = *A.group();
    const std::uint64_t n = g.order();
    const std::uint64_t small = std::min(A.card(), B.card());
    if (small == 0) return RepKernel::Naive;
    const std::uint64_t rank = g.rank();
    const std::uint64_t naive_cost = A.card() * B.card() * (2 + rank);
    const std::uint64_t planes = std::bit_width(small) + 1;
    const std::uint64_t bitset_cost = small * (n / 64 + 1) * (rank + planes);
#ifdef ADDCOMB_HAVE_FFTW
    if (n >= (std::uint64_t{1} << 14)) {
        const std::uint64_t fft_cost =
            24 * n * std::max<std::uint64_t>(std::bit_width(n), 1);
        if (fft_cost < naive_cost && fft_cost < bitset_cost)
            return RepKernel::Transform;
    }
#endif
    return naive_cost <= bitset_cost ? RepKernel::Naive : RepKernel::Bitset;
}

}  // namespace

bool transform_kernel_available() {
#ifdef ADDCOMB_HAVE_FFTW
    return true;
#else
    return false;
#endif
}

RepProfile rep_counts(const GSet& A, const GSet& B, RepKernel kernel) {
    require_same_group(A, B, "rep_counts");
    if (kernel == RepKernel::Auto) kernel = choose_kernel(A, B);
    switch (kernel) {
        case RepKernel::Naive:
            return rep_counts_naive(A, B);
        case RepKernel::Bitset:
            return rep_counts_bitset(A, B);
        case RepKernel::Transform:
#ifdef ADDCOMB_HAVE_FFTW
            return rep_counts_transform(A, B);
#else
            throw std::runtime_error("transform kernel not built (FFTW unavailable)");
#endif
        default:
            return rep_counts_naive(A, B);
    }
}

GSet sumset(const GSet& A, const GSet& B) {
    require_same_group(A, B, "sumset");
    if (A.empty() || B.empty())
        throw std::invalid_argument("sumset: inputs must be nonempty");
    const GroupSpec& g = *A.group();
    const GSet& small = A.card() <= B.card() ? A : B;
    const GSet& large = A.card() <= B.card() ? B : A;
    const std::size_t nwords = detail::words_for(g.order());
    std::vector<Word> acc(nwords, 0), shifted(nwords, 0), scratch(nwords, 0);
    small.for_each([&](std::uint32_t s) {
        detail::translate_words(g, s, large.words(), shifted, scratch);
        for (std::size_t w = 0; w < nwords; ++w) acc[w] |= shifted[w];
    });
    return GSet(A.group(), std::move(acc));
}

GSet i_representable(const GSet& A, const GSet& B, std::uint32_t i,
                     RepKernel kernel) {
    if (i == 0) throw std::invalid_argument("i_representable: i must be >= 1");
    require_same_group(A, B, "i_representable");
    return rep_counts(A, B, kernel).at_least(i);
}

std::uint64_t pollard_sum(const GSet& A, const GSet& B, std::uint32_t t,
                          RepKernel kernel) {
    if (t == 0) throw std::invalid_argument("pollard_sum: t must be >= 1");
    require_same_group(A, B, "pollard_sum");
    return rep_counts(A, B, kernel).sum_min(t);
}

std::pair<GSet, GSet> dyson_transform(const GSet& A, const GSet& B,
                                      std::uint32_t x) {
    require_same_group(A, B, "dyson_transform");
    const GSet xB = B.translated(x);
    return {xB.united(A), xB.intersected(A)};
}

bool is_sidon(const GSet& B) {
    if (B.empty()) throw std::invalid_argument("is_sidon: set must be nonempty");
    const auto prof = rep_counts(B, B.negated());
    for (std::uint64_t g = 0; g < prof.counts.size(); ++g)
        if (g != 0 && prof.counts[g] >= 2) return false;
    return true;
}

std::uint64_t additive_energy(const RepProfile& profile) {
    std::uint64_t e = 0;
    for (std::uint32_t c : profile.counts)
        if (c >= 2) e += std::uint64_t{c} * (c - 1) / 2;
    return e;
}

std::uint64_t additive_energy(const GSet& A, const GSet& B) {
    require_same_group(A, B, "additive_energy");
    return additive_energy(rep_counts(A, B));
}

}  // namespace addcomb
