#include "addcomb/gset.hpp"

#include <stdexcept>

namespace addcomb {

using detail::Word;
using detail::kWordBits;

void require_same_group(const GSet& a, const GSet& b, const char* op) {
    if (!same_group(a.group(), b.group()))
        throw std::invalid_argument(std::string(op) + ": sets live in different groups");
}

GSet::GSet(Group group)
    : group_(std::move(group)), words_(detail::words_for(group_->order()), 0) {}

GSet::GSet(Group group, std::vector<Word> words)
    : group_(std::move(group)), words_(std::move(words)) {
    if (words_.size() != detail::words_for(group_->order()))
        throw std::invalid_argument("GSet: word buffer size mismatch");
    detail::clear_tail(words_, group_->order());
    card_ = detail::popcount(words_);
}

GSet GSet::full(Group group) {
    std::vector<Word> w(detail::words_for(group->order()), ~Word{0});
    return GSet(std::move(group), std::move(w));
}

GSet GSet::from_indices(Group group, std::span<const std::uint32_t> indices) {
    std::vector<Word> w(detail::words_for(group->order()), 0);
    for (std::uint32_t i : indices) {
        if (i >= group->order())
            throw std::out_of_range("GSet: element index out of range");
        detail::set_bit(w.data(), i);
    }
    return GSet(std::move(group), std::move(w));
}

GSet GSet::of(Group group, std::initializer_list<std::uint32_t> indices) {
    return from_indices(std::move(group),
                        std::span<const std::uint32_t>(indices.begin(), indices.size()));
}

GSet GSet::singleton(Group group, std::uint32_t g) {
    return of(std::move(group), {g});
}

bool GSet::contains(std::uint32_t g) const {
    return g < group_->order() && detail::get_bit(words_.data(), g);
}

std::vector<std::uint32_t> GSet::indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(card_);
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
}

std::uint32_t GSet::first() const {
    if (empty()) throw std::logic_error("GSet::first on empty set");
    for (std::size_t wi = 0;; ++wi)
        if (words_[wi] != 0)
            return static_cast<std::uint32_t>(wi * kWordBits +
                                              std::countr_zero(words_[wi]));
}

namespace detail {

void translate_words(const GroupSpec& g, std::uint32_t shift,
                     const std::vector<Word>& src, std::vector<Word>& dst,
                     std::vector<Word>& scratch) {
    const std::uint64_t order = g.order();
    const std::size_t nwords = words_for(order);
    dst.assign(nwords, 0);
    scratch.assign(nwords, 0);

    // Translation decomposes into per-axis cyclic rotations: along axis j the
    // flat index space splits into blocks of n_j * stride_j bits, each rotated
    // by t_j * stride_j. Ping-pong between dst and scratch across axes.
    const auto& orders = g.orders();
    const auto& strides = g.strides();
    const Word* cur = src.data();
    Word* buf_a = dst.data();
    Word* buf_b = scratch.data();
    for (std::size_t j = 0; j < orders.size(); ++j) {
        const std::uint64_t n = orders[j];
        const std::uint64_t stride = strides[j];
        const std::uint64_t tj = (shift / stride) % n;
        if (tj == 0) continue;
        Word* out = (cur == buf_a) ? buf_b : buf_a;
        const std::uint64_t block = n * stride;
        const std::uint64_t rot = tj * stride;
        for (std::uint64_t off = 0; off < order; off += block)
            rotate_bits(out, cur, off, block, rot);
        cur = out;
    }
    if (cur == src.data()) {
        dst = src;
        return;
    }
    if (cur != dst.data()) dst.swap(scratch);
}

}  // namespace detail

GSet GSet::translated(std::uint32_t g) const {
    if (g >= group_->order())
        throw std::out_of_range("translated: element index out of range");
    std::vector<Word> dst, scratch;
    detail::translate_words(*group_, g, words_, dst, scratch);
    return GSet(group_, std::move(dst));
}

GSet GSet::negated() const {
    std::vector<Word> w(words_.size(), 0);
    for_each([&](std::uint32_t i) { detail::set_bit(w.data(), group_->neg(i)); });
    return GSet(group_, std::move(w));
}

GSet GSet::united(const GSet& other) const {
    require_same_group(*this, other, "union");
    std::vector<Word> w(words_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = words_[i] | other.words_[i];
    return GSet(group_, std::move(w));
}

GSet GSet::intersected(const GSet& other) const {
    require_same_group(*this, other, "intersection");
    std::vector<Word> w(words_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = words_[i] & other.words_[i];
    return GSet(group_, std::move(w));
}

GSet GSet::minus(const GSet& other) const {
    require_same_group(*this, other, "difference");
    std::vector<Word> w(words_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = words_[i] & ~other.words_[i];
    return GSet(group_, std::move(w));
}

GSet GSet::complement() const {
    std::vector<Word> w(words_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ~words_[i];
    return GSet(group_, std::move(w));
}

GSet GSet::with(std::uint32_t g) const {
    if (g >= group_->order()) throw std::out_of_range("with: element index out of range");
    std::vector<Word> w = words_;
    detail::set_bit(w.data(), g);
    return GSet(group_, std::move(w));
}

GSet GSet::without(std::uint32_t g) const {
    if (g >= group_->order()) throw std::out_of_range("without: element index out of range");
    std::vector<Word> w = words_;
    detail::clear_bit(w.data(), g);
    return GSet(group_, std::move(w));
}

bool GSet::subset_of(const GSet& other) const {
    require_same_group(*this, other, "subset");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool GSet::intersects(const GSet& other) const {
    require_same_group(*this, other, "intersects");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool GSet::operator==(const GSet& other) const {
    return same_group(group_, other.group_) && words_ == other.words_;
}

std::string GSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](std::uint32_t i) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    });
    s += "}";
    return s;
}

}  // namespace addcomb
