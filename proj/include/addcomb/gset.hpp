#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "addcomb/bits.hpp"
#include "addcomb/group.hpp"

namespace addcomb {

/// A subset of a finite abelian group, bitset-backed. Immutable after
/// construction; all operations return new sets. Cardinality is cached at
/// construction.
class GSet {
public:
    explicit GSet(Group group);  // empty set
    GSet(Group group, std::vector<detail::Word> words);

    static GSet full(Group group);
    static GSet from_indices(Group group, std::span<const std::uint32_t> indices);
    static GSet of(Group group, std::initializer_list<std::uint32_t> indices);
    static GSet singleton(Group group, std::uint32_t g);

    const Group& group() const noexcept { return group_; }
    std::uint64_t universe() const noexcept { return group_->order(); }
    std::uint64_t card() const noexcept { return card_; }
    bool empty() const noexcept { return card_ == 0; }
    bool is_full() const noexcept { return card_ == group_->order(); }
    bool contains(std::uint32_t g) const;

    std::vector<std::uint32_t> indices() const;
    template <class F>
    void for_each(F&& fn) const {
        detail::for_each_bit(std::span<const detail::Word>(words_),
                             [&](std::uint64_t i) { fn(static_cast<std::uint32_t>(i)); });
    }
    /// Smallest element; throws std::logic_error on the empty set.
    std::uint32_t first() const;

    GSet translated(std::uint32_t g) const;  // { x + g : x in S }
    GSet negated() const;                    // { -x : x in S }
    GSet united(const GSet& other) const;
    GSet intersected(const GSet& other) const;
    GSet minus(const GSet& other) const;
    GSet complement() const;
    GSet with(std::uint32_t g) const;
    GSet without(std::uint32_t g) const;

    bool subset_of(const GSet& other) const;
    bool intersects(const GSet& other) const;
    bool operator==(const GSet& other) const;

    const std::vector<detail::Word>& words() const noexcept { return words_; }

    std::string to_string() const;  // "{0,1,6,7}"

private:
    Group group_;
    std::vector<detail::Word> words_;
    std::uint64_t card_ = 0;
};

namespace detail {
/// Writes translate(src, g) into dst (raw word buffers over the group's
/// index space). dst and scratch must each hold words_for(order) zero-tailed
/// words; src is left untouched.
void translate_words(const GroupSpec& g, std::uint32_t shift,
                     const std::vector<Word>& src, std::vector<Word>& dst,
                     std::vector<Word>& scratch);
}  // namespace detail

void require_same_group(const GSet& a, const GSet& b, const char* op);

}  // namespace addcomb
