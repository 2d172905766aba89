#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace addcomb::detail {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::uint64_t nbits) {
    return static_cast<std::size_t>((nbits + kWordBits - 1) / kWordBits);
}

inline bool get_bit(const Word* w, std::uint64_t pos) {
    return (w[pos / kWordBits] >> (pos % kWordBits)) & Word{1};
}

inline void set_bit(Word* w, std::uint64_t pos) {
    w[pos / kWordBits] |= Word{1} << (pos % kWordBits);
}

inline void clear_bit(Word* w, std::uint64_t pos) {
    w[pos / kWordBits] &= ~(Word{1} << (pos % kWordBits));
}

// Zeroes the bits at positions >= nbits in the last word.
inline void clear_tail(std::vector<Word>& w, std::uint64_t nbits) {
    const unsigned rem = nbits % kWordBits;
    if (rem != 0 && !w.empty()) w.back() &= (Word{1} << rem) - 1;
}

inline std::size_t popcount(std::span<const Word> w) {
    std::size_t n = 0;
    for (Word x : w) n += static_cast<std::size_t>(std::popcount(x));
    return n;
}

// Reads n <= 64 bits starting at bit position pos. When the read crosses a
// word boundary the next word must exist; callers guarantee pos+n is within
// the buffer.
inline Word read_bits(const Word* src, std::uint64_t pos, unsigned n) {
    const std::uint64_t w = pos / kWordBits;
    const unsigned b = static_cast<unsigned>(pos % kWordBits);
    Word lo = src[w] >> b;
    if (b != 0 && b + n > kWordBits) lo |= src[w + 1] << (kWordBits - b);
    if (n == kWordBits) return lo;
    return lo & ((Word{1} << n) - 1);
}

// Copies len bits from src[src_pos..) into dst[dst_pos..). Buffers must not
// overlap.
inline void copy_bits(Word* dst, std::uint64_t dst_pos, const Word* src,
                      std::uint64_t src_pos, std::uint64_t len) {
    while (len > 0) {
        const std::uint64_t dw = dst_pos / kWordBits;
        const unsigned db = static_cast<unsigned>(dst_pos % kWordBits);
        const unsigned take =
            static_cast<unsigned>(std::min<std::uint64_t>(len, kWordBits - db));
        const Word chunk = read_bits(src, src_pos, take);
        const Word mask =
            take == kWordBits ? ~Word{0} : ((Word{1} << take) - 1);
        dst[dw] = (dst[dw] & ~(mask << db)) | ((chunk & mask) << db);
        dst_pos += take;
        src_pos += take;
        len -= take;
    }
}

// Writes the bit range [off, off+len) of dst with the same range of src
// cyclically rotated by shift: dst bit (off + (i+shift) mod len) = src bit
// (off + i). shift must lie in [0, len].
inline void rotate_bits(Word* dst, const Word* src, std::uint64_t off,
                        std::uint64_t len, std::uint64_t shift) {
    if (shift == 0 || shift == len) {
        copy_bits(dst, off, src, off, len);
        return;
    }
    copy_bits(dst, off + shift, src, off, len - shift);
    copy_bits(dst, off, src, off + (len - shift), shift);
}

// Iterates set bits ascending, invoking fn(index).
template <class F>
inline void for_each_bit(std::span<const Word> w, F&& fn) {
    for (std::size_t wi = 0; wi < w.size(); ++wi) {
        Word x = w[wi];
        while (x != 0) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(x));
            x &= x - 1;
            fn(static_cast<std::uint64_t>(wi) * kWordBits + b);
        }
    }
}

}  // namespace addcomb::detail
