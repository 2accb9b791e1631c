#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ulam {

// Packed bit vector with word-level access. Bit i lives in word i/64 at
// position i%64. Sized in whole words; bits past size() are kept zero so
// word-granular scans stay clean.
class BitVec {
  public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BitVec() = default;
    explicit BitVec(std::size_t nbits) { resize(nbits); }

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    // Grows or shrinks; new bits are zero, and on shrink the bits past the
    // new size are cleared.
    void resize(std::size_t nbits) {
        nbits_ = nbits;
        words_.resize((nbits + 63) / 64, 0);
        clear_tail();
    }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    // Index of the first set bit at or after `from`, npos if none.
    std::size_t find_next_set(std::size_t from) const {
        if (from >= nbits_) return npos;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                std::size_t i = (w << 6) + std::countr_zero(cur);
                return i < nbits_ ? i : npos;
            }
            if (++w >= words_.size()) return npos;
            cur = words_[w];
        }
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

  private:
    void clear_tail() {
        if (nbits_ & 63) words_.back() &= (std::uint64_t(1) << (nbits_ & 63)) - 1;
    }

    std::vector<std::uint64_t> words_;
    std::size_t nbits_ = 0;
};

}  // namespace ulam
