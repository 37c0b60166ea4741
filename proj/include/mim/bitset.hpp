#ifndef MIM_BITSET_HPP
#define MIM_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace mim {

// Run-time sized bit set. Conflict graphs at desk scale stay under a few
// hundred nodes, so a row is a handful of 64-bit words and neighborhood
// exclusion is a few word ops.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }

    void set(int i) { words_[word(i)] |= mask(i); }
    void reset(int i) { words_[word(i)] &= ~mask(i); }
    bool test(int i) const { return words_[word(i)] & mask(i); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int intersection_count(const Bitset& o) const {
        assert(bits_ == o.bits_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // First set bit, or -1 when empty.
    int find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return 64 * static_cast<int>(i) + std::countr_zero(words_[i]);
        return -1;
    }

    // First set bit strictly after i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= bits_) return -1;
        std::size_t w = word(i);
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
        if (cur) return 64 * static_cast<int>(w) + std::countr_zero(cur);
        for (++w; w < words_.size(); ++w)
            if (words_[w]) return 64 * static_cast<int>(w) + std::countr_zero(words_[w]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    static std::size_t word(int i) { return static_cast<std::size_t>(i) >> 6; }
    static std::uint64_t mask(int i) { return std::uint64_t{1} << (i & 63); }

    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mim

#endif
