#pragma once

#include <cstdint>
#include <vector>

namespace sumgraph {

// Fixed-capacity bitset sized at runtime. Rows of the adjacency matrix and
// residue-set membership both live here, so neighborhood unions and sumset
// convolutions are word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    // Cyclic rotation by k positions within the nbits_ ring; the carrier of
    // the shift-or sumset convolution.
    Bitset rotated(int k) const {
        Bitset out(nbits_);
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) out.set((i + k) % nbits_);
        return out;
    }

    // First set bit at or after `from`, or -1.
    int next(int from) const {
        for (int i = from; i < nbits_; ++i) {
            uint64_t w = words_[i >> 6] >> (i & 63);
            if (w == 0) {
                i = ((i >> 6) + 1) * 64 - 1;
                continue;
            }
            return i + __builtin_ctzll(w);
        }
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace sumgraph
