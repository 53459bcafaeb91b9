#pragma once

#include <cstdint>
#include <vector>

namespace lattica {

// Square boolean matrix packed 64 relations per word, one row per element.
// Used for the order relation, where row x holds the up-set of x.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }

    bool get(int r, int c) const {
        return (bits_[static_cast<size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c) {
        bits_[static_cast<size_t>(r) * words_ + (c >> 6)] |= uint64_t{1} << (c & 63);
    }
    void clear(int r, int c) {
        bits_[static_cast<size_t>(r) * words_ + (c >> 6)] &= ~(uint64_t{1} << (c & 63));
    }

    const uint64_t* row(int r) const { return bits_.data() + static_cast<size_t>(r) * words_; }
    uint64_t* row(int r) { return bits_.data() + static_cast<size_t>(r) * words_; }
    int words() const { return words_; }

    // row r |= row s
    void or_row(int r, int s) {
        uint64_t* a = row(r);
        const uint64_t* b = row(s);
        for (int w = 0; w < words_; ++w) a[w] |= b[w];
    }

    int popcount_row(int r) const {
        const uint64_t* a = row(r);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w]);
        return c;
    }

    bool operator==(const BitMatrix& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace lattica
