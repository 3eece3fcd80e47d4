#pragma once

// Dense bit-packed linear algebra over F_2. Rows are vectors of 64-bit
// words; elimination is plain Gaussian with the pivot at the first set bit,
// fully deterministic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "hitcalc/errors.hpp"

namespace hitcalc {

using BitRow = std::vector<std::uint64_t>;

inline std::size_t bitrow_words(std::size_t cols) { return (cols + 63) / 64; }

inline void bitrow_set(BitRow& r, std::size_t i) { r[i / 64] |= std::uint64_t(1) << (i % 64); }
inline void bitrow_flip(BitRow& r, std::size_t i) { r[i / 64] ^= std::uint64_t(1) << (i % 64); }
inline bool bitrow_test(const BitRow& r, std::size_t i) {
    return (r[i / 64] >> (i % 64)) & 1u;
}

inline void bitrow_xor(BitRow& a, const BitRow& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

inline bool bitrow_zero(const BitRow& r) {
    for (auto w : r)
        if (w) return false;
    return true;
}

// Index of the first set bit, or npos.
inline std::size_t bitrow_first(const BitRow& r) {
    for (std::size_t w = 0; w < r.size(); ++w)
        if (r[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(r[w]));
    return static_cast<std::size_t>(-1);
}

// Row space accumulated in echelon form: rows are kept sorted by pivot
// column, pivot columns strictly increasing, each row's first set bit is
// its pivot.
class F2Matrix {
public:
    explicit F2Matrix(std::size_t cols) : cols_(cols), words_(bitrow_words(cols)) {}

    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitRow>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    BitRow zero_row() const { return BitRow(words_, 0); }

    // Reduce v against the echelon rows (clears every pivot bit).
    void reduce(BitRow& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (bitrow_test(v, pivots_[r])) bitrow_xor(v, rows_[r]);
    }

    bool contains(BitRow v) const {
        reduce(v);
        return bitrow_zero(v);
    }

    // Reduce and, if nonzero, insert keeping echelon order. Returns true
    // when the rank grew.
    bool insert(BitRow v) {
        reduce(v);
        std::size_t p = bitrow_first(v);
        if (p == static_cast<std::size_t>(-1)) return false;
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

private:
    std::size_t cols_;
    std::size_t words_;
    std::vector<BitRow> rows_;       // echelon rows, pivot ascending
    std::vector<std::size_t> pivots_;
};

} // namespace hitcalc
