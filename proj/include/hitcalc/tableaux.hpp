#pragma once

// Partitions, Young tableaux, the hook-length counting formula and
// semistandard tableau enumeration.

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hitcalc/errors.hpp"

namespace hitcalc {

// Weakly decreasing sequence of positive parts; trailing zeros are stripped
// on construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw DomainError("Partition: parts must be weakly decreasing");
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; } // 0-based
    unsigned size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    bool empty() const { return parts_.empty(); }

    // 1-based node test.
    bool contains(unsigned i, unsigned j) const {
        return i >= 1 && i <= parts_.size() && j >= 1 && j <= parts_[i - 1];
    }

    Partition conjugate() const {
        std::vector<unsigned> c;
        if (parts_.empty()) return Partition{};
        c.resize(parts_[0], 0);
        for (unsigned p : parts_)
            for (unsigned j = 0; j < p; ++j) ++c[j];
        return Partition(std::move(c));
    }

    // The staircase (n-1, n-2, ..., 1).
    static Partition staircase(unsigned n) {
        std::vector<unsigned> p;
        for (unsigned i = n; i-- > 1;) p.push_back(i);
        return Partition(std::move(p));
    }

    static Partition parse(std::string_view text) {
        std::vector<unsigned> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("partition: expected digit at position " + std::to_string(pos), pos);
            unsigned v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            parts.push_back(v);
            if (pos < text.size()) {
                if (text[pos] != ',')
                    throw ParseError("partition: expected ',' at position " + std::to_string(pos), pos);
                ++pos;
            }
        }
        return Partition(std::move(parts));
    }

    std::string render() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<unsigned> parts_;
};

// Ragged filling of a diagram. Entry 0 is a placeholder for an empty cell;
// it occurs only in column-position arrays of blocks whose omega-vector has
// an internal zero, never in a semistandard tableau.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<unsigned>> rows) : rows_(std::move(rows)) {
        for (auto& r : rows_)
            while (!r.empty() && r.back() == 0) r.pop_back();
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    }

    const std::vector<std::vector<unsigned>>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }

    // 1-based cell access; 0 outside the stored rows.
    unsigned entry(unsigned i, unsigned j) const {
        if (i < 1 || i > rows_.size()) return 0;
        const auto& r = rows_[i - 1];
        if (j < 1 || j > r.size()) return 0;
        return r[j - 1];
    }

    std::size_t column_count() const {
        std::size_t c = 0;
        for (const auto& r : rows_) c = std::max(c, r.size());
        return c;
    }

    // Nonzero entries strictly increase down every column.
    bool is_column_strict() const {
        std::size_t cols = column_count();
        for (std::size_t j = 1; j <= cols; ++j) {
            unsigned prev = 0;
            for (std::size_t i = 1; i <= rows_.size(); ++i) {
                unsigned e = entry(static_cast<unsigned>(i), static_cast<unsigned>(j));
                if (e == 0) continue;
                if (prev != 0 && e <= prev) return false;
                prev = e;
            }
        }
        return true;
    }

    // Partition-shaped, no empty cells, rows weakly increasing, columns
    // strictly increasing.
    bool is_semistandard() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i + 1 < rows_.size() && rows_[i].size() < rows_[i + 1].size()) return false;
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                unsigned e = rows_[i][j];
                if (e == 0) return false;
                if (j > 0 && rows_[i][j - 1] > e) return false;
                if (i > 0) {
                    if (rows_[i - 1].size() < j + 1) return false;
                    if (rows_[i - 1][j] >= e) return false;
                }
            }
        }
        return true;
    }

    Partition shape() const {
        std::vector<unsigned> parts;
        for (const auto& r : rows_) parts.push_back(static_cast<unsigned>(r.size()));
        return Partition(std::move(parts));
    }

    std::string render() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) os << '/';
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) os << ',';
                os << rows_[i][j];
            }
        }
        return os.str();
    }

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

private:
    std::vector<std::vector<unsigned>> rows_;
};

// Hook length of node (i,j): arm + leg + 1. 1-based.
inline unsigned hook_length(const Partition& shape, unsigned i, unsigned j) {
    if (!shape.contains(i, j))
        throw DomainError("hook_length: node (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside shape");
    unsigned arm = shape.part(i - 1) - j;
    unsigned leg = 0;
    for (std::size_t r = i; r < shape.length(); ++r)
        if (shape.part(r) >= j) ++leg;
    return arm + leg + 1;
}

// Number of semistandard tableaux of the given shape with entries in 1..m,
// by the product formula prod (m+j-i)/h(i,j). The quotient is an integer
// but partial products need not divide termwise, so the running numerator
// and denominator are reduced by gcd at each step in 128-bit arithmetic.
inline unsigned long long hook_count(const Partition& shape, unsigned m) {
    unsigned __int128 num = 1, den = 1;
    for (unsigned i = 1; i <= shape.length(); ++i) {
        for (unsigned j = 1; j <= shape.part(i - 1); ++j) {
            long long content = static_cast<long long>(m) + j - i;
            if (content <= 0) return 0;
            num *= static_cast<unsigned __int128>(content);
            den *= hook_length(shape, i, j);
            unsigned __int128 x = num, y = den;
            while (y != 0) {
                unsigned __int128 t = x % y;
                x = y;
                y = t;
            }
            num /= x;
            den /= x;
        }
    }
    // den divides num exactly once all nodes are in
    return static_cast<unsigned long long>(num / den);
}

// All semistandard tableaux of the shape with entries in 1..m, ordered
// lexicographically on the row-reading word.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, unsigned m) {
    std::vector<Tableau> out;
    if (shape.length() > m) return out; // first column cannot be strictly increasing
    std::vector<std::vector<unsigned>> rows(shape.length());
    for (std::size_t i = 0; i < shape.length(); ++i) rows[i].assign(shape.part(i), 0);

    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == rows.size()) {
            out.emplace_back(rows);
            return;
        }
        if (j == rows[i].size()) {
            self(self, i + 1, 0);
            return;
        }
        unsigned lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);                 // rows weakly increase
        if (i > 0 && j < rows[i - 1].size()) lo = std::max(lo, rows[i - 1][j] + 1); // columns strict
        for (unsigned v = lo; v <= m; ++v) {
            rows[i][j] = v;
            self(self, i, j + 1);
        }
        rows[i][j] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace hitcalc
