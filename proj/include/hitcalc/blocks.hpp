#pragma once

// Block calculus: the bijection between monomials and n-row binary arrays,
// omega/alpha-vectors, left/right orders, Ferrers blocks, the
// column-position correspondence, the semistandard predicate and the
// numeric mu/alpha functions.
//
// A block is a view over its backing monomial: row i, read left to right,
// is the reversed binary expansion of exponent d_i. Trailing zero columns
// are never stored, so the all-zero block has zero columns. Rows and
// columns are 1-based in the public API.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hitcalc/errors.hpp"
#include "hitcalc/poly.hpp"
#include "hitcalc/tableaux.hpp"

namespace hitcalc {

// Number of 1-digits in the binary expansion of d.
inline unsigned alpha_count(unsigned long long d) {
    return static_cast<unsigned>(std::popcount(d));
}

// Least k with d = sum of k terms of the form 2^lambda - 1 (lambda >= 1);
// mu(0) = 0.
inline unsigned mu(unsigned long long d) {
    if (d == 0) return 0;
    // memoized search over exponential partitions, largest part first
    static thread_local std::map<std::pair<unsigned long long, unsigned>, bool> memo;
    auto can = [&](auto&& self, unsigned long long rem, unsigned k,
                   unsigned long long max_part) -> bool {
        if (rem == 0) return k == 0;
        if (k == 0) return false;
        auto it = memo.find({rem, k});
        if (it != memo.end() && max_part >= rem) return it->second;
        bool ok = false;
        for (unsigned long long part = 1; part <= rem && part <= max_part; part = part * 2 + 1)
            if (self(self, rem - part, k - 1, part)) {
                ok = true;
                break;
            }
        if (max_part >= rem) memo[{rem, k}] = ok;
        return ok;
    };
    for (unsigned k = 1;; ++k)
        if (can(can, d, k, d)) return k;
}

// Vector of column sums of a block, with trailing zeros normalized away.
class OmegaVector {
public:
    OmegaVector() = default;
    explicit OmegaVector(std::vector<unsigned> entries) : entries_(std::move(entries)) {
        while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    }

    const std::vector<unsigned>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    unsigned entry(std::size_t j) const { return j >= 1 && j <= entries_.size() ? entries_[j - 1] : 0; } // 1-based

    // The degree of any block realizing this omega-vector.
    unsigned long long weight() const {
        unsigned long long w = 0;
        for (std::size_t j = 0; j < entries_.size(); ++j)
            w += static_cast<unsigned long long>(entries_[j]) << j;
        return w;
    }

    bool descending() const {
        for (std::size_t j = 1; j < entries_.size(); ++j)
            if (entries_[j - 1] < entries_[j]) return false;
        return true;
    }

    static OmegaVector parse(std::string_view text) {
        std::vector<unsigned> v;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("omega-vector: expected digit at position " + std::to_string(pos), pos);
            unsigned x = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                x = x * 10 + (text[pos++] - '0');
            v.push_back(x);
            if (pos < text.size()) {
                if (text[pos] != ',')
                    throw ParseError("omega-vector: expected ',' at position " + std::to_string(pos), pos);
                ++pos;
            }
        }
        return OmegaVector(std::move(v));
    }

    std::string render() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t j = 0; j < entries_.size(); ++j) {
            if (j) os << ',';
            os << entries_[j];
        }
        os << ')';
        return os.str();
    }

    bool operator==(const OmegaVector&) const = default;

private:
    std::vector<unsigned> entries_;
};

// Left order: the first differing entry decides, larger entry greater.
inline std::strong_ordering cmp_left(const OmegaVector& a, const OmegaVector& b) {
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t j = 1; j <= len; ++j) {
        if (auto c = a.entry(j) <=> b.entry(j); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// Right order: the last differing entry decides, with the *smaller* entry
// greater (reverse sense).
inline std::strong_ordering cmp_right(const OmegaVector& a, const OmegaVector& b) {
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t j = len; j >= 1; --j) {
        if (auto c = b.entry(j) <=> a.entry(j); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

class Block {
public:
    explicit Block(Monomial m) : m_(std::move(m)) {}

    const Monomial& monomial() const { return m_; }
    unsigned rows() const { return m_.n(); }
    unsigned degree() const { return m_.degree(); }

    unsigned columns() const {
        unsigned c = 0;
        for (unsigned e : m_.exponents())
            c = std::max(c, static_cast<unsigned>(std::bit_width(e)));
        return c;
    }

    // 1-based digit at row i, column j.
    bool digit(unsigned i, unsigned j) const {
        return (m_.exponent(i) >> (j - 1)) & 1u;
    }

    OmegaVector omega() const { return omega_truncated(rows()); }

    // omega-vector of the subblock of the first r rows.
    OmegaVector omega_truncated(unsigned r) const {
        std::vector<unsigned> sums(columns(), 0);
        for (unsigned i = 1; i <= std::min(r, rows()); ++i)
            for (unsigned j = 1; j <= columns(); ++j)
                if (digit(i, j)) ++sums[j - 1];
        return OmegaVector(std::move(sums));
    }

    // Row sums; entry i is alpha(exponent d_i).
    std::vector<unsigned> alpha() const {
        std::vector<unsigned> a;
        a.reserve(rows());
        for (unsigned e : m_.exponents()) a.push_back(alpha_count(e));
        return a;
    }

    // omega(F[i]) descending for every truncation level i.
    bool is_semistandard() const {
        for (unsigned i = 1; i <= rows(); ++i)
            if (!omega_truncated(i).descending()) return false;
        return true;
    }

    // Rows of 0/1 digits separated by '/'; fewer than n rows are padded
    // with zero rows at the bottom.
    static Block parse(std::string_view text, unsigned n) {
        std::vector<unsigned> exps;
        std::size_t start = 0;
        while (true) {
            std::size_t slash = text.find('/', start);
            std::string_view row = text.substr(
                start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
            unsigned e = 0;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] == '1')
                    e |= 1u << j;
                else if (row[j] != '0')
                    throw ParseError("block row: expected 0/1 digit at position " +
                                         std::to_string(start + j),
                                     start + j);
            }
            exps.push_back(e);
            if (slash == std::string_view::npos) break;
            start = slash + 1;
        }
        if (exps.size() > n)
            throw ParseError("block has " + std::to_string(exps.size()) + " rows, expected at most " +
                             std::to_string(n));
        exps.resize(n, 0);
        return Block(Monomial(n, std::move(exps)));
    }

    std::string render() const {
        std::ostringstream os;
        unsigned c = columns();
        for (unsigned i = 1; i <= rows(); ++i) {
            if (i > 1) os << '/';
            unsigned e = m_.exponent(i);
            if (e == 0) {
                os << '0';
                continue;
            }
            for (unsigned j = 0; j < c && (e >> j) != 0; ++j) os << ((e >> j) & 1u);
        }
        return os.str();
    }

    auto operator<=>(const Block& other) const { return m_ <=> other.m_; }
    bool operator==(const Block&) const = default;

private:
    Monomial m_;
};

inline Block block_of(const Monomial& m) { return Block(m); }
inline Monomial monomial_of(const Block& b) { return b.monomial(); }

// Column-position correspondence: column j of the result lists, top-down,
// the row positions of the 1-digits in column j of the block. A column
// with no 1-digits leaves placeholder zeros.
inline Tableau cp(const Block& b) {
    unsigned cols = b.columns();
    std::vector<std::vector<unsigned>> columns(cols);
    std::size_t height = 0;
    for (unsigned j = 1; j <= cols; ++j) {
        for (unsigned i = 1; i <= b.rows(); ++i)
            if (b.digit(i, j)) columns[j - 1].push_back(i);
        height = std::max(height, columns[j - 1].size());
    }
    std::vector<std::vector<unsigned>> rows(height);
    for (std::size_t i = 0; i < height; ++i) {
        rows[i].assign(cols, 0);
        for (unsigned j = 0; j < cols; ++j)
            if (i < columns[j].size()) rows[i][j] = columns[j][i];
    }
    return Tableau(std::move(rows));
}

inline Block cp_inverse(const Tableau& t, unsigned n) {
    if (!t.is_column_strict())
        throw DomainError("cp_inverse: array is not column strict");
    std::vector<unsigned> exps(n, 0);
    std::size_t cols = t.column_count();
    for (unsigned j = 1; j <= cols; ++j) {
        for (unsigned i = 1; i <= t.row_count(); ++i) {
            unsigned e = t.entry(i, static_cast<unsigned>(j));
            if (e == 0) continue;
            if (e > n)
                throw DomainError("cp_inverse: entry " + std::to_string(e) +
                                  " exceeds row count " + std::to_string(n));
            exps[e - 1] |= 1u << (j - 1);
        }
    }
    return Block(Monomial(n, std::move(exps)));
}

// Row i carries lambda_i contiguous 1-digits; rows beyond the length of
// lambda are zero.
inline Block ferrers_block(const Partition& lambda, unsigned n) {
    if (lambda.length() > n)
        throw DomainError("ferrers_block: partition longer than row count");
    std::vector<unsigned> exps(n, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i)
        exps[i] = (1u << lambda.part(i)) - 1;
    return Block(Monomial(n, std::move(exps)));
}

// All descending omega-vectors of weight d with entries at most n, sorted
// ascending in left order. Column sums bounded by n is the only
// realizability constraint in P(n).
inline std::vector<OmegaVector> descending_omegas(unsigned long long d, unsigned n) {
    std::vector<OmegaVector> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned long long rem, unsigned maxe,
                   unsigned long long place) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        // entry at this place must match the parity of rem / place
        for (unsigned e = 1; e <= maxe && e * place <= rem; ++e) {
            if ((rem / place) % 2 != e % 2) continue;
            cur.push_back(e);
            self(self, rem - e * place, e, place * 2);
            cur.pop_back();
        }
    };
    rec(rec, d, n, 1);
    std::sort(out.begin(), out.end(), [](const OmegaVector& a, const OmegaVector& b) {
        return cmp_left(a, b) < 0;
    });
    return out;
}

// The strictly decreasing lambda_1 > ... > lambda_n >= 0 with
// d = sum (2^lambda_i - 1), when it exists.
inline std::optional<Partition> row_regular_partition(unsigned long long d, unsigned n) {
    std::vector<unsigned> lam;
    auto rec = [&](auto&& self, unsigned long long rem, unsigned parts_left,
                   unsigned max_exp) -> bool {
        if (parts_left == 0) return rem == 0;
        // remaining parts are strictly decreasing below max_exp
        for (unsigned l = max_exp + 1; l-- > 0;) {
            if (l + 1 < parts_left) break; // cannot fit strictly decreasing tail
            unsigned long long part = (1ULL << l) - 1;
            if (part > rem) continue;
            // the largest possible tail with exponents l-1, l-2, ...
            unsigned long long max_tail = 0;
            for (unsigned t = 1; t < parts_left; ++t)
                max_tail += (l >= t ? (1ULL << (l - t)) - 1 : 0);
            if (part + max_tail < rem) break;
            lam.push_back(l);
            if (self(self, rem - part, parts_left - 1, l == 0 ? 0 : l - 1)) return true;
            lam.pop_back();
        }
        return false;
    };
    unsigned max_exp = 0;
    while ((1ULL << (max_exp + 1)) - 1 <= d) ++max_exp;
    if (rec(rec, d, n, max_exp)) return Partition(std::move(lam));
    return std::nullopt;
}

// cp_inverse of every semistandard tableau of the conjugate shape of the
// unique descending omega-vector in degree d. Errors when the degree does
// not admit exactly one descending omega-vector.
inline std::vector<Block> semistandard_blocks(unsigned long long d, unsigned n) {
    auto omegas = descending_omegas(d, n);
    if (omegas.size() != 1) {
        std::string list;
        for (const auto& w : omegas) {
            if (!list.empty()) list += ", ";
            list += w.render();
        }
        throw DomainError("semistandard_blocks: degree " + std::to_string(d) + " in P(" +
                          std::to_string(n) + ") admits " + std::to_string(omegas.size()) +
                          " descending omega-vectors" + (list.empty() ? "" : " (" + list + ")"));
    }
    // conjugate of omega is the tableau shape
    Partition shape = Partition(omegas[0].entries()).conjugate();
    std::vector<Block> out;
    for (const auto& t : enumerate_ssyt(shape, n)) out.push_back(cp_inverse(t, n));
    return out;
}

} // namespace hitcalc
