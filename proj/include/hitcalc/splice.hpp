#pragma once

// The k-splicing operator on blocks and the straightening algorithm that
// rewrites a descending-omega block as a formal sum of semistandard blocks.

#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "hitcalc/blocks.hpp"
#include "hitcalc/errors.hpp"

namespace hitcalc {

// F_2 formal sum of blocks; duplicates cancel eagerly.
class BlockSum {
public:
    explicit BlockSum(unsigned n) : n_(n) {}

    unsigned n() const { return n_; }
    bool is_zero() const { return blocks_.empty(); }
    const std::set<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }

    void toggle(const Block& b) {
        if (b.rows() != n_)
            throw DomainError("BlockSum: mismatched row count");
        auto it = blocks_.find(b);
        if (it == blocks_.end())
            blocks_.insert(b);
        else
            blocks_.erase(it);
    }

    BlockSum& operator+=(const BlockSum& other) {
        if (other.n_ != n_)
            throw DomainError("BlockSum add: mismatched row count");
        if (this == &other) { // x + x = 0 over F_2
            blocks_.clear();
            return *this;
        }
        for (const auto& b : other.blocks_) toggle(b);
        return *this;
    }

    Polynomial to_polynomial() const {
        Polynomial p(n_);
        for (const auto& b : blocks_) p.toggle(b.monomial());
        return p;
    }

    bool operator==(const BlockSum&) const = default;

private:
    unsigned n_;
    std::set<Block> blocks_;
};

// k-splicing of b at column position col = t+2 and row positions S: the sum
// over all k-element row sets T disjoint from S carrying the (1,0) pattern
// at columns (t+1, t+2) of the block that swaps those digit pairs. Zero when
// fewer than k eligible rows exist. S itself must carry the (0,1) pattern.
inline BlockSum k_splice(const Block& b, unsigned k, unsigned col,
                         const std::set<unsigned>& S) {
    const unsigned n = b.rows();
    if (col < 2)
        throw DomainError("k_splice: column position must be at least 2");
    if (S.size() != k)
        throw DomainError("k_splice: |S| = " + std::to_string(S.size()) +
                          " does not match k = " + std::to_string(k));
    if (k == 0 || k > n)
        throw DomainError("k_splice: k must be between 1 and the row count");
    for (unsigned i : S) {
        if (i < 1 || i > n)
            throw DomainError("k_splice: row index " + std::to_string(i) + " out of range");
        if (!(b.digit(i, col) && !b.digit(i, col - 1)))
            throw DomainError("k_splice: row " + std::to_string(i) +
                              " does not carry the (0,1) pattern at columns " +
                              std::to_string(col - 1) + "," + std::to_string(col));
    }

    std::vector<unsigned> eligible; // rows outside S with the (1,0) pattern
    for (unsigned i = 1; i <= n; ++i)
        if (!S.count(i) && b.digit(i, col - 1) && !b.digit(i, col)) eligible.push_back(i);

    BlockSum sum(n);
    if (eligible.size() < k) return sum;

    const unsigned lo = 1u << (col - 2), hi = 1u << (col - 1);
    std::vector<unsigned> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == k) {
            std::vector<unsigned> exps = b.monomial().exponents();
            for (unsigned i : S) exps[i - 1] = exps[i - 1] - hi + lo; // digit col -> col-1
            for (unsigned i : pick) exps[i - 1] = exps[i - 1] - lo + hi; // digit col-1 -> col
            sum.toggle(Block(Monomial(n, std::move(exps))));
            return;
        }
        for (std::size_t idx = from; idx < eligible.size(); ++idx) {
            pick.push_back(eligible[idx]);
            self(self, idx + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return sum;
}

// Smallest column t+1 with omega_{t+1}(b[r]) < omega_{t+2}(b[r]); absent if
// omega(b[r]) is descending.
inline std::optional<unsigned> first_violation(const Block& b, unsigned r) {
    if (r < 1 || r > b.rows())
        throw DomainError("first_violation: level out of range");
    OmegaVector w = b.omega_truncated(r);
    for (std::size_t j = 1; j < w.size(); ++j)
        if (w.entry(j) < w.entry(j + 1)) return static_cast<unsigned>(j);
    return std::nullopt;
}

// Iterated splicing until every block is semistandard. At each step the
// smallest block with a non-descending truncation is spliced at its deepest
// violating level r, smallest violating column, with S = all rows i <= r
// carrying the (0,1) pattern there.
//
// A splice can re-break a level above r (moving digits forward below level
// r lowers column t+2 of deeper truncations), so a single bottom-up pass
// over levels is not enough. Termination: such a splice strictly increases
// omega(.[r]) in left order and weakly increases omega(.[i]) for every
// i > r, while omega(.[n]) is invariant; the tuple
// (omega(.[n-1]), ..., omega(.[1])) therefore strictly increases
// lexicographically, and it is bounded (entries <= n, length <= column
// count).
inline BlockSum straighten(const Block& b) {
    const unsigned n = b.rows();
    if (!b.omega().descending()) {
        unsigned col = first_violation(b, n).value();
        throw DomainError("straighten: omega-vector " + b.omega().render() +
                          " is not descending (violation at column " + std::to_string(col) +
                          ")");
    }
    BlockSum cur(n);
    cur.toggle(b);
    while (true) {
        const Block* violating = nullptr;
        unsigned level = 0, t1 = 0;
        for (const auto& g : cur.blocks()) {
            for (unsigned r = n; r-- > 1;) { // omega(.[n]) stays descending throughout
                if (auto v = first_violation(g, r)) {
                    violating = &g;
                    level = r;
                    t1 = *v;
                    break;
                }
            }
            if (violating) break;
        }
        if (!violating) break;
        Block g = *violating;
        unsigned col = t1 + 1; // t+2 in 1-based columns
        std::set<unsigned> S;
        for (unsigned i = 1; i <= level; ++i)
            if (g.digit(i, col) && !g.digit(i, col - 1)) S.insert(i);
        BlockSum spliced = k_splice(g, static_cast<unsigned>(S.size()), col, S);
        cur.toggle(g);
        cur += spliced;
    }
    return cur;
}

} // namespace hitcalc
