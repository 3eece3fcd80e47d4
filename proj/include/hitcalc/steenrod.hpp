#pragma once

// Action of the Steenrod squares and their conjugates on polynomials
// over F_2.
//
// On a single variable power, Sq^j(x^d) = C(d,j) x^{d+j} mod 2 (the closed
// form obtained by iterating the Cartan formula; C(d,j) is odd exactly when
// j is a binary submask of d). A square acts on a monomial by convolving
// these single-variable contributions across the variables.

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "hitcalc/errors.hpp"
#include "hitcalc/poly.hpp"

namespace hitcalc {

inline bool binomial_odd(unsigned d, unsigned j) {
    return j <= d && ((j & (d - j)) == 0);
}

inline Polynomial sq(unsigned k, const Polynomial& p) {
    Polynomial result(p.n());
    const unsigned n = p.n();
    for (const auto& m : p.terms()) {
        // dp[j] = partial exponent vectors absorbing j of the k, variable by
        // variable. Prefixes are pairwise distinct (the target exponent
        // determines the contribution), so no intermediate cancellation.
        std::vector<std::vector<std::vector<unsigned>>> dp(k + 1);
        dp[0].push_back({});
        for (unsigned i = 0; i < n; ++i) {
            unsigned d = m.exponents()[i];
            std::vector<std::vector<std::vector<unsigned>>> next(k + 1);
            for (unsigned used = 0; used <= k; ++used) {
                if (dp[used].empty()) continue;
                for (unsigned j = 0; used + j <= k; ++j) {
                    if (!binomial_odd(d, j)) continue;
                    for (const auto& prefix : dp[used]) {
                        auto ext = prefix;
                        ext.push_back(d + j);
                        next[used + j].push_back(std::move(ext));
                    }
                }
            }
            dp = std::move(next);
        }
        for (auto& exps : dp[k]) result.toggle(Monomial(n, std::move(exps)));
    }
    return result;
}

namespace detail {

// chi(Sq^k) expanded as an F_2 sum of Sq-composition words via the Hopf
// antipode recursion chi(Sq^k) = sum_{i=1..k} Sq^i chi(Sq^{k-i}).
// Words are stored as index sequences applied right to left. The memo is a
// process-wide idempotent cache.
inline const std::vector<std::vector<unsigned>>& chi_words(unsigned k) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<std::vector<unsigned>>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    if (memo.empty()) memo[0] = {{}};
    for (unsigned kk = 1; kk <= k; ++kk) {
        if (memo.count(kk)) continue;
        std::set<std::vector<unsigned>> acc;
        for (unsigned i = 1; i <= kk; ++i) {
            for (const auto& w : memo.at(kk - i)) {
                std::vector<unsigned> word;
                word.reserve(w.size() + 1);
                word.push_back(i);
                word.insert(word.end(), w.begin(), w.end());
                auto pos = acc.find(word);
                if (pos == acc.end())
                    acc.insert(std::move(word));
                else
                    acc.erase(pos); // mod 2 cancellation
            }
        }
        memo[kk] = std::vector<std::vector<unsigned>>(acc.begin(), acc.end());
    }
    return memo.at(k);
}

} // namespace detail

// Action of the conjugate square chi(Sq^k).
inline Polynomial chi_sq(unsigned k, const Polynomial& p) {
    Polynomial result(p.n());
    for (const auto& word : detail::chi_words(k)) {
        Polynomial q = p;
        for (auto it = word.rbegin(); it != word.rend(); ++it) q = sq(*it, q);
        result += q;
    }
    return result;
}

// [p, Sq^1(p), Sq^2(p), ...] up to total degree max_degree. Requires p
// homogeneous.
inline std::vector<Polynomial> total_sq(const Polynomial& p, unsigned max_degree) {
    auto deg = p.homogeneous_degree();
    if (!p.is_zero() && !deg)
        throw DomainError("total_sq: polynomial is not homogeneous");
    unsigned d = deg.value_or(0);
    if (max_degree < d)
        throw DomainError("total_sq: max_degree below the degree of the polynomial");
    std::vector<Polynomial> out;
    for (unsigned k = 0; k + d <= max_degree; ++k) out.push_back(sq(k, p));
    return out;
}

// Apply a composition word Sq^{w_1} Sq^{w_2} ... (rightmost factor first).
inline Polynomial apply_sq_word(const std::vector<unsigned>& word, const Polynomial& p) {
    Polynomial q = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) q = sq(*it, q);
    return q;
}

// True iff the composite lhs equals the F_2 sum of the composite rhs words
// on every monomial of P^d(n) for d <= dmax.
inline bool verify_relation(const std::vector<unsigned>& lhs,
                            const std::vector<std::vector<unsigned>>& rhs, unsigned n,
                            unsigned dmax) {
    for (unsigned d = 0; d <= dmax; ++d) {
        for (const auto& m : monomials_of_degree(n, d)) {
            Polynomial p(m);
            Polynomial left = apply_sq_word(lhs, p);
            Polynomial right(n);
            for (const auto& w : rhs) right += apply_sq_word(w, p);
            if (left != right) return false;
        }
    }
    return true;
}

} // namespace hitcalc
