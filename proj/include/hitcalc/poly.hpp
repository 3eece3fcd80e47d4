#pragma once

// Exact arithmetic for monomials and polynomials over F_2 in n variables.
// All values are immutable after construction; every operation is a pure
// function, so values can be shared freely between threads.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/errors.hpp"

namespace hitcalc {

class Monomial {
public:
    Monomial(unsigned n, std::vector<unsigned> exponents)
        : n_(n), exps_(std::move(exponents)) {
        if (n_ == 0)
            throw DomainError("Monomial: variable count must be positive");
        if (exps_.size() != n_)
            throw DomainError("Monomial: expected " + std::to_string(n_) +
                              " exponents, got " + std::to_string(exps_.size()));
        degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
    }

    static Monomial one(unsigned n) { return Monomial(n, std::vector<unsigned>(n, 0)); }

    // 1-based variable index.
    static Monomial variable(unsigned n, unsigned i) {
        if (i < 1 || i > n)
            throw DomainError("Monomial::variable: index out of range");
        std::vector<unsigned> e(n, 0);
        e[i - 1] = 1;
        return Monomial(n, std::move(e));
    }

    unsigned n() const { return n_; }
    unsigned degree() const { return degree_; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned exponent(unsigned i) const { return exps_.at(i - 1); } // 1-based

    Monomial times(const Monomial& other) const {
        require_same_n(other);
        std::vector<unsigned> e(n_);
        for (unsigned i = 0; i < n_; ++i) e[i] = exps_[i] + other.exps_[i];
        return Monomial(n_, std::move(e));
    }

    Monomial pow(unsigned k) const {
        std::vector<unsigned> e(n_);
        for (unsigned i = 0; i < n_; ++i) e[i] = exps_[i] * k;
        return Monomial(n_, std::move(e));
    }

    // Canonical order: lexicographic on the exponent sequence.
    std::strong_ordering operator<=>(const Monomial& other) const {
        if (auto c = n_ <=> other.n_; c != 0) return c;
        return std::lexicographical_compare_three_way(
            exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end());
    }
    bool operator==(const Monomial& other) const = default;

private:
    void require_same_n(const Monomial& other) const {
        if (n_ != other.n_)
            throw DomainError("Monomial: mismatched variable count");
    }

    unsigned n_;
    std::vector<unsigned> exps_;
    unsigned degree_;
};

// Finite F_2-linear combination of monomials. The empty term set is zero;
// duplicates cancel on insertion.
class Polynomial {
public:
    explicit Polynomial(unsigned n) : n_(n) {
        if (n == 0)
            throw DomainError("Polynomial: variable count must be positive");
    }

    Polynomial(Monomial m) : n_(m.n()) { terms_.insert(std::move(m)); }

    static Polynomial zero(unsigned n) { return Polynomial(n); }
    static Polynomial one(unsigned n) { return Polynomial(Monomial::one(n)); }
    static Polynomial variable(unsigned n, unsigned i) {
        return Polynomial(Monomial::variable(n, i));
    }

    unsigned n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::set<Monomial>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Flip the coefficient of m (F_2 addition of a single term).
    void toggle(const Monomial& m) {
        if (m.n() != n_)
            throw DomainError("Polynomial: mismatched variable count");
        auto it = terms_.find(m);
        if (it == terms_.end())
            terms_.insert(m);
        else
            terms_.erase(it);
    }

    Polynomial& operator+=(const Polynomial& other) {
        if (other.n_ != n_)
            throw DomainError("Polynomial add: mismatched variable count");
        if (this == &other) { // p + p = 0 over F_2
            terms_.clear();
            return *this;
        }
        for (const auto& m : other.terms_) toggle(m);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a += b;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.n_ != b.n_)
            throw DomainError("Polynomial mul: mismatched variable count");
        Polynomial r(a.n_);
        for (const auto& ma : a.terms_)
            for (const auto& mb : b.terms_) r.toggle(ma.times(mb));
        return r;
    }

    Polynomial& operator*=(const Polynomial& other) {
        *this = *this * other;
        return *this;
    }

    bool operator==(const Polynomial& other) const = default;

    // Degree shared by all terms, if any; nullopt for zero or inhomogeneous.
    std::optional<unsigned> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = terms_.begin()->degree();
        for (const auto& m : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    bool is_homogeneous() const {
        return terms_.empty() || homogeneous_degree().has_value();
    }

    // Terms of a single degree.
    Polynomial component(unsigned d) const {
        Polynomial r(n_);
        for (const auto& m : terms_)
            if (m.degree() == d) r.toggle(m);
        return r;
    }

private:
    unsigned n_;
    std::set<Monomial> terms_;
};

inline std::string render(const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    for (unsigned i = 1; i <= m.n(); ++i) {
        unsigned e = m.exponent(i);
        if (e == 0) continue;
        if (any) os << '*';
        os << 'x' << i;
        if (e > 1) os << '^' << e;
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

inline std::string render(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : p.terms()) {
        if (!first) os << '+';
        os << render(m);
        first = false;
    }
    return os.str();
}

// Grammar: poly = term ('+' term)*, term = factor ('*' factor)*,
// factor = 'x'<index> ['^'<exponent>] | '1'.  Whitespace is ignored.
inline Polynomial parse_poly(std::string_view text, unsigned n) {
    if (n == 0) throw DomainError("parse_poly: variable count must be positive");
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_uint = [&](const char* what) -> unsigned long long {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("expected ") + what + " at position " +
                                 std::to_string(pos),
                             pos);
        unsigned long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000ULL)
                throw ParseError("number too large at position " + std::to_string(pos), pos);
            ++pos;
        }
        return v;
    };

    auto parse_term = [&]() -> Monomial {
        std::vector<unsigned> exps(n, 0);
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '1') {
                ++pos; // the constant factor contributes nothing
            } else if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                std::size_t at = pos;
                unsigned long long idx = parse_uint("variable index");
                if (idx < 1 || idx > n)
                    throw ParseError("variable index x" + std::to_string(idx) +
                                         " out of range 1.." + std::to_string(n) +
                                         " at position " + std::to_string(at),
                                     at);
                unsigned long long e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = parse_uint("exponent");
                }
                exps[static_cast<std::size_t>(idx - 1)] += static_cast<unsigned>(e);
            } else {
                throw ParseError("expected factor at position " + std::to_string(pos), pos);
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        return Monomial(n, std::move(exps));
    };

    Polynomial p(n);
    while (true) {
        p.toggle(parse_term());
        skip_ws();
        if (pos < text.size() && text[pos] == '+') {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws();
    if (pos != text.size())
        throw ParseError("unexpected character at position " + std::to_string(pos), pos);
    return p;
}

// All monomials of degree d in n variables (every composition of d into
// n parts), in lexicographic order on exponent sequences.
inline std::vector<Monomial> monomials_of_degree(unsigned n, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(n, 0);
    auto rec = [&](auto&& self, unsigned i, unsigned remaining) -> void {
        if (i == n - 1) {
            exps[i] = remaining;
            out.emplace_back(n, exps);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            exps[i] = e;
            self(self, i + 1, remaining - e);
        }
        exps[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

} // namespace hitcalc
