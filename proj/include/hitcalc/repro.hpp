#pragma once

// End-to-end verification battery surfaced both by the `repro` CLI
// subcommand and by the acceptance test binary. Every check is exact
// (integer results, zero tolerance) and deterministic: randomized property
// checks use a fixed seed.

#include <functional>
#include <random>
#include <tuple>
#include <sstream>
#include <string>
#include <vector>

#include "hitcalc/blocks.hpp"
#include "hitcalc/cohit.hpp"
#include "hitcalc/poly.hpp"
#include "hitcalc/splice.hpp"
#include "hitcalc/steenrod.hpp"
#include "hitcalc/tableaux.hpp"

namespace hitcalc::repro {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

class Check {
public:
    explicit Check(std::string name) : r_{std::move(name), true, ""} {}

    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok && r_.pass) {
            r_.pass = false;
            r_.detail = "failed: " + what;
        }
    }

    CriterionResult finish(std::string ok_detail = "") {
        if (r_.pass)
            r_.detail = ok_detail.empty()
                            ? std::to_string(checked_) + " checks"
                            : std::move(ok_detail);
        return r_;
    }

private:
    CriterionResult r_;
    std::size_t checked_ = 0;
};

inline Monomial random_monomial(std::mt19937& rng, unsigned n, unsigned degree) {
    std::vector<unsigned> exps(n, 0);
    std::uniform_int_distribution<unsigned> var(0, n - 1);
    for (unsigned i = 0; i < degree; ++i) ++exps[var(rng)];
    return Monomial(n, std::move(exps));
}

inline Polynomial random_homogeneous(std::mt19937& rng, unsigned n, unsigned degree,
                                     unsigned max_terms) {
    std::uniform_int_distribution<unsigned> cnt(1, max_terms);
    Polynomial p(n);
    unsigned t = cnt(rng);
    for (unsigned i = 0; i < t; ++i) p.toggle(random_monomial(rng, n, degree));
    if (p.is_zero()) p.toggle(random_monomial(rng, n, degree));
    return p;
}

// All monomials of degree d whose block has the given omega-vector.
inline std::vector<Block> blocks_with_omega(unsigned n, unsigned d, const OmegaVector& w) {
    std::vector<Block> out;
    for (const auto& m : monomials_of_degree(n, d)) {
        Block b(m);
        if (b.omega() == w) out.push_back(b);
    }
    return out;
}

} // namespace detail

// Criterion 1: Steinberg-degree cohit dimensions 2^{C(n,2)} at d = 2^n-n-1.
inline CriterionResult steinberg_degrees(bool include_long = false) {
    detail::Check c("steinberg degrees: cohit_dim(n, 2^n-n-1) = 2^binom(n,2)");
    unsigned max_n = include_long ? 5 : 4;
    for (unsigned n = 2; n <= max_n; ++n) {
        unsigned d = (1u << n) - n - 1;
        std::size_t expected = std::size_t(1) << (n * (n - 1) / 2);
        std::size_t got = cohit_dim(n, d);
        c.expect(got == expected, "cohit_dim(" + std::to_string(n) + "," + std::to_string(d) +
                                      ") = " + std::to_string(got) + ", expected " +
                                      std::to_string(expected));
    }
    return c.finish();
}

// Criterion 2: the eight generator monomials of P^4(3) are non-hit,
// pairwise inequivalent, and their classes span Q^4(3).
inline CriterionResult steinberg_fixture_p4_3() {
    detail::Check c("P^4(3) fixture: eight generators span Q^4(3)");
    const char* texts[8] = {"x1^3*x2",    "x1^3*x3",    "x1*x2^3",    "x1*x2^2*x3",
                            "x2^3*x3",    "x2*x3^3",    "x1*x2*x3^2", "x1*x3^3"};
    std::vector<Polynomial> gens;
    for (const char* t : texts) gens.push_back(parse_poly(t, 3));
    for (const auto& g : gens) c.expect(!is_hit(g), render(g) + " must not be hit");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            c.expect(!are_equivalent(gens[i], gens[j]),
                     render(gens[i]) + " ~ " + render(gens[j]) + " unexpectedly");
    const HitSpace& hs = hit_space(3, 4);
    F2Matrix span = hs.echelon;
    std::size_t grew = 0;
    for (const auto& g : gens)
        if (span.insert(hs.encode(g))) ++grew;
    c.expect(grew == 8, "classes span rank " + std::to_string(grew) + ", expected 8");
    c.expect(cohit_dim(3, 4) == 8, "cohit_dim(3,4) != 8");
    return c.finish();
}

// Criterion 3: hook formula vs enumeration, and the staircase identity.
inline CriterionResult hook_formula_vs_enumeration() {
    detail::Check c("hook formula matches enumeration; staircase gives 2^binom(n,2)");
    // all partitions of size <= 10
    std::vector<Partition> shapes;
    std::vector<unsigned> parts;
    auto rec = [&](auto&& self, unsigned remaining, unsigned maxp) -> void {
        shapes.emplace_back(parts);
        for (unsigned p = std::min(remaining, maxp); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, 10, 10);
    for (const auto& shape : shapes) {
        for (unsigned m = 1; m <= 5; ++m) {
            auto count = hook_count(shape, m);
            auto listed = enumerate_ssyt(shape, m).size();
            c.expect(count == listed, "shape (" + shape.render() + "), m=" + std::to_string(m) +
                                          ": hook " + std::to_string(count) + " vs enum " +
                                          std::to_string(listed));
        }
    }
    for (unsigned n = 1; n <= 8; ++n) {
        unsigned long long expected = 1ULL << (n * (n - 1) / 2);
        c.expect(hook_count(Partition::staircase(n), n) == expected,
                 "staircase n=" + std::to_string(n));
    }
    return c.finish();
}

// Unique-descending-omega degrees for n <= 3, d <= dmax, as (n, d, omega).
inline std::vector<std::tuple<unsigned, unsigned, OmegaVector>> unique_omega_degrees(
    unsigned dmax) {
    std::vector<std::tuple<unsigned, unsigned, OmegaVector>> out;
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned d = 0; d <= dmax; ++d) {
            auto omegas = descending_omegas(d, n);
            if (omegas.size() == 1) out.emplace_back(n, d, omegas[0]);
        }
    return out;
}

// Criterion 4: straightening produces semistandard blocks with unchanged
// omega-vector and a hit difference.
inline CriterionResult straightening_theorem() {
    detail::Check c("straightening: semistandard output, hit-equivalent to input");
    for (const auto& [n, d, w] : unique_omega_degrees(16)) {
        for (const auto& b : detail::blocks_with_omega(n, d, w)) {
            BlockSum s = straighten(b);
            for (const auto& g : s.blocks()) {
                c.expect(g.is_semistandard(), "non-semistandard output for " + b.render());
                c.expect(g.omega() == b.omega(), "omega changed for " + b.render());
            }
            Polynomial diff = s.to_polynomial();
            diff.toggle(b.monomial());
            c.expect(is_hit(diff), "b + straighten(b) not hit for " + b.render() + " (n=" +
                                       std::to_string(n) + ", d=" + std::to_string(d) + ")");
        }
    }
    return c.finish();
}

// Criterion 5: cohit dimension bounded by the semistandard block count,
// with equality at the Steinberg degrees.
inline CriterionResult spanning_bound() {
    detail::Check c("cohit_dim <= #semistandard blocks, equality at Steinberg degrees");
    for (const auto& [n, d, w] : unique_omega_degrees(16)) {
        (void)w;
        std::size_t dim = cohit_dim(n, d);
        std::size_t ss = semistandard_blocks(d, n).size();
        c.expect(dim <= ss, "n=" + std::to_string(n) + ", d=" + std::to_string(d) + ": dim " +
                                std::to_string(dim) + " > " + std::to_string(ss));
        if (d == (1u << n) - n - 1)
            c.expect(dim == ss, "Steinberg degree n=" + std::to_string(n) +
                                    ": dim != count");
    }
    return c.finish();
}

// Criterion 6: blocks omega-below the unique descending omega-vector in
// either order are hit.
inline CriterionResult lower_omega_blocks_hit() {
    detail::Check c("blocks left- or right-lower than the unique descending omega are hit");
    for (const auto& [n, d, w] : unique_omega_degrees(16)) {
        for (const auto& m : monomials_of_degree(n, d)) {
            OmegaVector bw = Block(m).omega();
            if (cmp_left(bw, w) < 0 || cmp_right(bw, w) < 0)
                c.expect(is_hit(Polynomial(m)),
                         render(m) + " with omega " + bw.render() + " should be hit (n=" +
                             std::to_string(n) + ", d=" + std::to_string(d) + ")");
        }
    }
    return c.finish();
}

// Criterion 7: the P^7(4) example with omega-vector (1,3).
inline CriterionResult p7_4_example() {
    detail::Check c("P^7(4): C+F+G+H is hit and C survives in Q^(1,3)(4)");
    Block C = Block::parse("1/01/01/01", 4);
    Block E = Block::parse("001/1/1/1", 4);
    Block F = Block::parse("01/01/01/1", 4);
    Block G = Block::parse("01/01/1/01", 4);
    Block H = Block::parse("01/1/01/01", 4);
    auto plus = [](std::initializer_list<Block> bs) {
        Polynomial p(4);
        for (const auto& b : bs) p.toggle(b.monomial());
        return p;
    };
    c.expect(is_hit(plus({C, E})), "C+E not hit");
    c.expect(is_hit(plus({E, F, G, H})), "E+F+G+H not hit");
    c.expect(is_hit(plus({C, F, G, H})), "C+F+G+H not hit");
    OmegaVector w(std::vector<unsigned>{1, 3});
    std::size_t qdim = omega_quotient_dim(4, 7, w);
    c.expect(qdim >= 1, "omega_quotient_dim(4,7,(1,3)) = " + std::to_string(qdim));
    // C itself is not in hits + span of monomials with omega <_l (1,3)
    const HitSpace& hs = hit_space(4, 7);
    F2Matrix hw = hs.echelon;
    for (std::size_t i = 0; i < hs.basis.size(); ++i)
        if (cmp_left(Block(hs.basis[i]).omega(), w) < 0) {
            BitRow unit = hw.zero_row();
            bitrow_set(unit, i);
            hw.insert(std::move(unit));
        }
    c.expect(!hw.contains(hs.encode(Polynomial(C.monomial()))),
             "C is killed by hits and lower-omega monomials");
    return c.finish("ok, omega_quotient_dim(4,7,(1,3)) = " + std::to_string(qdim));
}

// Criterion 8: Peterson vanishing for n <= 3, d <= 20.
inline CriterionResult peterson_vanishing() {
    detail::Check c("cohit_dim(n,d) = 0 iff mu(d) > n (n <= 3, d <= 20)");
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned d = 0; d <= 20; ++d) {
            bool vanishes = cohit_dim(n, d) == 0 && d > 0;
            bool mu_big = mu(d) > n;
            if (d == 0)
                c.expect(cohit_dim(n, 0) == 1, "Q^0 must be 1-dimensional");
            else
                c.expect(vanishes == mu_big, "n=" + std::to_string(n) +
                                                 ", d=" + std::to_string(d));
        }
    return c.finish();
}

// Criterion 9: randomized Steenrod action properties, 200+ instances each.
inline CriterionResult steenrod_action_properties() {
    detail::Check c("Steenrod action: Cartan, fractal, instability, orderdown, "
                    "chi-trick, conjugate exponent growth");
    std::mt19937 rng(0x5eed1234);
    std::uniform_int_distribution<unsigned> nvar(1, 4);

    for (int trial = 0; trial < 200; ++trial) {
        // Cartan multiplicativity
        unsigned n = nvar(rng);
        std::uniform_int_distribution<unsigned> dd(0, 6);
        unsigned df = dd(rng), dg = std::min(12 - df, dd(rng));
        Polynomial f = detail::random_homogeneous(rng, n, df, 3);
        Polynomial g = detail::random_homogeneous(rng, n, dg, 3);
        std::uniform_int_distribution<unsigned> kk(0, df + dg + 1);
        unsigned k = kk(rng);
        Polynomial lhs = sq(k, f * g);
        Polynomial rhs(n);
        for (unsigned i = 0; i <= k; ++i) rhs += sq(i, f) * sq(k - i, g);
        c.expect(lhs == rhs, "Cartan failure");

        // fractal identities
        std::uniform_int_distribution<unsigned> ee(1, 2);
        unsigned e = ee(rng);
        unsigned p2 = 1u << e;
        Polynomial base = detail::random_homogeneous(rng, n, std::min(df, 3u), 2);
        Polynomial powed = Polynomial::one(n);
        for (unsigned i = 0; i < p2; ++i) powed *= base;
        std::uniform_int_distribution<unsigned> ss(0, 4);
        unsigned s = ss(rng);
        Polynomial frac_lhs = sq(s * p2, powed);
        Polynomial frac_rhs = Polynomial::one(n);
        {
            Polynomial sqs = sq(s, base);
            Polynomial acc = Polynomial::one(n);
            for (unsigned i = 0; i < p2; ++i) acc *= sqs;
            frac_rhs = acc;
        }
        c.expect(frac_lhs == frac_rhs, "fractal Sq^{s 2^e} failure");
        std::uniform_int_distribution<unsigned> rr(1, 8);
        unsigned r = rr(rng);
        if (r % p2 != 0) c.expect(sq(r, powed).is_zero(), "fractal vanishing failure");

        // instability
        unsigned dp = f.homogeneous_degree().value_or(0);
        c.expect(sq(dp + 1 + (trial % 3), f).is_zero(), "instability: Sq^{>deg} != 0");
        c.expect(sq(dp, f) == f * f, "instability: Sq^{deg} != square");

        // orderdown on a single block
        Monomial bm = detail::random_monomial(rng, n, 1 + dd(rng));
        Block bb(bm);
        std::uniform_int_distribution<unsigned> ko(1, 6);
        unsigned korder = ko(rng);
        Polynomial image = sq(korder, Polynomial(bm));
        for (const auto& term : image.terms()) {
            Block out(term);
            c.expect(cmp_left(out.omega(), bb.omega()) < 0 &&
                         cmp_right(out.omega(), bb.omega()) < 0,
                     "orderdown: output block not lower in both orders");
        }
    }

    // chi-trick as hit equivalence
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 1 + (rng() % 3);
        std::uniform_int_distribution<unsigned> du(0, 3), dv(1, 3);
        unsigned deg_u = du(rng), deg_v = dv(rng);
        if (deg_u + 2 * deg_v > 10) continue;
        Polynomial u = detail::random_homogeneous(rng, n, deg_u, 2);
        Polynomial v = detail::random_homogeneous(rng, n, deg_v, 2);
        unsigned k = deg_v;
        Polynomial lhs = u * sq(k, v) + v * chi_sq(k, u);
        c.expect(is_hit(lhs), "chi-trick residue not hit");
    }

    // conjugate on square-free products: the difference has an exponent >= 4
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = nvar(rng);
        std::vector<unsigned> exps(n, 0);
        unsigned m = 0;
        for (unsigned i = 0; i < n; ++i)
            if (rng() % 2) {
                exps[i] = 1;
                ++m;
            }
        if (m == 0) {
            exps[0] = 1;
            m = 1;
        }
        Polynomial y(Monomial(n, exps));
        std::uniform_int_distribution<unsigned> kk2(1, m + 2);
        unsigned k = kk2(rng);
        Polynomial diff = chi_sq(k, y) + sq(k, y);
        for (const auto& term : diff.terms()) {
            bool big = false;
            for (unsigned e : term.exponents())
                if (e >= 4) big = true;
            c.expect(big, "chi(Sq)-Sq difference term lacks an exponent >= 4");
        }
    }
    return c.finish();
}

// Criterion 10: chi(Sq^k) agrees with the series x -> x + x^2 + x^4 + ...
// on products of distinct variables.
inline CriterionResult chi_series_consistency() {
    detail::Check c("chi(Sq^k) matches the total conjugate series on x_1...x_m");
    for (unsigned m = 1; m <= 5; ++m) {
        Polynomial product = Polynomial::one(m);
        for (unsigned i = 1; i <= m; ++i) {
            Polynomial series(m);
            for (unsigned a = 0; (1u << a) <= m + 8; ++a)
                series.toggle(Monomial::variable(m, i).pow(1u << a));
            product *= series;
        }
        Polynomial vars = Polynomial::one(m);
        for (unsigned i = 1; i <= m; ++i) vars *= Polynomial::variable(m, i);
        for (unsigned k = 0; k <= 8; ++k)
            c.expect(chi_sq(k, vars) == product.component(m + k),
                     "m=" + std::to_string(m) + ", k=" + std::to_string(k));
    }
    return c.finish();
}

inline std::vector<CriterionResult> run_all(bool include_long = false) {
    return {
        steinberg_degrees(include_long),
        steinberg_fixture_p4_3(),
        hook_formula_vs_enumeration(),
        straightening_theorem(),
        spanning_bound(),
        lower_omega_blocks_hit(),
        p7_4_example(),
        peterson_vanishing(),
        steenrod_action_properties(),
        chi_series_consistency(),
    };
}

} // namespace hitcalc::repro
