#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hitcalc/blocks.hpp"

using namespace hitcalc;

TEST_CASE("alpha and mu") {
    CHECK(alpha_count(0) == 0);
    CHECK(alpha_count(7) == 3);
    CHECK(alpha_count(12) == 2);
    CHECK(mu(0) == 0);
    CHECK(mu(1) == 1);
    CHECK(mu(2) == 2);
    CHECK(mu(3) == 1);
    CHECK(mu(17) == 3);
    // independent oracle: mu(d) is the least k with alpha(d + k) <= k
    for (unsigned long long d = 1; d <= 400; ++d) {
        unsigned k = 1;
        while (alpha_count(d + k) > k) ++k;
        INFO("d = " << d);
        CHECK(mu(d) == k);
    }
}

TEST_CASE("omega-vector basics") {
    OmegaVector w({2, 1, 1});
    CHECK(w.weight() == 8);
    CHECK(w.descending());
    CHECK(w.entry(1) == 2);
    CHECK(w.entry(7) == 0);
    CHECK_FALSE(OmegaVector({1, 3}).descending());
    CHECK(OmegaVector({2, 1, 0, 0}) == OmegaVector({2, 1})); // trailing zeros normalized
    CHECK(OmegaVector::parse("2,1,1") == w);
    CHECK(w.render() == "(2,1,1)");
    CHECK_THROWS_AS(OmegaVector::parse("2,,1"), ParseError);
    CHECK_THROWS_AS(OmegaVector::parse("a"), ParseError);
}

TEST_CASE("left and right orders") {
    OmegaVector a({1, 3}), b({3, 2}), c({1, 1, 1});
    CHECK(cmp_left(a, b) < 0);
    CHECK(cmp_left(b, a) > 0);
    CHECK(cmp_left(a, a) == 0);
    // right order: last differing entry decides, smaller entry greater
    CHECK(cmp_right(a, b) < 0);  // entry 2: 3 vs 2, the 2 wins
    CHECK(cmp_right(c, a) < 0);  // entry 3: 1 vs 0, the 0 wins
    // a pair the two orders disagree on
    OmegaVector x({3, 1, 1}), y({2, 3});
    CHECK(cmp_left(x, y) > 0);
    CHECK(cmp_right(x, y) < 0); // entry 3: 1 vs 0
    // padding with zeros does not affect either comparison
    CHECK(cmp_left(OmegaVector({2, 1}), OmegaVector({2, 1, 0})) == 0);
    CHECK(cmp_right(OmegaVector({2, 1}), OmegaVector({2, 1, 0})) == 0);
    // consistency on a sample: == agrees with equality, < flips under swap
    std::vector<OmegaVector> sample = {a, b, c, x, y, OmegaVector({2, 1}), OmegaVector({4}),
                                       OmegaVector{}};
    for (const auto& u : sample)
        for (const auto& v : sample) {
            CHECK((cmp_left(u, v) == 0) == (u == v));
            CHECK((cmp_right(u, v) == 0) == (u == v));
            CHECK((cmp_left(u, v) < 0) == (cmp_left(v, u) > 0));
            CHECK((cmp_right(u, v) < 0) == (cmp_right(v, u) > 0));
        }
}

TEST_CASE("block digits, omega, alpha") {
    // x1^2 x2^5 x3 in P(3): rows 01 / 101 / 1
    Block b(Monomial(3, {2, 5, 1}));
    CHECK(b.rows() == 3);
    CHECK(b.columns() == 3);
    CHECK(b.degree() == 8);
    CHECK_FALSE(b.digit(1, 1));
    CHECK(b.digit(1, 2));
    CHECK(b.digit(2, 1));
    CHECK(b.digit(2, 3));
    CHECK(b.omega() == OmegaVector({2, 1, 1}));
    CHECK(b.omega_truncated(1) == OmegaVector({0, 1}));
    CHECK(b.omega_truncated(2) == OmegaVector({1, 1, 1}));
    CHECK(b.alpha() == std::vector<unsigned>{1, 2, 1});
    CHECK(b.render() == "01/101/1");
    CHECK(Block::parse("01/101/1", 3) == b);
}

TEST_CASE("block parse and render round trip") {
    CHECK(Block::parse("1/1", 2).monomial().exponents() == std::vector<unsigned>{1, 1});
    // short input is padded with zero rows at the bottom
    CHECK(Block::parse("11", 3).monomial().exponents() == std::vector<unsigned>{3, 0, 0});
    CHECK(Block::parse("0/0", 2).render() == "0/0");
    CHECK(Block::parse("100/1", 2) == Block::parse("1/1", 2)); // trailing zeros in a row
    CHECK_THROWS_AS(Block::parse("1/1/1", 2), ParseError);
    CHECK_THROWS_AS(Block::parse("1/2", 2), ParseError);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 1 + rng() % 4;
        std::vector<unsigned> exps(n);
        for (auto& e : exps) e = rng() % 64;
        Block b(Monomial(n, exps));
        CHECK(Block::parse(b.render(), n) == b);
    }
}

TEST_CASE("semistandard predicate") {
    CHECK(Block::parse("11/1", 2).is_semistandard());
    CHECK_FALSE(Block::parse("01/1/1", 3).is_semistandard()); // omega(b[1]) = (0,1)
    CHECK(Block::parse("1/1/01", 3).is_semistandard());
    CHECK(Block(Monomial::one(3)).is_semistandard());
}

TEST_CASE("column-position correspondence is a bijection") {
    // cp sends block columns to tableau columns listing the rows of the 1s
    Block b = Block::parse("01/101/1", 3);
    Tableau t = cp(b);
    CHECK(t == Tableau({{2, 1, 2}, {3, 0, 0}})); // column 1 holds rows 2,3; 0 pads
    CHECK(cp_inverse(t, 3) == b);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned n = 1 + rng() % 4;
        std::vector<unsigned> exps(n);
        for (auto& e : exps) e = rng() % 4096;
        Block blk(Monomial(n, exps));
        Tableau arr = cp(blk);
        CHECK(arr.is_column_strict());
        CHECK(cp_inverse(arr, n) == blk);
        // entry count of column j equals omega_j
        for (unsigned j = 1; j <= blk.columns(); ++j) {
            unsigned filled = 0;
            for (unsigned i = 1; i <= arr.row_count(); ++i)
                if (arr.entry(i, j) != 0) ++filled;
            CHECK(filled == blk.omega().entry(j));
        }
    }
    CHECK_THROWS_AS(cp_inverse(Tableau({{1}, {1}}), 2), DomainError); // not column strict
    CHECK_THROWS_AS(cp_inverse(Tableau({std::vector<unsigned>{3}}), 2),
                    DomainError); // entry exceeds rows
}

TEST_CASE("Ferrers block realizes the conjugate partition") {
    Partition lambda({3, 2, 1});
    Block f = ferrers_block(lambda, 4);
    CHECK(f.monomial().exponents() == std::vector<unsigned>{7, 3, 1, 0});
    CHECK(f.omega() == OmegaVector(lambda.conjugate().parts()));
    CHECK(f.is_semistandard());
    CHECK_THROWS_AS(ferrers_block(Partition({1, 1, 1}), 2), DomainError);
    for (unsigned n = 1; n <= 6; ++n) {
        Block st = ferrers_block(Partition::staircase(n), n);
        CHECK(st.degree() == (1u << n) - n - 1);
        CHECK(st.omega() == OmegaVector(Partition::staircase(n).parts()));
    }
}

TEST_CASE("descending omega-vectors are exhaustive and ordered") {
    // brute-force oracle: enumerate all vectors with entries in 0..n and
    // bounded length, keep the descending ones of the right weight
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned d = 0; d <= 20; ++d) {
            std::set<std::vector<unsigned>> expected;
            unsigned maxlen = 6; // 2^6 > 20 so longer vectors overshoot
            std::vector<unsigned> v(maxlen, 0);
            auto rec = [&](auto&& self, unsigned i) -> void {
                if (i == maxlen) {
                    OmegaVector w(v);
                    if (w.descending() && w.weight() == d) expected.insert(w.entries());
                    return;
                }
                for (unsigned e = 0; e <= n; ++e) {
                    v[i] = e;
                    self(self, i + 1);
                }
                v[i] = 0;
            };
            rec(rec, 0);
            auto got = descending_omegas(d, n);
            REQUIRE(got.size() == expected.size());
            for (const auto& w : got) CHECK(expected.count(w.entries()) == 1);
            for (std::size_t i = 1; i < got.size(); ++i)
                CHECK(cmp_left(got[i - 1], got[i]) < 0);
        }
    }
    CHECK(descending_omegas(0, 3).size() == 1); // the empty vector
    CHECK(descending_omegas(7, 1).size() == 1); // (1,1,1)
}

TEST_CASE("row-regular partitions") {
    // d = 2^n - n - 1 is row-regular with the staircase exponents
    for (unsigned n = 2; n <= 6; ++n) {
        auto lam = row_regular_partition((1u << n) - n - 1, n);
        REQUIRE(lam.has_value());
        CHECK(*lam == Partition::staircase(n));
    }
    CHECK(row_regular_partition(4, 2) == Partition({2, 1})); // 3 + 1
    CHECK_FALSE(row_regular_partition(2, 2).has_value());
    CHECK_FALSE(row_regular_partition(5, 2).has_value());
    // exhaustive oracle for n = 3
    for (unsigned d = 0; d <= 40; ++d) {
        std::optional<Partition> expected;
        for (unsigned a = 0; a < 7 && !expected; ++a)
            for (unsigned b = 0; b < a && !expected; ++b)
                for (unsigned c = 0; c < b && !expected; ++c)
                    if (((1u << a) - 1) + ((1u << b) - 1) + ((1u << c) - 1) == d)
                        expected = Partition({a, b, c});
        INFO("d = " << d);
        CHECK(row_regular_partition(d, 3) == expected);
    }
}

TEST_CASE("semistandard blocks in a unique-omega degree") {
    // d = 4, n = 3: the only descending omega-vector is (2,1)
    auto omegas = descending_omegas(4, 3);
    REQUIRE(omegas.size() == 1);
    CHECK(omegas[0] == OmegaVector({2, 1}));
    auto blocks = semistandard_blocks(4, 3);
    CHECK(blocks.size() == hook_count(Partition({2, 1}).conjugate(), 3));
    std::set<Block> seen(blocks.begin(), blocks.end());
    CHECK(seen.size() == blocks.size());
    for (const auto& b : blocks) {
        CHECK(b.is_semistandard());
        CHECK(b.degree() == 4);
        CHECK(b.omega() == omegas[0]);
    }
    // degrees with several descending omega-vectors are rejected
    CHECK(descending_omegas(7, 3).size() > 1);
    CHECK_THROWS_AS(semistandard_blocks(7, 3), DomainError);
}
