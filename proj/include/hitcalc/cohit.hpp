#pragma once

// The linear-algebra oracle: hit subspaces of P^d(n), cohit dimensions and
// bases, hit-membership and hit-equivalence, and omega-filtered quotient
// dimensions.
//
// The hit subspace is spanned by the images sq(2^i, m) over monomials m of
// degree d - 2^i; the squares Sq^{2^i} generate the Steenrod algebra, so
// these images span all of A^+ . P^d(n).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hitcalc/blocks.hpp"
#include "hitcalc/errors.hpp"
#include "hitcalc/f2.hpp"
#include "hitcalc/poly.hpp"
#include "hitcalc/steenrod.hpp"

namespace hitcalc {

// Process-wide column cap for hit-space construction; the CLI overrides it
// via --cap.
inline std::size_t& size_cap() {
    static std::size_t cap = 100000;
    return cap;
}

inline unsigned long long binomial(unsigned long long a, unsigned long long b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

inline unsigned long long poly_dim(unsigned n, unsigned d) {
    return binomial(static_cast<unsigned long long>(d) + n - 1, n - 1);
}

// Canonical monomial rank order: omega-vector descending in left order,
// ties by exponent sequence compared from the last variable backwards with
// the smaller entry first.
inline bool rank_before(const Monomial& a, const Monomial& b) {
    OmegaVector wa = Block(a).omega(), wb = Block(b).omega();
    if (auto c = cmp_left(wa, wb); c != 0) return c > 0;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i]) return ea[i] < eb[i];
    return false;
}

// Monomial basis of P^d(n) in canonical rank order.
inline std::vector<Monomial> degree_basis(unsigned n, unsigned d) {
    auto basis = monomials_of_degree(n, d);
    std::sort(basis.begin(), basis.end(), rank_before);
    return basis;
}

struct HitSpace {
    unsigned n = 0;
    unsigned d = 0;
    std::vector<Monomial> basis;                     // canonical rank order
    std::map<std::vector<unsigned>, std::size_t> index; // exponents -> column
    F2Matrix echelon{0};                             // row space of the hits
    // every generator row is sq(2^i, g) for a recorded (i, g); empty when
    // the echelon was loaded from the disk cache
    std::vector<std::pair<unsigned, Monomial>> generators;

    BitRow encode(const Polynomial& p) const {
        BitRow v = echelon.zero_row();
        for (const auto& m : p.terms()) {
            auto it = index.find(m.exponents());
            if (it == index.end())
                throw DomainError("HitSpace: monomial " + render(m) + " is not of degree " +
                                  std::to_string(d));
            bitrow_flip(v, it->second);
        }
        return v;
    }

    Polynomial decode(const BitRow& v) const {
        Polynomial p(n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (bitrow_test(v, i)) p.toggle(basis[i]);
        return p;
    }
};

namespace detail {

inline const char* cache_dir_env() { return std::getenv("HITCALC_CACHE_DIR"); }

constexpr std::uint32_t kCacheMagic = 0x48495443; // "HITC"
constexpr std::uint32_t kCacheVersion = 1;

inline void put_u32(std::ostream& os, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline void put_u64(std::ostream& os, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline bool get_u32(std::istream& is, std::uint32_t& v) {
    v = 0;
    for (int i = 0; i < 4; ++i) {
        int c = is.get();
        if (c < 0) return false;
        v |= static_cast<std::uint32_t>(c & 0xff) << (8 * i);
    }
    return true;
}
inline bool get_u64(std::istream& is, std::uint64_t& v) {
    v = 0;
    for (int i = 0; i < 8; ++i) {
        int c = is.get();
        if (c < 0) return false;
        v |= static_cast<std::uint64_t>(c & 0xff) << (8 * i);
    }
    return true;
}

inline std::string cache_path(const char* dir, unsigned n, unsigned d) {
    return std::string(dir) + "/hitspace-n" + std::to_string(n) + "-d" + std::to_string(d) +
           ".bin";
}

// File layout: u32 magic "HITC", u32 version, u32 n, u32 d, u64 cols,
// u64 rank, then rank rows of ceil(cols/64) little-endian u64 words; bit i
// of a row is the coefficient of the i-th monomial in canonical rank order.
inline bool load_cached(const char* dir, unsigned n, unsigned d, std::size_t cols,
                        F2Matrix& out) {
    std::ifstream is(cache_path(dir, n, d), std::ios::binary);
    if (!is) return false;
    std::uint32_t magic, version, fn, fd;
    std::uint64_t fcols, frank;
    if (!get_u32(is, magic) || magic != kCacheMagic) return false;
    if (!get_u32(is, version) || version != kCacheVersion) return false;
    if (!get_u32(is, fn) || fn != n) return false;
    if (!get_u32(is, fd) || fd != d) return false;
    if (!get_u64(is, fcols) || fcols != cols) return false;
    if (!get_u64(is, frank)) return false;
    std::size_t words = bitrow_words(cols);
    for (std::uint64_t r = 0; r < frank; ++r) {
        BitRow row(words, 0);
        for (std::size_t w = 0; w < words; ++w)
            if (!get_u64(is, row[w])) return false;
        out.insert(std::move(row));
    }
    return out.rank() == frank;
}

inline void store_cached(const char* dir, unsigned n, unsigned d, std::size_t cols,
                         const F2Matrix& m) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string path = cache_path(dir, n, d);
    std::ofstream os(path + ".tmp", std::ios::binary | std::ios::trunc);
    if (!os) return;
    put_u32(os, kCacheMagic);
    put_u32(os, kCacheVersion);
    put_u32(os, n);
    put_u32(os, d);
    put_u64(os, cols);
    put_u64(os, m.rank());
    for (const auto& row : m.rows())
        for (auto w : row) put_u64(os, w);
    os.close();
    if (os) std::filesystem::rename(path + ".tmp", path, ec);
}

} // namespace detail

// Echelonized span of { sq(2^i, m) : deg m = d - 2^i }. Results are cached
// per (n, d) for the lifetime of the process and, when HITCALC_CACHE_DIR is
// set, on disk.
inline const HitSpace& hit_space(unsigned n, unsigned d) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<HitSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, d);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;

    unsigned long long cols = poly_dim(n, d);
    if (cols > size_cap())
        throw SizeCapError("hit_space: P^" + std::to_string(d) + "(" + std::to_string(n) +
                               ") has dimension " + std::to_string(cols) +
                               ", above the cap of " + std::to_string(size_cap()),
                           static_cast<std::size_t>(cols), size_cap());

    auto hs = std::make_unique<HitSpace>();
    hs->n = n;
    hs->d = d;
    hs->basis = degree_basis(n, d);
    for (std::size_t i = 0; i < hs->basis.size(); ++i)
        hs->index.emplace(hs->basis[i].exponents(), i);
    hs->echelon = F2Matrix(hs->basis.size());

    const char* dir = detail::cache_dir_env();
    bool loaded = dir && detail::load_cached(dir, n, d, hs->basis.size(), hs->echelon);
    if (!loaded) {
        hs->echelon = F2Matrix(hs->basis.size());
        for (unsigned i = 0; (1u << i) <= d; ++i) {
            unsigned k = 1u << i;
            for (const auto& g : monomials_of_degree(n, d - k)) {
                Polynomial image = sq(k, Polynomial(g));
                hs->generators.emplace_back(i, g);
                if (!image.is_zero()) hs->echelon.insert(hs->encode(image));
            }
        }
        if (dir) detail::store_cached(dir, n, d, hs->basis.size(), hs->echelon);
    }

    auto [it, ok] = cache.emplace(key, std::move(hs));
    (void)ok;
    return *it->second;
}

inline bool is_hit(const Polynomial& p) {
    if (p.is_zero()) return true;
    auto deg = p.homogeneous_degree();
    if (!deg) throw DomainError("is_hit: polynomial is not homogeneous");
    const HitSpace& hs = hit_space(p.n(), *deg);
    return hs.echelon.contains(hs.encode(p));
}

inline bool are_equivalent(const Polynomial& p, const Polynomial& q) {
    if (p.n() != q.n()) throw DomainError("are_equivalent: mismatched variable count");
    auto dp = p.homogeneous_degree(), dq = q.homogeneous_degree();
    if (dp && dq && *dp != *dq)
        throw DomainError("are_equivalent: degree mismatch (" + std::to_string(*dp) + " vs " +
                          std::to_string(*dq) + ")");
    return is_hit(p + q);
}

inline std::size_t cohit_dim(unsigned n, unsigned d) {
    const HitSpace& hs = hit_space(n, d);
    return hs.basis.size() - hs.echelon.rank();
}

// Monomial representatives of a basis of Q^d(n), chosen greedily in
// canonical rank order against the hit-space echelon form.
inline std::vector<Monomial> cohit_basis(unsigned n, unsigned d) {
    const HitSpace& hs = hit_space(n, d);
    F2Matrix m = hs.echelon;
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < hs.basis.size(); ++i) {
        BitRow v = m.zero_row();
        bitrow_set(v, i);
        if (m.insert(std::move(v))) out.push_back(hs.basis[i]);
    }
    return out;
}

// dim of Q^w(n) = (span of monomials with omega <=_l w) / (hits + span of
// monomials with omega <_l w), computed through the rank identity
// dim V - dim(V cap (H+W)) = dim(V+H+W) - dim(H+W).
inline std::size_t omega_quotient_dim(unsigned n, unsigned d, const OmegaVector& w) {
    if (w.weight() != d)
        throw DomainError("omega_quotient_dim: omega-vector " + w.render() + " has weight " +
                          std::to_string(w.weight()) + ", not " + std::to_string(d));
    const HitSpace& hs = hit_space(n, d);
    F2Matrix hw = hs.echelon; // H, then + W
    std::vector<std::size_t> v_cols;
    for (std::size_t i = 0; i < hs.basis.size(); ++i) {
        auto c = cmp_left(Block(hs.basis[i]).omega(), w);
        if (c > 0) continue;
        v_cols.push_back(i);
        if (c < 0) {
            BitRow unit = hw.zero_row();
            bitrow_set(unit, i);
            hw.insert(std::move(unit));
        }
    }
    std::size_t rank_hw = hw.rank();
    F2Matrix vhw = hw; // + V
    for (std::size_t i : v_cols) {
        BitRow unit = vhw.zero_row();
        bitrow_set(unit, i);
        vhw.insert(std::move(unit));
    }
    return vhw.rank() - rank_hw;
}

struct SpectrumEntry {
    unsigned d;
    std::optional<std::size_t> dim; // nullopt when the size cap was exceeded
};

inline std::vector<SpectrumEntry> spectrum(unsigned n, unsigned dmax) {
    std::vector<SpectrumEntry> out;
    for (unsigned d = 0; d <= dmax; ++d) {
        try {
            out.push_back({d, cohit_dim(n, d)});
        } catch (const SizeCapError&) {
            out.push_back({d, std::nullopt});
        }
    }
    return out;
}

} // namespace hitcalc
