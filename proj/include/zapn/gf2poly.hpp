/**************************************************************************
 * gf2poly.hpp
 *
 * Copyright 2026 The zapn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

// The ring GF(2)[x]: dense bit-packed polynomials, Euclidean arithmetic,
// Rabin irreducibility and complete factorization (squarefree, distinct
// degree, then trace-based equal-degree splitting).

#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zapn/detail/bits.hpp"
#include "zapn/error.hpp"

namespace zapn {

/// Polynomial over GF(2); bit i of the packed words is the coefficient of x^i.
/// Canonical form has no trailing zero words, so the zero polynomial is empty.
class BitPoly {
public:
    BitPoly() = default;

    static BitPoly from_word(std::uint64_t bits) {
        BitPoly p;
        if (bits != 0) p.w_.push_back(bits);
        return p;
    }

    static BitPoly from_words(std::vector<std::uint64_t> words) {
        BitPoly p;
        p.w_ = std::move(words);
        p.normalize();
        return p;
    }

    static BitPoly monomial(std::size_t k) {
        BitPoly p;
        p.w_.assign(k / 64 + 1, 0);
        p.w_.back() = std::uint64_t{1} << (k % 64);
        return p;
    }

    /// Sum of x^e over the listed exponents (repeats cancel).
    static BitPoly from_exponents(std::initializer_list<std::size_t> exps) {
        BitPoly p;
        for (std::size_t e : exps) p.flip(e);
        return p;
    }

    static BitPoly one() { return from_word(1); }
    static BitPoly x() { return from_word(2); }

    /// -1 for the zero polynomial.
    int degree() const noexcept {
        if (w_.empty()) return -1;
        return static_cast<int>(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
    }

    bool is_zero() const noexcept { return w_.empty(); }
    bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }

    bool coeff(std::size_t i) const noexcept {
        const std::size_t wi = i / 64;
        return wi < w_.size() && ((w_[wi] >> (i % 64)) & 1u);
    }

    void flip(std::size_t i) {
        const std::size_t wi = i / 64;
        if (wi >= w_.size()) w_.resize(wi + 1, 0);
        w_[wi] ^= std::uint64_t{1} << (i % 64);
        normalize();
    }

    void set_coeff(std::size_t i, bool value) {
        if (coeff(i) != value) flip(i);
    }

    const std::vector<std::uint64_t>& words() const noexcept { return w_; }

    std::size_t weight() const noexcept {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Exponents with nonzero coefficient, descending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t wi = w_.size(); wi-- > 0;) {
            std::uint64_t w = w_[wi];
            while (w != 0) {
                const int b = 63 - std::countl_zero(w);
                out.push_back(64 * wi + static_cast<std::size_t>(b));
                w &= ~(std::uint64_t{1} << b);
            }
        }
        return out;
    }

    BitPoly& operator+=(const BitPoly& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
        normalize();
        return *this;
    }

    friend BitPoly operator+(BitPoly a, const BitPoly& b) { return a += b; }

    friend BitPoly operator*(const BitPoly& a, const BitPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::uint64_t> r(a.w_.size() + b.w_.size(), 0);
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            if (a.w_[i] == 0) continue;
            for (std::size_t j = 0; j < b.w_.size(); ++j) {
                std::uint64_t lo, hi;
                detail::clmul64(a.w_[i], b.w_[j], lo, hi);
                r[i + j] ^= lo;
                r[i + j + 1] ^= hi;
            }
        }
        return from_words(std::move(r));
    }

    BitPoly& operator*=(const BitPoly& o) { return *this = *this * o; }

    BitPoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        const std::size_t ws = k / 64;
        const unsigned bs = k % 64;
        std::vector<std::uint64_t> r(w_.size() + ws + 1, 0);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            r[i + ws] ^= w_[i] << bs;
            if (bs != 0) r[i + ws + 1] ^= w_[i] >> (64 - bs);
        }
        return from_words(std::move(r));
    }

    friend bool operator==(const BitPoly&, const BitPoly&) = default;

    /// Canonical order: by degree, then by the coefficient bitstring as an integer.
    friend std::strong_ordering operator<=>(const BitPoly& a, const BitPoly& b) {
        if (a.w_.size() != b.w_.size()) return a.w_.size() <=> b.w_.size();
        for (std::size_t i = a.w_.size(); i-- > 0;) {
            if (a.w_[i] != b.w_[i]) return a.w_[i] <=> b.w_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    friend class ModReducer;
    friend BitPoly square(const BitPoly&);
    friend struct PolyOps;

    void normalize() noexcept {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;
};

namespace detail {

// dst ^= src << shift, dst already sized to hold the result.
inline void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                        std::size_t shift) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        if (i + ws + 1 < dst.size()) dst[i + ws + 1] ^= src[i] >> (64 - bs);
    }
}

inline int words_degree(const std::vector<std::uint64_t>& w, std::size_t top_word) {
    for (std::size_t i = top_word + 1; i-- > 0;) {
        if (w[i] != 0) return static_cast<int>(64 * i + 63 - std::countl_zero(w[i]));
    }
    return -1;
}

}  // namespace detail

struct DivRem {
    BitPoly quotient;
    BitPoly remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline DivRem divrem(const BitPoly& a, const BitPoly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const int db = b.degree();
    int da = a.degree();
    if (da < db) return {BitPoly{}, a};
    std::vector<std::uint64_t> r = a.words();
    std::vector<std::uint64_t> q(static_cast<std::size_t>(da - db) / 64 + 1, 0);
    const auto& bw = b.words();
    while (da >= db) {
        const std::size_t s = static_cast<std::size_t>(da - db);
        q[s / 64] |= std::uint64_t{1} << (s % 64);
        detail::xor_shifted(r, bw, s);
        da = detail::words_degree(r, static_cast<std::size_t>(da) / 64);
    }
    return {BitPoly::from_words(std::move(q)), BitPoly::from_words(std::move(r))};
}

inline BitPoly operator%(const BitPoly& a, const BitPoly& b) { return divrem(a, b).remainder; }
inline BitPoly operator/(const BitPoly& a, const BitPoly& b) { return divrem(a, b).quotient; }

/// Monic gcd (every nonzero polynomial over GF(2) is monic).
inline BitPoly gcd(BitPoly a, BitPoly b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a;
}

inline BitPoly derivative(const BitPoly& f) {
    // d/dx x^i = x^(i-1) for odd i, 0 for even i.
    std::vector<std::uint64_t> w = f.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t odd = w[i] & 0xAAAAAAAAAAAAAAAAull;
        w[i] = odd >> 1;
    }
    return BitPoly::from_words(std::move(w));
}

inline BitPoly square(const BitPoly& f) {
    std::vector<std::uint64_t> r(2 * f.w_.size(), 0);
    for (std::size_t i = 0; i < f.w_.size(); ++i) {
        r[2 * i] = detail::spread32(static_cast<std::uint32_t>(f.w_[i]));
        r[2 * i + 1] = detail::spread32(static_cast<std::uint32_t>(f.w_[i] >> 32));
    }
    return BitPoly::from_words(std::move(r));
}

/// Square root of a polynomial with no odd-degree terms.
inline BitPoly sqrt_of_square(const BitPoly& f) {
    const auto& w = f.words();
    std::vector<std::uint64_t> r((w.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if ((w[i] & 0xAAAAAAAAAAAAAAAAull) != 0) {
            throw Error(Errc::DegreeMismatch, "polynomial is not a perfect square");
        }
        const std::uint64_t half = detail::gather32(w[i]);
        r[i / 2] |= (i % 2 == 0) ? half : (half << 32);
    }
    return BitPoly::from_words(std::move(r));
}

/// Repeated reduction modulo a fixed polynomial, with its 64 bit-shifted
/// copies precomputed so each reduction step is a word-aligned XOR.
class ModReducer {
public:
    explicit ModReducer(BitPoly modulus) : m_(std::move(modulus)) {
        if (m_.is_zero()) throw Error(Errc::DivisionByZero, "reduction modulo zero");
        deg_ = m_.degree();
        shifted_.resize(64);
        for (unsigned s = 0; s < 64; ++s) {
            std::vector<std::uint64_t> w(m_.w_.size() + 1, 0);
            for (std::size_t i = 0; i < m_.w_.size(); ++i) {
                w[i] ^= m_.w_[i] << s;
                if (s != 0) w[i + 1] ^= m_.w_[i] >> (64 - s);
            }
            shifted_[s] = std::move(w);
        }
    }

    const BitPoly& modulus() const noexcept { return m_; }
    int degree() const noexcept { return deg_; }

    BitPoly reduce(BitPoly a) const {
        reduce_words(a.w_);
        a.normalize();
        return a;
    }

    BitPoly mul(const BitPoly& a, const BitPoly& b) const { return reduce(a * b); }
    BitPoly sqr(const BitPoly& a) const { return reduce(square(a)); }

private:
    void reduce_words(std::vector<std::uint64_t>& w) const {
        if (deg_ == 0) {
            w.clear();
            return;
        }
        const std::size_t d = static_cast<std::size_t>(deg_);
        w.resize(std::max(w.size(), m_.w_.size() + 1), 0);
        for (std::size_t wi = w.size(); wi-- > 0;) {
            while (w[wi] != 0) {
                const std::size_t bit = 64 * wi + static_cast<std::size_t>(63 - std::countl_zero(w[wi]));
                if (bit < d) break;
                const std::size_t s = bit - d;
                const auto& src = shifted_[s % 64];
                const std::size_t off = s / 64;
                const std::size_t lim = std::min(src.size(), w.size() - off);
                for (std::size_t i = 0; i < lim; ++i) w[off + i] ^= src[i];
            }
            if (64 * wi <= d) break;  // everything below is already < d
        }
    }

    BitPoly m_;
    int deg_ = 0;
    std::vector<std::vector<std::uint64_t>> shifted_;
};

/// x^(2^k) mod f by k repeated squarings.
inline BitPoly frobenius_x(const ModReducer& red, std::size_t k) {
    BitPoly h = red.reduce(BitPoly::x());
    for (std::size_t i = 0; i < k; ++i) h = red.sqr(h);
    return h;
}

namespace detail {
inline std::vector<unsigned> prime_divisors(unsigned d) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            ps.push_back(p);
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) ps.push_back(d);
    return ps;
}
}  // namespace detail

/// Rabin's test: x^(2^d) = x mod f and gcd(x^(2^(d/p)) - x, f) = 1 for every prime p | d.
inline bool is_irreducible(const BitPoly& f) {
    const int d = f.degree();
    if (d < 1) throw Error(Errc::ConstantPolynomial, "irreducibility of a constant is undefined");
    if (d == 1) return true;
    if (!f.coeff(0)) return false;
    const ModReducer red(f);
    const auto primes = detail::prime_divisors(static_cast<unsigned>(d));
    std::vector<unsigned> checkpoints;
    for (unsigned p : primes) checkpoints.push_back(static_cast<unsigned>(d) / p);
    BitPoly h = BitPoly::x();
    for (unsigned i = 1; i <= static_cast<unsigned>(d); ++i) {
        h = red.sqr(h);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            if (!gcd(f, h + BitPoly::x()).is_one()) return false;
        }
    }
    return h == BitPoly::x();
}

struct Factor {
    BitPoly poly;
    unsigned multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization over GF(2). The unit is always 1; factors are
/// distinct irreducibles sorted by (degree, bit-value).
struct Factorization {
    std::vector<Factor> factors;

    BitPoly expand() const {
        BitPoly r = BitPoly::one();
        for (const auto& f : factors) {
            for (unsigned k = 0; k < f.multiplicity; ++k) r *= f.poly;
        }
        return r;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0a9e2023ull;

namespace detail {

inline std::vector<std::pair<BitPoly, unsigned>> squarefree_parts(const BitPoly& f) {
    std::vector<std::pair<BitPoly, unsigned>> out;
    if (f.degree() < 1) return out;
    BitPoly c = gcd(f, derivative(f));
    BitPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        BitPoly y = gcd(w, c);
        BitPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, k] : squarefree_parts(sqrt_of_square(c))) out.emplace_back(g, 2 * k);
    }
    return out;
}

inline std::vector<std::pair<BitPoly, unsigned>> distinct_degree(BitPoly f) {
    std::vector<std::pair<BitPoly, unsigned>> out;
    ModReducer red(f);
    BitPoly h = red.reduce(BitPoly::x());
    unsigned i = 0;
    while (f.degree() >= 2 * static_cast<int>(i + 1)) {
        ++i;
        h = red.sqr(h);
        BitPoly g = gcd(f, h + BitPoly::x());
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            red = ModReducer(f);
            h = red.reduce(h);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

inline BitPoly random_below(int degree, std::mt19937_64& rng) {
    const std::size_t words = static_cast<std::size_t>(degree) / 64 + 1;
    std::vector<std::uint64_t> w(words);
    for (auto& x : w) x = rng();
    const unsigned top = static_cast<unsigned>(degree) % 64;
    w.back() &= top == 0 ? 0 : (~std::uint64_t{0} >> (64 - top));
    return BitPoly::from_words(std::move(w));
}

// g is squarefree with all irreducible factors of degree d.
inline void equal_degree(const BitPoly& g, unsigned d, std::mt19937_64& rng, std::vector<BitPoly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const ModReducer red(g);
    for (;;) {
        BitPoly a = random_below(g.degree(), rng);
        if (a.degree() < 1) continue;
        // absolute trace a + a^2 + ... + a^(2^(d-1)) lands in GF(2) on every factor
        BitPoly s = a;
        BitPoly t = a;
        for (unsigned j = 1; j < d; ++j) {
            s = red.sqr(s);
            t += s;
        }
        BitPoly h = gcd(g, t);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

inline Factorization factorize(const BitPoly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization result;
    for (const auto& [part, mult] : detail::squarefree_parts(f)) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<BitPoly> irr;
            detail::equal_degree(block, d, rng, irr);
            for (auto& p : irr) result.factors.push_back({std::move(p), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    return result;
}

inline Factorization factorize(const BitPoly& f, std::uint64_t seed = kDefaultSeed) {
    std::mt19937_64 rng(seed);
    return factorize(f, rng);
}

/// Degrees of the irreducible factors, optionally without x and x+1.
inline std::set<int> degree_set(const Factorization& fact, bool exclude_linear_xt) {
    std::set<int> out;
    for (const auto& f : fact.factors) {
        if (exclude_linear_xt && f.poly.degree() == 1) continue;
        out.insert(f.poly.degree());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text forms: "x^12+x^11+x^8+1" and hex "0x1d01" (LSB = constant term).

inline std::string to_string(const BitPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t e : p.support()) {
        if (!s.empty()) s += '+';
        if (e == 0) {
            s += '1';
        } else if (e == 1) {
            s += 'x';
        } else {
            s += "x^" + std::to_string(e);
        }
    }
    return s;
}

inline std::string to_hex(const BitPoly& p) {
    if (p.is_zero()) return "0";
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    const int d = p.degree();
    for (int nib = d / 4; nib >= 0; --nib) {
        unsigned v = 0;
        for (int b = 3; b >= 0; --b) v = (v << 1) | (p.coeff(static_cast<std::size_t>(4 * nib + b)) ? 1u : 0u);
        s += kDigits[v];
    }
    return s;
}

inline BitPoly parse_hex_poly(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    if (text.empty()) throw Error(Errc::SyntaxError, "empty hex polynomial");
    BitPoly p;
    std::size_t bit = 0;
    for (std::size_t i = text.size(); i-- > 0;) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
        unsigned v;
        if (c >= '0' && c <= '9') {
            v = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            v = static_cast<unsigned>(c - 'a' + 10);
        } else {
            throw Error(Errc::SyntaxError, "bad hex digit in '" + std::string(text) + "'");
        }
        for (unsigned b = 0; b < 4; ++b) {
            if ((v >> b) & 1u) p.flip(bit + b);
        }
        bit += 4;
    }
    return p;
}

/// Parses a sum of monomials in x (or a hex literal prefixed with 0x).
inline BitPoly parse_bitpoly(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.starts_with("0x") || s.starts_with("0X")) return parse_hex_poly(s);
    if (s.empty()) throw Error(Errc::SyntaxError, "empty polynomial");
    BitPoly p;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error(Errc::SyntaxError, why + " in '" + std::string(text) + "'");
    };
    while (i < s.size()) {
        if (s[i] == 'x') {
            ++i;
            std::size_t e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("missing exponent");
                e = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = 10 * e + static_cast<std::size_t>(s[i++] - '0');
            }
            p.flip(e);
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t c = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) c = 10 * c + static_cast<std::size_t>(s[i++] - '0');
            if (c % 2 == 1) p.flip(0);
        } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
            throw Error(Errc::UnknownVariable, std::string("unexpected variable '") + s[i] + "'");
        } else {
            fail("unexpected character");
        }
        if (i < s.size()) {
            if (s[i] != '+' && s[i] != '-') fail("expected '+'");
            ++i;
            if (i == s.size()) fail("dangling operator");
        }
    }
    return p;
}

inline std::string to_string(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (const auto& fac : f.factors) {
        if (!s.empty()) s += '*';
        const bool bare = fac.poly.weight() == 1;
        s += bare ? to_string(fac.poly) : "(" + to_string(fac.poly) + ")";
        if (fac.multiplicity > 1) s += "^" + std::to_string(fac.multiplicity);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const BitPoly& p) { return os << to_string(p); }

}  // namespace zapn
