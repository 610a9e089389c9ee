/**************************************************************************
 * gf2n.hpp
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

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zapn/detail/bits.hpp"
#include "zapn/error.hpp"
#include "zapn/gf2poly.hpp"

namespace zapn {

inline constexpr unsigned kMaxFieldDegree = 32;

/// Element of GF(2^n) in polynomial basis; bit i is the coefficient of t^i.
struct Felt {
    std::uint32_t bits = 0;

    constexpr bool is_zero() const noexcept { return bits == 0; }
    friend constexpr bool operator==(Felt, Felt) = default;
    friend constexpr auto operator<=>(Felt, Felt) = default;
};

/// Smallest irreducible of degree n by integer value of its coefficient bits.
inline BitPoly default_modulus(unsigned n) {
    if (n < 1 || n > kMaxFieldDegree) {
        throw Error(Errc::UnsupportedDegree, "field degree " + std::to_string(n) + " outside [1, 32]");
    }
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t c = top; c < 2 * top; ++c) {
        const BitPoly f = BitPoly::from_word(c);
        if (is_irreducible(f)) return f;
    }
    throw Error(Errc::NonIrreducibleModulus, "no irreducible of degree " + std::to_string(n));
}

/// Lines of the form "n <hex>"; blank lines and '#' comments are skipped.
inline std::map<unsigned, BitPoly> parse_modulus_table(std::istream& in) {
    std::map<unsigned, BitPoly> table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        unsigned n;
        std::string hex;
        if (!(ls >> n)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw Error(Errc::SyntaxError, "modulus table line " + std::to_string(lineno));
        }
        if (!(ls >> hex)) throw Error(Errc::SyntaxError, "modulus table line " + std::to_string(lineno) + ": missing hex");
        table[n] = parse_hex_poly(hex);
    }
    return table;
}

inline std::map<unsigned, BitPoly> load_modulus_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open modulus table '" + path + "'");
    return parse_modulus_table(in);
}

/// A concrete GF(2^n), 1 <= n <= 32. Immutable after construction.
class Field {
public:
    explicit Field(unsigned n, std::optional<BitPoly> modulus = std::nullopt) : n_(n) {
        if (n < 1 || n > kMaxFieldDegree) {
            throw Error(Errc::UnsupportedDegree, "field degree " + std::to_string(n) + " outside [1, 32]");
        }
        BitPoly m = modulus ? *modulus : default_modulus(n);
        if (m.degree() != static_cast<int>(n)) {
            throw Error(Errc::DegreeMismatch, "modulus " + to_string(m) + " has degree " +
                                                  std::to_string(m.degree()) + ", expected " + std::to_string(n));
        }
        if (modulus && !is_irreducible(m)) {
            throw Error(Errc::NonIrreducibleModulus, "modulus " + to_string(m) + " is reducible");
        }
        modulus_ = std::move(m);
        tail_ = static_cast<std::uint32_t>(modulus_.words()[0] & mask());
    }

    unsigned degree() const noexcept { return n_; }
    const BitPoly& modulus() const noexcept { return modulus_; }
    std::string modulus_hex() const { return to_hex(modulus_); }

    /// 2^n
    std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
    /// 2^n - 1, the order of the multiplicative group.
    std::uint64_t group_order() const noexcept { return size() - 1; }
    std::uint32_t mask() const noexcept { return static_cast<std::uint32_t>(group_order()); }

    Felt zero() const noexcept { return {0}; }
    Felt one() const noexcept { return {1}; }

    Felt element(std::uint64_t bits) const {
        if (bits >= size()) {
            throw Error(Errc::DegreeMismatch, "element value exceeds field size 2^" + std::to_string(n_));
        }
        return {static_cast<std::uint32_t>(bits)};
    }

    Felt add(Felt a, Felt b) const noexcept { return {a.bits ^ b.bits}; }

    Felt mul(Felt a, Felt b) const noexcept { return {reduce(detail::clmul32(a.bits, b.bits))}; }

    Felt sqr(Felt a) const noexcept { return {reduce(detail::spread32(a.bits))}; }

    /// Square-and-multiply; pow(a, 0) = 1 for every a, including 0.
    Felt pow(Felt a, std::uint64_t e) const noexcept {
        Felt r = one();
        if (e == 0) return r;
        for (int b = 63 - std::countl_zero(e); b >= 0; --b) {
            r = sqr(r);
            if ((e >> b) & 1u) r = mul(r, a);
        }
        return r;
    }

    /// a^(2^k)
    Felt frobenius(Felt a, unsigned k) const noexcept {
        for (unsigned i = 0; i < k % n_; ++i) a = sqr(a);
        return a;
    }

    /// Extended Euclid over GF(2)[t].
    Felt inv(Felt a) const {
        if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
        std::uint64_t r0 = modulus_.words()[0], r1 = a.bits;
        std::uint64_t s0 = 0, s1 = 1;
        while (r1 != 1) {
            while (r0 != 0 && std::bit_width(r0) >= std::bit_width(r1)) {
                const int sh = std::bit_width(r0) - std::bit_width(r1);
                r0 ^= r1 << sh;
                s0 ^= s1 << sh;
            }
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
        return {reduce(s1)};
    }

    Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Felt a) const {
        if (a.is_zero()) throw Error(Errc::DivisionByZero, "order of zero");
        std::uint64_t ord = group_order();
        for (std::uint64_t p : prime_factors(ord)) {
            while (ord % p == 0 && pow(a, ord / p) == one()) ord /= p;
        }
        return ord;
    }

    /// Smallest element (by bit value) that generates the multiplicative group.
    Felt generator() const {
        for (std::uint64_t c = 1; c < size(); ++c) {
            if (order(Felt{static_cast<std::uint32_t>(c)}) == group_order()) return {static_cast<std::uint32_t>(c)};
        }
        return one();  // GF(2)
    }

    Felt reduce_poly(const BitPoly& p) const {
        const BitPoly r = p % modulus_;
        return {r.is_zero() ? 0u : static_cast<std::uint32_t>(r.words()[0])};
    }

    static std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
        std::vector<std::uint64_t> ps;
        for (std::uint64_t p = 2; p * p <= v; ++p) {
            if (v % p == 0) {
                ps.push_back(p);
                while (v % p == 0) v /= p;
            }
        }
        if (v > 1) ps.push_back(v);
        return ps;
    }

private:
    // Folds bits >= n back down using t^n = tail(t).
    std::uint32_t reduce(std::uint64_t p) const noexcept {
        const std::uint64_t m = mask();
        std::uint64_t hi = p >> n_;
        while (hi != 0) {
            p = (p & m) ^ detail::clmul32(static_cast<std::uint32_t>(hi), tail_);
            hi = p >> n_;
        }
        return static_cast<std::uint32_t>(p);
    }

    unsigned n_;
    BitPoly modulus_;
    std::uint32_t tail_ = 0;
};

/// GF(2^16) with exp/log tables, used only as the evaluation field for
/// resultant interpolation where millions of products are needed.
class LogField16 {
public:
    static constexpr std::uint32_t kOrder = 65535;

    LogField16() : field_(16) {
        const Felt g = field_.generator();
        exp_.resize(2 * kOrder);
        Felt v = field_.one();
        for (std::uint32_t i = 0; i < kOrder; ++i) {
            exp_[i] = static_cast<std::uint16_t>(v.bits);
            log_[v.bits] = i;
            v = field_.mul(v, g);
        }
        for (std::uint32_t i = kOrder; i < 2 * kOrder; ++i) exp_[i] = exp_[i - kOrder];
    }

    static const LogField16& instance() {
        static const LogField16 f;
        return f;
    }

    const Field& field() const noexcept { return field_; }

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    std::uint16_t inv(std::uint16_t a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
        return exp_[kOrder - log_[a]];
    }

    std::uint16_t pow(std::uint16_t a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % kOrder)) % kOrder)];
    }

private:
    Field field_;
    std::vector<std::uint16_t> exp_;
    std::array<std::uint32_t, 65536> log_{};
};

}  // namespace zapn
