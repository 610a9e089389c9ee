/**************************************************************************
 * mpoly.hpp
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

// Sparse polynomials over GF(2) in x, y, z, u, v and resultants with
// respect to one of them.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zapn/detail/bits.hpp"
#include "zapn/error.hpp"
#include "zapn/gf2n.hpp"
#include "zapn/gf2poly.hpp"

namespace zapn {

enum class Var : std::uint8_t { x = 0, y = 1, z = 2, u = 3, v = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<char, kNumVars> kVarNames = {'x', 'y', 'z', 'u', 'v'};

inline char var_name(Var v) noexcept { return kVarNames[static_cast<std::size_t>(v)]; }

inline std::optional<Var> var_from_char(char c) noexcept {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (kVarNames[i] == c) return static_cast<Var>(i);
    }
    return std::nullopt;
}

inline Var parse_var(std::string_view s) {
    if (s.size() == 1) {
        if (auto v = var_from_char(s[0])) return *v;
    }
    throw Error(Errc::UnknownVariable, "unknown variable '" + std::string(s) + "'");
}

using Monomial = std::array<std::uint16_t, kNumVars>;

inline std::uint32_t total_degree(const Monomial& m) noexcept {
    std::uint32_t s = 0;
    for (auto e : m) s += e;
    return s;
}

/// Graded lex with x > y > z > u > v; true when a sorts before b (a is larger).
inline bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
        const std::uint32_t e = std::uint32_t{a[i]} + b[i];
        if (e > 0xFFFF) throw Error(Errc::ExponentOutOfRange, "monomial exponent exceeds 65535");
        r[i] = static_cast<std::uint16_t>(e);
    }
    return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

/// Polynomial over GF(2); terms are distinct and kept in descending grlex order.
class MPoly {
public:
    MPoly() = default;

    static MPoly constant(bool one) {
        MPoly p;
        if (one) p.terms_.push_back(Monomial{});
        return p;
    }

    static MPoly one() { return constant(true); }

    static MPoly variable(Var v, std::uint16_t e = 1) {
        Monomial m{};
        m[static_cast<std::size_t>(v)] = e;
        return from_monomial(m);
    }

    static MPoly from_monomial(const Monomial& m) {
        MPoly p;
        p.terms_.push_back(m);
        return p;
    }

    /// Repeated monomials cancel in pairs.
    static MPoly from_terms(std::vector<Monomial> terms) {
        MPoly p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    static MPoly from_bitpoly(const BitPoly& f, Var v) {
        std::vector<Monomial> t;
        for (std::size_t e : f.support()) {
            if (e > 0xFFFF) throw Error(Errc::ExponentOutOfRange, "exponent exceeds 65535");
            Monomial m{};
            m[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
            t.push_back(m);
        }
        return from_terms(std::move(t));
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && zapn::total_degree(terms_[0]) == 0; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    const Monomial& leading() const { return terms_.front(); }

    int degree(Var v) const noexcept {
        if (is_zero()) return -1;
        int d = 0;
        for (const auto& m : terms_) d = std::max<int>(d, m[static_cast<std::size_t>(v)]);
        return d;
    }

    int total_degree() const noexcept {
        return is_zero() ? -1 : static_cast<int>(zapn::total_degree(terms_.front()));
    }

    /// Bit i set when variable i occurs.
    unsigned vars_used() const noexcept {
        unsigned mask = 0;
        for (const auto& m : terms_) {
            for (std::size_t i = 0; i < kNumVars; ++i) {
                if (m[i] != 0) mask |= 1u << i;
            }
        }
        return mask;
    }

    /// Coefficients c_k with p = sum c_k v^k; c_k free of v.
    std::vector<MPoly> coefficients(Var v) const {
        const std::size_t vi = static_cast<std::size_t>(v);
        std::vector<MPoly> out(static_cast<std::size_t>(std::max(0, degree(v))) + 1);
        for (auto m : terms_) {
            const auto k = m[vi];
            m[vi] = 0;
            out[k].terms_.push_back(m);
        }
        for (auto& c : out) c.canonicalize();
        return out;
    }

    MPoly& operator+=(const MPoly& o) {
        std::vector<Monomial> r;
        r.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i] == o.terms_[j]) {
                ++i;
                ++j;
            } else if (grlex_greater(terms_[i], o.terms_[j])) {
                r.push_back(terms_[i++]);
            } else {
                r.push_back(o.terms_[j++]);
            }
        }
        r.insert(r.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
        r.insert(r.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
        terms_ = std::move(r);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Monomial> t;
        t.reserve(a.size() * b.size());
        for (const auto& ma : a.terms_) {
            for (const auto& mb : b.terms_) t.push_back(monomial_mul(ma, mb));
        }
        return from_terms(std::move(t));
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly mul_monomial(const Monomial& m) const {
        MPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(monomial_mul(t, m));
        return r;  // multiplying by a monomial preserves grlex order
    }

    MPoly pow(unsigned e) const {
        MPoly r = one(), b = *this;
        while (e != 0) {
            if (e & 1u) r *= b;
            e >>= 1;
            if (e != 0) b *= b;
        }
        return r;
    }

    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// p(x^w_x, x^w_y, ...) as a univariate polynomial.
    BitPoly substitute_powers(const std::array<std::uint64_t, kNumVars>& weights) const {
        BitPoly r;
        for (const auto& m : terms_) {
            std::uint64_t e = 0;
            for (std::size_t i = 0; i < kNumVars; ++i) e += weights[i] * m[i];
            r.flip(e);
        }
        return r;
    }

    /// Requires p to involve v alone (or be constant).
    BitPoly to_bitpoly(Var v) const {
        if ((vars_used() & ~(1u << static_cast<unsigned>(v))) != 0) {
            throw Error(Errc::DegreeMismatch, "polynomial is not univariate in " + std::string(1, var_name(v)));
        }
        std::array<std::uint64_t, kNumVars> w{};
        w[static_cast<std::size_t>(v)] = 1;
        return substitute_powers(w);
    }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), grlex_greater);
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t j = i;
            while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
            if ((j - i) % 2 == 1) terms_[out++] = terms_[i];
            i = j;
        }
        terms_.resize(out);
    }

    std::vector<Monomial> terms_;
};

struct MDivRem {
    MPoly quotient;
    MPoly remainder;
};

/// Division by a single polynomial in grlex order; the remainder is zero
/// exactly when g divides f.
inline MDivRem divrem(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "multivariate division by zero");
    const Monomial lg = g.leading();
    std::vector<Monomial> q;
    std::vector<Monomial> r;
    MPoly p = f;
    while (!p.is_zero()) {
        const Monomial lp = p.leading();
        if (monomial_divides(lg, lp)) {
            Monomial t{};
            for (std::size_t i = 0; i < kNumVars; ++i) t[i] = static_cast<std::uint16_t>(lp[i] - lg[i]);
            q.push_back(t);
            p += g.mul_monomial(t);
        } else {
            r.push_back(lp);
            p += MPoly::from_monomial(lp);
        }
    }
    return {MPoly::from_terms(std::move(q)), MPoly::from_terms(std::move(r))};
}

inline std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

using Assignment = std::map<Var, Felt>;

inline Felt mp_eval(const MPoly& p, const Field& F, const Assignment& at) {
    const unsigned used = p.vars_used();
    std::array<Felt, kNumVars> val{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (!(used & (1u << i))) continue;
        auto it = at.find(static_cast<Var>(i));
        if (it == at.end()) {
            throw Error(Errc::MissingVariable, std::string("no value for ") + kVarNames[i]);
        }
        val[i] = it->second;
    }
    Felt acc = F.zero();
    for (const auto& m : p.terms()) {
        Felt t = F.one();
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] != 0) t = F.mul(t, F.pow(val[i], m[i]));
        }
        acc = F.add(acc, t);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Text form

inline std::string mp_print(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& m : p.terms()) {
        if (!s.empty()) s += '+';
        std::string t;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (!t.empty()) t += '*';
            t += kVarNames[i];
            if (m[i] > 1) t += "^" + std::to_string(m[i]);
        }
        s += t.empty() ? "1" : t;
    }
    return s;
}

namespace detail {

// expr := term (('+'|'-') term)* ; term := factor ('*'? factor)* ;
// factor := primary ('^' int)? ; primary := var | int | '(' expr ')'
class MPolyParser {
public:
    explicit MPolyParser(std::string_view text) : src_(text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
        }
    }

    MPoly parse() {
        if (s_.empty()) fail("empty polynomial");
        MPoly p = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::SyntaxError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    MPoly expr() {
        MPoly p = term();
        while (peek() == '+' || peek() == '-') {
            ++pos_;
            p += term();
        }
        return p;
    }

    bool starts_primary() const {
        const char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    MPoly term() {
        MPoly p = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                p *= factor();
            } else if (starts_primary()) {
                p *= factor();
            } else {
                return p;
            }
        }
    }

    std::uint64_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = 10 * v + static_cast<std::uint64_t>(s_[pos_++] - '0');
            if (v > 0xFFFFFFFFull) fail("integer too large");
        }
        return v;
    }

    MPoly factor() {
        MPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            const std::uint64_t e = integer();
            if (e > 0xFFFF) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MPoly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(integer() % 2 == 1);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto v = var_from_char(c);
            if (!v) throw Error(Errc::UnknownVariable, std::string("unknown variable '") + c + "' in '" + std::string(src_) + "'");
            ++pos_;
            return MPoly::variable(*v);
        }
        if (at_end()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly mp_parse(std::string_view text) { return detail::MPolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// Resultants

enum class ResultantMethod { Auto, Interpolation, Bareiss };

struct ResultantOptions {
    ResultantMethod method = ResultantMethod::Auto;
    unsigned threads = 1;
};

namespace detail {

inline void check_eliminable(const MPoly& f, const MPoly& g, Var var) {
    if (f.degree(var) < 1 || g.degree(var) < 1) {
        throw Error(Errc::DegreeZeroInVariable,
                    std::string("both polynomials need positive degree in ") + var_name(var));
    }
}

/// Resultant of polynomials with formal degrees p and q over GF(2^16);
/// coefficient vectors are low-to-high and may have vanishing leading entries.
inline std::uint16_t formal_resultant16(std::vector<std::uint16_t> f, int p, std::vector<std::uint16_t> g, int q) {
    const LogField16& K = LogField16::instance();
    auto deg = [](const std::vector<std::uint16_t>& a) {
        int d = static_cast<int>(a.size()) - 1;
        while (d >= 0 && a[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    };
    int a = deg(f), b = deg(g);
    if (a < 0 || b < 0) return 0;
    if (a < p && b < q) return 0;  // first Sylvester column vanishes
    std::uint16_t res = 1;
    if (a < p) res = K.pow(g[static_cast<std::size_t>(b)], static_cast<std::uint64_t>(p - a));
    if (b < q) res = K.pow(f[static_cast<std::size_t>(a)], static_cast<std::uint64_t>(q - b));
    f.resize(static_cast<std::size_t>(a) + 1);
    g.resize(static_cast<std::size_t>(b) + 1);
    for (;;) {
        if (a < b) {
            std::swap(f, g);
            std::swap(a, b);
        }
        if (b == 0) return K.mul(res, K.pow(g[0], static_cast<std::uint64_t>(a)));
        // f <- f mod g
        const std::uint16_t ilc = K.inv(g[static_cast<std::size_t>(b)]);
        for (int i = a; i >= b; --i) {
            const std::uint16_t c = f[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const std::uint16_t t = K.mul(c, ilc);
            for (int j = 0; j <= b; ++j) f[static_cast<std::size_t>(i - b + j)] ^= K.mul(t, g[static_cast<std::size_t>(j)]);
        }
        int r = b - 1;
        while (r >= 0 && f[static_cast<std::size_t>(r)] == 0) --r;
        if (r < 0) return 0;
        res = K.mul(res, K.pow(g[static_cast<std::size_t>(b)], static_cast<std::uint64_t>(a - r)));
        f.resize(static_cast<std::size_t>(r) + 1);
        a = r;
    }
}

/// Newton interpolation at the nodes 0, 1, ..., D (as field elements);
/// converts values in place to monomial-basis coefficients.
inline void newton_interpolate16(std::vector<std::uint16_t>& c) {
    const LogField16& K = LogField16::instance();
    const std::size_t n = c.size();
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            const std::uint16_t diff = static_cast<std::uint16_t>(c[i] ^ c[i - 1]);
            c[i] = diff == 0 ? 0 : K.mul(diff, K.inv(static_cast<std::uint16_t>(i ^ (i - j))));
        }
    }
    std::vector<std::uint16_t> p(n, 0);
    p[0] = c[n - 1];
    std::size_t len = 1;
    for (std::size_t k = n - 1; k-- > 0;) {
        // p <- p * (X + k) + c[k]
        const std::uint16_t node = static_cast<std::uint16_t>(k);
        p[len] = 0;
        for (std::size_t i = len; i > 0; --i) p[i] = static_cast<std::uint16_t>(p[i - 1] ^ K.mul(p[i], node));
        p[0] = K.mul(p[0], node);
        p[0] ^= c[k];
        ++len;
    }
    c = std::move(p);
}

struct EvalTerm {
    std::uint16_t var_exp;
    Monomial m;
};

inline std::vector<EvalTerm> eval_terms(const MPoly& f, Var var) {
    std::vector<EvalTerm> t;
    for (auto m : f.terms()) {
        const auto e = m[static_cast<std::size_t>(var)];
        m[static_cast<std::size_t>(var)] = 0;
        t.push_back({e, m});
    }
    return t;
}

inline std::uint64_t grid_limit() { return 50'000'000; }

}  // namespace detail

/// Resultant by evaluation at a tensor grid of points in GF(2^16) and
/// Newton interpolation along each coefficient variable.
inline MPoly resultant_interpolation(const MPoly& f, const MPoly& g, Var var, unsigned threads = 1) {
    detail::check_eliminable(f, g, var);
    const int p = f.degree(var), q = g.degree(var);
    const unsigned used = (f.vars_used() | g.vars_used()) & ~(1u << static_cast<unsigned>(var));
    std::vector<std::size_t> axes;
    std::vector<std::size_t> extent;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (!(used & (1u << i))) continue;
        const Var w = static_cast<Var>(i);
        const std::uint64_t bound = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(std::max(0, g.degree(w))) +
                                    static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(std::max(0, f.degree(w)));
        if (bound + 1 > 65536) throw Error(Errc::InterpolationFailed, "degree bound exceeds the evaluation field");
        axes.push_back(i);
        extent.push_back(bound + 1);
        total *= bound + 1;
        if (total > detail::grid_limit()) throw Error(Errc::InterpolationFailed, "evaluation grid too large");
    }
    const LogField16& K = LogField16::instance();
    const auto ft = detail::eval_terms(f, var);
    const auto gt = detail::eval_terms(g, var);
    std::vector<std::uint16_t> grid(total);

    auto coeffs_at = [&](const std::vector<detail::EvalTerm>& terms, int deg, const std::array<std::uint16_t, kNumVars>& pt) {
        std::vector<std::uint16_t> c(static_cast<std::size_t>(deg) + 1, 0);
        for (const auto& t : terms) {
            std::uint16_t v = 1;
            for (std::size_t i = 0; i < kNumVars && v != 0; ++i) {
                if (t.m[i] != 0) v = K.mul(v, K.pow(pt[i], t.m[i]));
            }
            c[t.var_exp] ^= v;
        }
        return c;
    };

    detail::parallel_chunks(total, 64, threads, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::array<std::uint16_t, kNumVars> pt{};
            std::uint64_t rest = idx;
            for (std::size_t a = axes.size(); a-- > 0;) {
                pt[axes[a]] = static_cast<std::uint16_t>(rest % extent[a]);
                rest /= extent[a];
            }
            grid[idx] = detail::formal_resultant16(coeffs_at(ft, p, pt), p, coeffs_at(gt, q, pt), q);
        }
    });

    // Interpolate one axis at a time; axis a has stride = product of later extents.
    for (std::size_t a = 0; a < axes.size(); ++a) {
        std::uint64_t stride = 1;
        for (std::size_t b = a + 1; b < axes.size(); ++b) stride *= extent[b];
        const std::uint64_t len = extent[a];
        const std::uint64_t lines = total / len;
        detail::parallel_chunks(lines, 64, threads, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
            std::vector<std::uint16_t> line(len);
            for (std::uint64_t l = begin; l < end; ++l) {
                const std::uint64_t outer = l / stride, inner = l % stride;
                const std::uint64_t base = outer * len * stride + inner;
                for (std::uint64_t k = 0; k < len; ++k) line[k] = grid[base + k * stride];
                detail::newton_interpolate16(line);
                for (std::uint64_t k = 0; k < len; ++k) grid[base + k * stride] = line[k];
            }
        });
    }

    std::vector<Monomial> terms;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (grid[idx] == 0) continue;
        if (grid[idx] != 1) {
            throw Error(Errc::InterpolationFailed, "interpolated coefficient outside GF(2)");
        }
        Monomial m{};
        std::uint64_t rest = idx;
        for (std::size_t a = axes.size(); a-- > 0;) {
            m[axes[a]] = static_cast<std::uint16_t>(rest % extent[a]);
            rest /= extent[a];
        }
        terms.push_back(m);
    }
    return MPoly::from_terms(std::move(terms));
}

/// Sylvester matrix of f and g in var: q rows of f's coefficients, then p rows of g's.
inline std::vector<std::vector<MPoly>> sylvester_matrix(const MPoly& f, const MPoly& g, Var var) {
    detail::check_eliminable(f, g, var);
    const auto fc = f.coefficients(var);
    const auto gc = g.coefficients(var);
    const std::size_t p = fc.size() - 1, q = gc.size() - 1, N = p + q;
    std::vector<std::vector<MPoly>> S(N, std::vector<MPoly>(N));
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t k = 0; k <= p; ++k) S[r][r + k] = fc[p - k];
    }
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t k = 0; k <= q; ++k) S[q + r][r + k] = gc[q - k];
    }
    return S;
}

/// Fraction-free Gaussian elimination over GF(2)[coefficient variables].
inline MPoly resultant_bareiss(const MPoly& f, const MPoly& g, Var var) {
    auto M = sylvester_matrix(f, g, var);
    const std::size_t N = M.size();
    MPoly prev = MPoly::one();
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < N && M[piv][k].is_zero()) ++piv;
            if (piv == N) return {};
            std::swap(M[k], M[piv]);  // sign is irrelevant in characteristic 2
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                MPoly num = M[i][j] * M[k][k] + M[i][k] * M[k][j];
                auto q = divide_exact(num, prev);
                if (!q) throw Error(Errc::InterpolationFailed, "Bareiss step left a remainder");
                M[i][j] = std::move(*q);
            }
            M[i][k] = MPoly{};
        }
        prev = M[k][k];
    }
    return M[N - 1][N - 1];
}

inline MPoly resultant(const MPoly& f, const MPoly& g, Var var, const ResultantOptions& opt = {}) {
    switch (opt.method) {
        case ResultantMethod::Bareiss: return resultant_bareiss(f, g, var);
        case ResultantMethod::Interpolation: return resultant_interpolation(f, g, var, opt.threads);
        case ResultantMethod::Auto: break;
    }
    try {
        return resultant_interpolation(f, g, var, opt.threads);
    } catch (const Error& e) {
        if (e.code() != Errc::InterpolationFailed) throw;
        return resultant_bareiss(f, g, var);
    }
}

/// Specializes every variable except var at the point, then takes the
/// Euclidean resultant of the two univariate polynomials over F.
inline Felt resultant_univariate_oracle(const MPoly& f, const MPoly& g, Var var, const Field& F, const Assignment& point) {
    detail::check_eliminable(f, g, var);
    auto specialize = [&](const MPoly& h) {
        const auto cs = h.coefficients(var);
        std::vector<Felt> out;
        for (const auto& c : cs) out.push_back(mp_eval(c, F, point));
        return out;
    };
    std::vector<Felt> a = specialize(f), b = specialize(g);
    if (a.back().is_zero() || b.back().is_zero()) {
        throw Error(Errc::LeadingCoefficientVanished, "leading coefficient vanishes at this point");
    }
    Felt res = F.one();
    for (;;) {
        if (a.size() < b.size()) std::swap(a, b);
        const std::size_t da = a.size() - 1, db = b.size() - 1;
        if (db == 0) return F.mul(res, F.pow(b[0], da));
        const Felt ilc = F.inv(b.back());
        for (std::size_t i = da + 1; i-- > db;) {
            if (a[i].is_zero()) continue;
            const Felt t = F.mul(a[i], ilc);
            for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = F.add(a[i - db + j], F.mul(t, b[j]));
        }
        a.resize(db);
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.empty()) return F.zero();
        res = F.mul(res, F.pow(b.back(), da - (a.size() - 1)));
    }
}

struct EliminationStep {
    MPoly lhs;
    MPoly rhs;
    Var var;
    MPoly result;
};

inline EliminationStep eliminate(const MPoly& lhs, const MPoly& rhs, Var var, const ResultantOptions& opt = {}) {
    return {lhs, rhs, var, resultant(lhs, rhs, var, opt)};
}

}  // namespace zapn
