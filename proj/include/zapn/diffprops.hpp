/**************************************************************************
 * diffprops.hpp
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

// Differential properties of power maps x -> x^d by exhaustive scan.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zapn/detail/bits.hpp"
#include "zapn/error.hpp"
#include "zapn/gf2n.hpp"

namespace zapn {

/// Scans above this degree need ScanOptions::force.
inline constexpr unsigned kScanCeiling = 24;

struct ScanOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    bool force = false;
};

/// x^d over a field; d is kept reduced mod 2^n - 1.
class PowerMap {
public:
    PowerMap(Field field, std::uint64_t d) : field_(std::move(field)), d_(d) {
        if (d == 0) throw Error(Errc::DegenerateExponent, "exponent 0 gives a constant map");
        const std::uint64_t ord = field_.group_order();
        reduced_ = d % ord;
        if (ord == 1) reduced_ = 1;
        if (reduced_ == 0) {
            throw Error(Errc::DegenerateExponent, "exponent " + std::to_string(d) + " is a multiple of 2^n-1");
        }
    }

    const Field& field() const noexcept { return field_; }
    std::uint64_t exponent() const noexcept { return d_; }
    std::uint64_t reduced_exponent() const noexcept { return reduced_; }

    Felt operator()(Felt x) const noexcept { return x.is_zero() ? x : field_.pow(x, reduced_); }

private:
    Field field_;
    std::uint64_t d_;
    std::uint64_t reduced_;
};

namespace detail {

inline void require_scannable(const Field& F, const ScanOptions& opt) {
    if (F.degree() > kScanCeiling && !opt.force) {
        throw Error(Errc::FieldTooLarge, "n = " + std::to_string(F.degree()) + " exceeds the scan ceiling " +
                                             std::to_string(kScanCeiling) + " (use force)");
    }
}

inline std::size_t chunk_count(std::uint64_t total) {
    return static_cast<std::size_t>(std::min<std::uint64_t>(256, std::max<std::uint64_t>(1, total / 4096)));
}

}  // namespace detail

/// Lookup table T[x] = x^d, built by walking powers of a generator.
inline std::vector<std::uint32_t> power_table(const PowerMap& pm, const ScanOptions& opt = {}) {
    const Field& F = pm.field();
    if (F.degree() > kScanCeiling) {
        throw Error(Errc::FieldTooLarge, "power table limited to n <= " + std::to_string(kScanCeiling));
    }
    std::vector<std::uint32_t> T(F.size(), 0);
    const Felt g = F.generator();
    const Felt gd = F.pow(g, pm.reduced_exponent());
    const std::uint64_t ord = F.group_order();
    detail::parallel_chunks(ord, detail::chunk_count(ord), detail::resolve_threads(opt.threads),
                            [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
                                Felt x = F.pow(g, begin), y = F.pow(gd, begin);
                                for (std::uint64_t i = begin; i < end; ++i) {
                                    T[x.bits] = y.bits;
                                    x = F.mul(x, g);
                                    y = F.mul(y, gd);
                                }
                            });
    return T;
}

/// Histogram of D_1F(x) = F(x+1) + F(x) over all x; entry b is delta_F(1, b).
inline std::vector<std::uint32_t> derivative_row(const PowerMap& pm, const ScanOptions& opt = {}) {
    detail::require_scannable(pm.field(), opt);
    const Field& F = pm.field();
    const std::uint64_t half = F.size() / 2;
    std::vector<std::uint32_t> row(F.size(), 0);
    const unsigned threads = detail::resolve_threads(opt.threads);
    // x and x+1 give the same value, so only even x are visited (each counts twice).
    if (F.degree() <= kScanCeiling) {
        const auto T = power_table(pm, opt);
        if (threads == 1) {
            for (std::uint64_t k = 0; k < half; ++k) row[T[2 * k] ^ T[2 * k + 1]] += 2;
            return row;
        }
        std::vector<std::atomic<std::uint32_t>> acc(F.size());
        detail::parallel_chunks(half, detail::chunk_count(half), threads, [&](std::size_t, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t k = b; k < e; ++k) acc[T[2 * k] ^ T[2 * k + 1]].fetch_add(2, std::memory_order_relaxed);
        });
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = acc[i].load();
        return row;
    }
    std::vector<std::atomic<std::uint32_t>> acc(F.size());
    detail::parallel_chunks(half, detail::chunk_count(half), threads, [&](std::size_t, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t k = b; k < e; ++k) {
            const Felt x{static_cast<std::uint32_t>(2 * k)};
            acc[(pm(x).bits ^ pm(Felt{x.bits | 1u}).bits)].fetch_add(2, std::memory_order_relaxed);
        }
    });
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = acc[i].load();
    return row;
}

/// |{x : F(x+a) + F(x) = b}| by direct scan.
inline std::uint64_t derivative_count(const PowerMap& pm, Felt a, Felt b) {
    if (a.is_zero()) throw Error(Errc::ZeroDirection, "derivative direction must be nonzero");
    const Field& F = pm.field();
    std::uint64_t c = 0;
    for (std::uint64_t x = 0; x < F.size(); ++x) {
        const Felt fx{static_cast<std::uint32_t>(x)};
        if (F.add(pm(F.add(fx, a)), pm(fx)) == b) ++c;
    }
    return c;
}

/// delta(F) from the a = 1 row: delta_F(a, b) = delta_F(1, b / a^d).
inline std::uint32_t differential_uniformity(const PowerMap& pm, const ScanOptions& opt = {}) {
    const auto row = derivative_row(pm, opt);
    return *std::max_element(row.begin(), row.end());
}

/// Max over every a != 0 and b; quadratic in the field size.
inline std::uint32_t differential_uniformity_naive(const PowerMap& pm) {
    const Field& F = pm.field();
    const auto T = power_table(pm, {1, false});
    std::vector<std::uint32_t> cnt(F.size());
    std::uint32_t best = 0;
    for (std::uint64_t a = 1; a < F.size(); ++a) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::uint64_t x = 0; x < F.size(); ++x) ++cnt[T[x ^ a] ^ T[x]];
        best = std::max(best, *std::max_element(cnt.begin(), cnt.end()));
    }
    return best;
}

/// Definition check over all pairs (x, y); quadratic in the field size.
inline bool is_x0_apn(const PowerMap& pm, Felt x0) {
    const Field& F = pm.field();
    const auto T = power_table(pm, {1, false});
    const std::uint64_t q = F.size();
    const std::uint32_t f0 = T[x0.bits];
    for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint32_t fx = T[x];
        for (std::uint64_t y = 0; y < q; ++y) {
            const std::uint32_t w = x0.bits ^ static_cast<std::uint32_t>(x ^ y);
            if ((f0 ^ fx ^ T[y] ^ T[w]) != 0) continue;
            if (x == x0.bits || y == x0.bits || x == y) continue;
            return false;
        }
    }
    return true;
}

struct ZeroApnResult {
    bool zero_apn = true;
    std::vector<Felt> witnesses;  // ascending, at most kMaxWitnesses
    std::uint64_t solutions = 0;  // total count of x outside {0, 1}

    static constexpr std::size_t kMaxWitnesses = 16;
};

/// 0-APN iff F(x+1) + F(x) = 1 has no solution outside {0, 1}.
inline ZeroApnResult is_zero_apn(const PowerMap& pm, const ScanOptions& opt = {}) {
    detail::require_scannable(pm.field(), opt);
    const Field& F = pm.field();
    const std::uint64_t half = F.size() / 2;
    const std::size_t chunks = detail::chunk_count(half);
    struct Part {
        std::vector<Felt> w;
        std::uint64_t count = 0;
    };
    std::vector<Part> parts(chunks);
    std::vector<std::uint32_t> T;
    const bool tabled = F.degree() <= kScanCeiling;
    if (tabled) T = power_table(pm, opt);
    detail::parallel_chunks(half, chunks, detail::resolve_threads(opt.threads),
                            [&](std::size_t c, std::uint64_t b, std::uint64_t e) {
                                Part& part = parts[c];
                                for (std::uint64_t k = std::max<std::uint64_t>(b, 1); k < e; ++k) {
                                    const std::uint32_t x = static_cast<std::uint32_t>(2 * k);
                                    const std::uint32_t v = tabled ? (T[x] ^ T[x | 1u])
                                                                   : (pm(Felt{x}).bits ^ pm(Felt{x | 1u}).bits);
                                    if (v != 1) continue;
                                    part.count += 2;
                                    if (part.w.size() < ZeroApnResult::kMaxWitnesses) part.w.push_back({x});
                                    if (part.w.size() < ZeroApnResult::kMaxWitnesses) part.w.push_back({x | 1u});
                                }
                            });
    ZeroApnResult r;
    for (const auto& p : parts) {
        r.solutions += p.count;
        for (Felt w : p.w) {
            if (r.witnesses.size() < ZeroApnResult::kMaxWitnesses) r.witnesses.push_back(w);
        }
    }
    r.zero_apn = r.solutions == 0;
    return r;
}

struct DiffSpectrum {
    std::map<std::uint32_t, std::uint64_t> counts;  // delta value -> number of (a, b) with a != 0

    std::uint32_t max_delta() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

/// Row a = 1 multiset scaled by 2^n - 1 (each row is a permutation of it).
inline DiffSpectrum diff_spectrum(const PowerMap& pm, const ScanOptions& opt = {}) {
    const auto row = derivative_row(pm, opt);
    DiffSpectrum s;
    for (auto v : row) ++s.counts[v];
    for (auto& [delta, n] : s.counts) n *= pm.field().group_order();
    return s;
}

}  // namespace zapn
