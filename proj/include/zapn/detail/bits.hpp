/**************************************************************************
 * detail/bits.hpp
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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace zapn::detail {

/// Carryless 64x64 -> 128 product, returned as (lo, hi).
inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) noexcept {
#if defined(__PCLMUL__)
    const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                           _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
    lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
    hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
#else
    // 4-bit window over b; the table holds a * k for k < 16 (at most 67 bits).
    std::uint64_t tlo[16];
    std::uint64_t thi[16];
    tlo[0] = 0;
    thi[0] = 0;
    tlo[1] = a;
    thi[1] = 0;
    for (int k = 2; k < 16; k += 2) {
        tlo[k] = tlo[k / 2] << 1;
        thi[k] = (thi[k / 2] << 1) | (tlo[k / 2] >> 63);
        tlo[k + 1] = tlo[k] ^ a;
        thi[k + 1] = thi[k];
    }
    std::uint64_t l = 0;
    std::uint64_t h = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        h = (h << 4) | (l >> 60);
        l <<= 4;
        const unsigned nib = static_cast<unsigned>(b >> shift) & 15u;
        l ^= tlo[nib];
        h ^= thi[nib];
    }
    lo = l;
    hi = h;
#endif
}

/// Carryless product of two values below 2^32.
inline std::uint64_t clmul32(std::uint32_t a, std::uint32_t b) noexcept {
#if defined(__PCLMUL__)
    std::uint64_t lo, hi;
    clmul64(a, b, lo, hi);
    return lo;
#else
    std::uint64_t r = 0;
    const std::uint64_t wide = a;
    while (b != 0) {
        r ^= wide << std::countr_zero(b);
        b &= b - 1;
    }
    return r;
#endif
}

/// Interleaves zeros into the low 32 bits: bit i moves to bit 2i.
inline std::uint64_t spread32(std::uint32_t v) noexcept {
    std::uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

/// Inverse of spread32 on the even bit positions.
inline std::uint32_t gather32(std::uint64_t x) noexcept {
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
    return static_cast<std::uint32_t>(x);
}

inline unsigned resolve_threads(unsigned requested) noexcept {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks and runs fn(chunk, begin, end) on
/// up to `threads` workers. Chunk boundaries depend only on total and the
/// chunk count, so per-chunk results merged in chunk order are deterministic.
template <class Fn>
void parallel_chunks(std::uint64_t total, std::size_t chunks, unsigned threads, Fn&& fn) {
    if (total == 0) return;
    chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(chunks, total));
    const std::uint64_t step = (total + chunks - 1) / chunks;
    auto run = [&](std::size_t c) {
        const std::uint64_t begin = c * step;
        const std::uint64_t end = std::min(total, begin + step);
        if (begin < end) fn(c, begin, end);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (threads == 1) {
        for (std::size_t c = 0; c < chunks; ++c) run(c);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t c = t; c < chunks; c += threads) run(c);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace zapn::detail
