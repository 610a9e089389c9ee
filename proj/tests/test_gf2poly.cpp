/**************************************************************************
 * test_gf2poly.cpp
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

#include <random>

#include <gtest/gtest.h>

#include "zapn/gf2poly.hpp"

using namespace zapn;

namespace {

BitPoly P(const char* s) { return parse_bitpoly(s); }

BitPoly random_poly(int degree, std::mt19937_64& rng) {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(degree / 64 + 1));
    for (auto& x : w) x = rng();
    BitPoly p = BitPoly::from_words(w);
    BitPoly r;
    for (int i = 0; i < degree; ++i) {
        if (p.coeff(static_cast<std::size_t>(i))) r.flip(static_cast<std::size_t>(i));
    }
    r.flip(static_cast<std::size_t>(degree));
    return r;
}

int mobius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    return n > 1 ? -r : r;
}

}  // namespace

TEST(BitPoly, Basics) {
    EXPECT_EQ(BitPoly().degree(), -1);
    EXPECT_TRUE(BitPoly().is_zero());
    EXPECT_EQ(P("x^2+1").degree(), 2);
    EXPECT_EQ(P("x+1") * P("x+1"), P("x^2+1"));
    const BitPoly f = P("x^70+x^3+1");
    EXPECT_TRUE((f + f).is_zero());
    EXPECT_EQ(f.weight(), 3u);
    EXPECT_EQ(f.support(), (std::vector<std::size_t>{70, 3, 0}));
}

TEST(BitPoly, Printing) {
    EXPECT_EQ(to_string(P("x^12+x+1")), "x^12+x+1");
    EXPECT_EQ(to_string(BitPoly()), "0");
    EXPECT_EQ(to_string(BitPoly::one()), "1");
    EXPECT_EQ(to_hex(P("x^9+x+1")), "203");
    EXPECT_EQ(parse_bitpoly("0x203"), P("x^9+x+1"));
    EXPECT_EQ(parse_bitpoly("x^2-x-1"), P("x^2+x+1"));
    EXPECT_THROW(parse_bitpoly("x^^2"), Error);
}

TEST(BitPoly, DivRemExample) {
    // a = q*b + r recomputed by hand: (x+1)(x^2+x+1) = x^3+1, remainder x+1.
    const auto [q, r] = divrem(P("x^3+x"), P("x^2+x+1"));
    EXPECT_EQ(q, P("x+1"));
    EXPECT_EQ(r, P("x+1"));
}

TEST(BitPoly, DivRemContract) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        const BitPoly a = random_poly(static_cast<int>(rng() % 500), rng);
        const BitPoly b = random_poly(static_cast<int>(rng() % 200), rng);
        const auto [q, r] = divrem(a, b);
        ASSERT_EQ(q * b + r, a);
        ASSERT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(divrem(P("x"), BitPoly()), Error);
}

TEST(BitPoly, Gcd) {
    EXPECT_EQ(gcd(P("x^2+x"), P("x^2+1")), P("x+1"));
    EXPECT_EQ(gcd(P("x^5+x+1"), BitPoly()), P("x^5+x+1"));
    EXPECT_EQ(gcd(P("x^2+x+1"), P("x^3+x+1")), BitPoly::one());
    try {
        gcd(BitPoly(), BitPoly());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BothZero);
    }
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const BitPoly h = random_poly(static_cast<int>(rng() % 30), rng);
        const BitPoly f = h * random_poly(static_cast<int>(rng() % 100), rng);
        const BitPoly g = h * random_poly(static_cast<int>(rng() % 100), rng);
        const BitPoly d = gcd(f, g);
        ASSERT_TRUE((f % d).is_zero());
        ASSERT_TRUE((g % d).is_zero());
        ASSERT_TRUE((d % h).is_zero());
    }
}

TEST(BitPoly, Irreducibility) {
    EXPECT_TRUE(is_irreducible(P("x^2+x+1")));
    EXPECT_FALSE(is_irreducible(P("x^2+1")));
    EXPECT_TRUE(is_irreducible(P("x^12+x^11+x^8+x^6+x^4+x^3+x^2+x+1")));
    EXPECT_TRUE(is_irreducible(P("x^12+x^11+x^10+x^9+x^8+x^6+x^4+x+1")));
    try {
        is_irreducible(BitPoly::one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ConstantPolynomial);
    }
}

TEST(BitPoly, IrreducibleCountMatchesMobius) {
    for (int d = 1; d <= 12; ++d) {
        long expected = 0;
        for (int e = 1; e <= d; ++e) {
            if (d % e == 0) expected += mobius(e) * (1L << (d / e));
        }
        expected /= d;
        long count = 0;
        for (std::uint64_t c = std::uint64_t{1} << d; c < (std::uint64_t{2} << d); ++c) {
            count += is_irreducible(BitPoly::from_word(c));
        }
        EXPECT_EQ(count, expected) << "d=" << d;
    }
}

TEST(Factorize, SmallExamples) {
    const auto f = factorize(P("x^4+x"));
    ASSERT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(to_string(f), "x*(x+1)*(x^2+x+1)");
    EXPECT_EQ(to_string(factorize(P("x^2+1"))), "(x+1)^2");
    try {
        factorize(BitPoly());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
    }
}

TEST(Factorize, PerfectSquaresAndHighMultiplicity) {
    const BitPoly w = P("x^2+x+1");
    BitPoly f = P("x^3+x+1");
    for (int k = 0; k < 6; ++k) f = f * w;
    f = f * f;
    const auto fact = factorize(f);
    EXPECT_EQ(to_string(fact), "(x^2+x+1)^12*(x^3+x+1)^2");
}

TEST(Factorize, DegreeSet) {
    const auto f = factorize(P("x^2+x") * P("x^4+x^2+1") * P("x^4+x^2+1"));
    EXPECT_EQ(degree_set(f, true), (std::set<int>{2}));
    EXPECT_EQ(degree_set(factorize(P("x^2+x")), true), (std::set<int>{}));
    EXPECT_EQ(degree_set(factorize(P("x^2+x")), false), (std::set<int>{1}));
}

TEST(Factorize, ReexpansionAndIrreducibility) {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 40; ++k) {
        const BitPoly f = random_poly(1 + static_cast<int>(rng() % 600), rng);
        const auto fact = factorize(f, rng());
        ASSERT_EQ(fact.expand(), f);
        for (std::size_t i = 0; i < fact.factors.size(); ++i) {
            ASSERT_TRUE(is_irreducible(fact.factors[i].poly));
            if (i) {
                ASSERT_LT(fact.factors[i - 1].poly, fact.factors[i].poly);
            }
        }
    }
}

TEST(Factorize, SeedIndependent) {
    std::mt19937_64 rng(9);
    const BitPoly f = random_poly(300, rng) * random_poly(200, rng);
    EXPECT_EQ(factorize(f, 1), factorize(f, 2));
}
