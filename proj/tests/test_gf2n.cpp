/**************************************************************************
 * test_gf2n.cpp
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

#include <map>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "zapn/gf2n.hpp"

using namespace zapn;

namespace {

// Trial division over integers-as-polynomials; independent of BitPoly.
int ideg(std::uint64_t a) { return 63 - __builtin_clzll(a); }

std::uint64_t imod(std::uint64_t a, std::uint64_t b) {
    while (a && ideg(a) >= ideg(b)) a ^= b << (ideg(a) - ideg(b));
    return a;
}

bool trial_irreducible(std::uint64_t f) {
    for (std::uint64_t g = 2; ideg(g) <= ideg(f) / 2; ++g) {
        if (imod(f, g) == 0) return false;
    }
    return true;
}

std::uint64_t smallest_irreducible(unsigned n) {
    for (std::uint64_t c = std::uint64_t{1} << n;; ++c) {
        if (trial_irreducible(c)) return c;
    }
}

}  // namespace

TEST(Field, ConstructGF4) {
    Field F(2, BitPoly::from_word(0b111));
    EXPECT_EQ(F.size(), 4u);
    EXPECT_EQ(F.modulus_hex(), "7");
}

TEST(Field, RejectsReducibleModulus) {
    try {
        Field F(2, BitPoly::from_word(0b101));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NonIrreducibleModulus);
    }
}

TEST(Field, RejectsDegreeMismatchAndRange) {
    try {
        Field F(3, BitPoly::from_word(0b111));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeMismatch);
    }
    try {
        Field F(33);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnsupportedDegree);
    }
    EXPECT_THROW(Field(0), Error);
}

TEST(Field, DefaultModulusDegree9) {
    // Frozen from the trial-division oracle above: x^9 + x + 1.
    EXPECT_EQ(smallest_irreducible(9), 0x203u);
    EXPECT_EQ(Field(9).modulus(), BitPoly::from_word(0x203));
}

TEST(Field, DefaultModulusMatchesOracle) {
    for (unsigned n = 1; n <= 20; ++n) {
        EXPECT_EQ(default_modulus(n), BitPoly::from_word(smallest_irreducible(n))) << "n=" << n;
    }
}

TEST(Field, GF4Arithmetic) {
    Field F(2);
    const Felt x{2}, x1{3};
    EXPECT_EQ(F.mul(x, x), x1);
    EXPECT_EQ(F.pow(x, 3), F.one());
    EXPECT_EQ(F.inv(x), x1);
    EXPECT_EQ(F.inv(F.one()), F.one());
}

TEST(Field, PowZeroZeroIsOne) {
    Field F(5);
    EXPECT_EQ(F.pow(F.zero(), 0), F.one());
    EXPECT_EQ(F.pow(F.zero(), 3), F.zero());
}

TEST(Field, InverseOfZeroThrows) {
    Field F(5);
    try {
        F.inv(F.zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DivisionByZero);
    }
}

TEST(Field, AxiomsExhaustiveSmall) {
    for (unsigned n = 1; n <= 6; ++n) {
        Field F(n);
        const std::uint32_t q = static_cast<std::uint32_t>(F.size());
        for (std::uint32_t a = 0; a < q; ++a) {
            const Felt A{a};
            EXPECT_TRUE(F.add(A, A).is_zero());
            for (std::uint32_t b = 0; b < q; ++b) {
                const Felt B{b};
                ASSERT_EQ(F.mul(A, B), F.mul(B, A));
                ASSERT_EQ(F.sqr(F.add(A, B)), F.add(F.sqr(A), F.sqr(B)));
                for (std::uint32_t c = 0; c < q; ++c) {
                    const Felt C{c};
                    ASSERT_EQ(F.add(F.add(A, B), C), F.add(A, F.add(B, C)));
                    ASSERT_EQ(F.mul(A, F.add(B, C)), F.add(F.mul(A, B), F.mul(A, C)));
                    ASSERT_EQ(F.mul(F.mul(A, B), C), F.mul(A, F.mul(B, C)));
                }
            }
        }
    }
}

TEST(Field, AxiomsRandomLarge) {
    std::mt19937_64 rng(7);
    for (unsigned n : {13u, 20u, 31u, 32u}) {
        Field F(n);
        for (int k = 0; k < 2000; ++k) {
            const Felt a = F.element(rng() & F.mask()), b = F.element(rng() & F.mask()), c = F.element(rng() & F.mask());
            ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
            if (!a.is_zero()) {
                ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
            }
            ASSERT_EQ(F.pow(a, F.size()), a);
        }
    }
}

TEST(Field, FermatGF512) {
    Field F(9);
    for (std::uint32_t g = 1; g < 512; ++g) ASSERT_EQ(F.pow(Felt{g}, 511), F.one());
}

TEST(Field, FrobeniusFixesEverything) {
    for (unsigned n = 1; n <= 12; ++n) {
        Field F(n);
        for (std::uint32_t a = 0; a < F.size(); ++a) {
            ASSERT_EQ(F.pow(Felt{a}, F.size()), Felt{a});
            ASSERT_EQ(F.frobenius(Felt{a}, n), Felt{a});
        }
    }
}

TEST(Field, InverseMatchesPowerPath) {
    for (unsigned n = 1; n <= 10; ++n) {
        Field F(n);
        for (std::uint32_t a = 1; a < F.size(); ++a) ASSERT_EQ(F.inv(Felt{a}), F.pow(Felt{a}, F.size() - 2));
    }
}

TEST(Field, OrderMultisetIsModulusIndependent) {
    for (unsigned n = 2; n <= 8; ++n) {
        std::vector<std::map<std::uint64_t, int>> hist;
        int found = 0;
        for (std::uint64_t c = std::uint64_t{1} << n; c < (std::uint64_t{2} << n) && found < 3; ++c) {
            if (!trial_irreducible(c)) continue;
            ++found;
            Field F(n, BitPoly::from_word(c));
            std::map<std::uint64_t, int> h;
            for (std::uint32_t a = 1; a < F.size(); ++a) ++h[F.order(Felt{a})];
            hist.push_back(h);
        }
        for (const auto& h : hist) EXPECT_EQ(h, hist.front()) << "n=" << n;
    }
}

TEST(Field, GeneratorIsPrimitive) {
    for (unsigned n = 1; n <= 16; ++n) {
        Field F(n);
        EXPECT_EQ(F.order(F.generator()), F.group_order());
    }
}

TEST(Field, ModulusTableParsing) {
    std::istringstream in("# comment\n9 211\n3 b  # x^3+x+1\n");
    const auto t = parse_modulus_table(in);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t.at(9), BitPoly::from_word(0x211));
    EXPECT_EQ(t.at(3), BitPoly::from_word(0xb));
    Field F(9, t.at(9));
    EXPECT_EQ(F.modulus_hex(), "211");
}

TEST(Field, ElementRangeChecked) {
    Field F(4);
    EXPECT_THROW(F.element(16), Error);
    EXPECT_EQ(F.element(15), Felt{15});
}

TEST(LogField16, MatchesGenericField) {
    const auto& L = LogField16::instance();
    const Field& F = L.field();
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20000; ++k) {
        const std::uint16_t a = static_cast<std::uint16_t>(rng()), b = static_cast<std::uint16_t>(rng());
        ASSERT_EQ(L.mul(a, b), F.mul(Felt{a}, Felt{b}).bits);
        if (a) {
            ASSERT_EQ(L.inv(a), F.inv(Felt{a}).bits);
        }
    }
}
