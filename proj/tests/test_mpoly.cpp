/**************************************************************************
 * test_mpoly.cpp
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

#include "zapn/mpoly.hpp"

using namespace zapn;

namespace {

MPoly M(const char* s) { return mp_parse(s); }

MPoly random_mpoly(std::mt19937_64& rng, unsigned vars, int max_deg, int terms) {
    std::vector<Monomial> t;
    for (int k = 0; k < terms; ++k) {
        Monomial m{};
        for (unsigned i = 0; i < vars; ++i) m[i] = static_cast<std::uint16_t>(rng() % (max_deg + 1));
        t.push_back(m);
    }
    return MPoly::from_terms(std::move(t));
}

Felt random_felt(const Field& F, std::mt19937_64& rng) { return Felt{static_cast<std::uint32_t>(rng() & F.mask())}; }

}  // namespace

TEST(MPoly, ParsePrint) {
    const MPoly e = M("y^2*x^2+y^2*x+y^2+x^3+x^2+x");
    EXPECT_EQ(e.size(), 6u);
    EXPECT_EQ(mp_print(e), "x^2*y^2+x^3+x*y^2+x^2+y^2+x");
    EXPECT_EQ(M("y^2x^2+y^2x+y^2+x^3+x^2+x"), e);
    EXPECT_TRUE(M("x+x").is_zero());
    EXPECT_EQ(mp_print(M("x+x")), "0");
    EXPECT_EQ(M("(x+y)^2"), M("x^2+y^2"));
    EXPECT_EQ(M("3*x + 2*y"), M("x"));
}

TEST(MPoly, ParseErrors) {
    try {
        M("x+w");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownVariable);
    }
    try {
        M("x^");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SyntaxError);
    }
    EXPECT_THROW(M("(x+1"), Error);
}

TEST(MPoly, PrintParseRoundTrip) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        const MPoly p = random_mpoly(rng, 5, 6, 1 + static_cast<int>(rng() % 12));
        const std::string s = mp_print(p);
        ASSERT_EQ(M(s.c_str()), p);
        ASSERT_EQ(mp_print(M(s.c_str())), s);
    }
}

TEST(MPoly, RingOps) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 50; ++k) {
        const MPoly a = random_mpoly(rng, 3, 4, 5), b = random_mpoly(rng, 3, 4, 5), c = random_mpoly(rng, 3, 4, 5);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        if (!b.is_zero()) {
            auto q = divide_exact(a * b, b);
            ASSERT_TRUE(q.has_value());
            ASSERT_EQ(*q, a);
        }
    }
    EXPECT_FALSE(divide_exact(M("x^2+1"), M("x+y")).has_value());
}

TEST(MPoly, Eval) {
    Field F(8);
    for (std::uint32_t a = 0; a < 256; ++a) {
        ASSERT_TRUE(mp_eval(M("x+y"), F, {{Var::x, Felt{a}}, {Var::y, Felt{a}}}).is_zero());
    }
    EXPECT_EQ(mp_eval(M("1"), F, {}), F.one());
    try {
        mp_eval(M("x*z"), F, {{Var::x, F.one()}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::MissingVariable);
    }
}

TEST(MPoly, ConjugateEvaluationThm2mPlus1) {
    // n = 9, m = 4, d = 35: the first equation vanishes at (c, c^16) exactly when
    // (c+1)^35 + c^35 + 1 = 0.
    Field F(9);
    const MPoly e = M("y^2x^2+y^2x+y^2+x^3+x^2+x");
    for (std::uint32_t c = 0; c < 512; ++c) {
        const Felt x{c};
        const bool scalar = F.add(F.add(F.pow(F.add(x, F.one()), 35), F.pow(x, 35)), F.one()).is_zero();
        const bool sys = mp_eval(e, F, {{Var::x, x}, {Var::y, F.frobenius(x, 4)}}).is_zero();
        ASSERT_EQ(scalar, sys) << c;
    }
}

TEST(Resultant, SmallExamples) {
    EXPECT_EQ(resultant(M("y+x"), M("y+x+1"), Var::y), M("1"));
    EXPECT_EQ(resultant(M("y+x^2"), M("y^2+y+x"), Var::y), M("x^4+x^2+x"));
    const MPoly r = resultant(M("y^2x^2+y^2x+y^2+x^3+x^2+x"), M("xy^2+xy+x+y^3+y^2+y"), Var::y);
    EXPECT_EQ(r, M("x*(x+1)*(x^2+x+1)^4"));
    try {
        resultant(M("x+1"), M("y+x"), Var::y);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeZeroInVariable);
    }
}

TEST(Resultant, PrintedSquareThm3mMinus1) {
    const MPoly r = resultant(M("z^5+z^4y^2+z^4+zy^2+z+y^2"), M("x^10+x^8z^2+x^8+x^2z^2+x^2+z^2"), Var::z);
    EXPECT_EQ(r, M("(x^25+x^24y^2+x^17y^2+x^17+x^16+x^9y^2+x^8y^2+x^8+x+y^2)^2"));
}

TEST(Resultant, MethodsAgree) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 40; ++k) {
        const unsigned vars = 2 + static_cast<unsigned>(rng() % 2);
        const MPoly f = random_mpoly(rng, vars, 3, 4) + M("y");
        const MPoly g = random_mpoly(rng, vars, 3, 4) + M("y^2");
        if (f.degree(Var::y) < 1 || g.degree(Var::y) < 1) continue;
        const MPoly a = resultant(f, g, Var::y, {ResultantMethod::Interpolation, 1});
        const MPoly b = resultant(f, g, Var::y, {ResultantMethod::Bareiss, 1});
        ASSERT_EQ(a, b) << mp_print(f) << " | " << mp_print(g);
        ASSERT_EQ(a.degree(Var::y), a.is_zero() ? -1 : 0);
    }
}

TEST(Resultant, ThreadCountDoesNotChangeResult) {
    const MPoly f = M("z^4y^3+y^3x^2+z^4y^2x^2+z^4yx^2+z^4x^2+y^6+y^5+y^4");
    const MPoly g = M("x^4z^3+z^3y^2+x^4z^2y^2+x^4zy^2+x^4y^2+z^6+z^5+z^4");
    EXPECT_EQ(resultant(f, g, Var::z, {ResultantMethod::Interpolation, 1}),
              resultant(f, g, Var::z, {ResultantMethod::Interpolation, 4}));
}

TEST(Resultant, SpecializationIdentity) {
    const Field& F = LogField16::instance().field();
    std::mt19937_64 rng(123);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
        const MPoly f = random_mpoly(rng, 3, 3, 5) + M("y^3");
        const MPoly g = random_mpoly(rng, 3, 3, 5) + M("y");
        if (f.degree(Var::y) < 1 || g.degree(Var::y) < 1) continue;
        const MPoly r = resultant(f, g, Var::y);
        const Assignment pt{{Var::x, random_felt(F, rng)}, {Var::z, random_felt(F, rng)}};
        Assignment full = pt;
        full[Var::y] = F.zero();
        try {
            const Felt want = resultant_univariate_oracle(f, g, Var::y, F, pt);
            ASSERT_EQ(mp_eval(r, F, full), want) << mp_print(f) << " | " << mp_print(g);
            ++checked;
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), Errc::LeadingCoefficientVanished);
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(Resultant, Thm2mPlus1AtRandomPoints) {
    const Field& F = LogField16::instance().field();
    const MPoly f = M("y^2x^2+y^2x+y^2+x^3+x^2+x"), g = M("xy^2+xy+x+y^3+y^2+y");
    const MPoly r = resultant(f, g, Var::y);
    std::mt19937_64 rng(50);
    for (int k = 0; k < 50; ++k) {
        const Felt c = random_felt(F, rng);
        try {
            EXPECT_EQ(resultant_univariate_oracle(f, g, Var::y, F, {{Var::x, c}}), mp_eval(r, F, {{Var::x, c}, {Var::y, c}}));
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::LeadingCoefficientVanished);
        }
    }
}

TEST(Resultant, OracleEdgeCases) {
    const Field F(8);
    EXPECT_TRUE(resultant_univariate_oracle(M("y+1"), M("y+1"), Var::y, F, {}).is_zero());
    const MPoly h = M("y+x");
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        const Felt c = random_felt(F, rng);
        EXPECT_TRUE(resultant_univariate_oracle(h * M("y^2+x"), h * M("y+1"), Var::y, F, {{Var::x, c}}).is_zero());
    }
    try {
        resultant_univariate_oracle(M("x*y+1"), M("y+1"), Var::y, F, {{Var::x, F.zero()}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::LeadingCoefficientVanished);
    }
}

TEST(Resultant, CommonFactorGivesZero) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 30; ++k) {
        const MPoly h = random_mpoly(rng, 2, 2, 3) + M("y");
        if (h.degree(Var::y) < 1) continue;
        const MPoly f = h * (random_mpoly(rng, 2, 2, 3) + M("1"));
        const MPoly g = h * (random_mpoly(rng, 2, 2, 3) + M("y"));
        if (f.degree(Var::y) < 1 || g.degree(Var::y) < 1) continue;
        ASSERT_TRUE(resultant(f, g, Var::y).is_zero());
    }
}

TEST(Resultant, VanishesAtCommonZeros) {
    std::mt19937_64 rng(21);
    for (unsigned s : {4u, 6u}) {
        const Field F(s);
        for (int k = 0; k < 10; ++k) {
            const MPoly f = random_mpoly(rng, 2, 3, 4) + M("y^2");
            const MPoly g = random_mpoly(rng, 2, 3, 4) + M("y");
            if (f.degree(Var::y) < 1 || g.degree(Var::y) < 1) continue;
            const MPoly r = resultant(f, g, Var::y);
            for (std::uint32_t a = 0; a < F.size(); ++a) {
                for (std::uint32_t b = 0; b < F.size(); ++b) {
                    const Assignment at{{Var::x, Felt{a}}, {Var::y, Felt{b}}};
                    if (mp_eval(f, F, at).is_zero() && mp_eval(g, F, at).is_zero()) {
                        ASSERT_TRUE(mp_eval(r, F, at).is_zero());
                    }
                }
            }
        }
    }
}

TEST(Resultant, DegreeBound) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 40; ++k) {
        const MPoly f = random_mpoly(rng, 2, 4, 5) + M("y");
        const MPoly g = random_mpoly(rng, 2, 4, 5) + M("y");
        if (f.degree(Var::y) < 1 || g.degree(Var::y) < 1) continue;
        const MPoly r = resultant(f, g, Var::y);
        const int bound = f.degree(Var::y) * std::max(0, g.degree(Var::x)) + g.degree(Var::y) * std::max(0, f.degree(Var::x));
        ASSERT_LE(r.degree(Var::x), bound);
    }
}

TEST(Resultant, EliminationStep) {
    const auto s = eliminate(M("y+x^2"), M("y^2+y+x"), Var::y);
    EXPECT_EQ(s.var, Var::y);
    EXPECT_EQ(s.result, M("x^4+x^2+x"));
    EXPECT_EQ(s.result.degree(Var::y), 0);
}
