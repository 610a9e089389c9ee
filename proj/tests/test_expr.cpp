/**************************************************************************
 * test_expr.cpp
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

#include <functional>

#include <gtest/gtest.h>

#include "zapn/expr.hpp"

using namespace zapn;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return Errc::Io;
}

}  // namespace

TEST(Expr, Arithmetic) {
    EXPECT_EQ(Expr::parse("2^(m+1)+3").eval({{'m', 4}}), 35);
    EXPECT_EQ(Expr::parse("5*2^(m-1)+1").eval({{'m', 4}}), 41);
    EXPECT_EQ(Expr::parse("2^(2*m+1)-3*2^(m-1)+1").eval({{'m', 3}}), 117);
    EXPECT_EQ(Expr::parse("(3*m+1)/2").eval({{'m', 3}}), 5);
    EXPECT_EQ(Expr::parse("-3 mod 5").eval({}), 2);
    EXPECT_EQ(Expr::parse("gcd(12, 18)").eval({}), 6);
    EXPECT_EQ(Expr::parse("2^3^2").eval({}), 512);
    EXPECT_EQ(Expr::parse("3m").eval({{'m', 7}}), 21);
}

TEST(Expr, Variables) {
    const auto v = Expr::parse("2^(2*i)-2^i+n").variables();
    EXPECT_EQ(v, (std::set<char>{'i', 'n'}));
}

TEST(Expr, EvalMod) {
    const Expr e = Expr::parse("2^n-2");
    EXPECT_EQ(e.eval_mod({{'n', 5}}, 31), 30u);
    EXPECT_EQ(Expr::parse("2^(4*m)+1").eval_mod({{'m', 15}}, 1000003), Expr::parse("2^(4*m)+1").eval_mod({{'m', 15}}, 1000003));
    EXPECT_EQ(Expr::parse("2^70").eval_mod({}, 127), 1u);  // 2^7 = 1 mod 127
    EXPECT_EQ(Expr::parse("0-1").eval_mod({}, 31), 30u);
}

TEST(Expr, Errors) {
    EXPECT_EQ(code_of([] { Expr::parse("2^"); }), Errc::SyntaxError);
    EXPECT_EQ(code_of([] { Expr::parse("(1+2"); }), Errc::SyntaxError);
    EXPECT_EQ(code_of([] { Expr::parse("foo+1"); }), Errc::UnknownVariable);
    EXPECT_EQ(code_of([] { Expr::parse("m+1").eval({}); }), Errc::MissingVariable);
    EXPECT_EQ(code_of([] { Expr::parse("1/0").eval({}); }), Errc::DivisionByZero);
    EXPECT_EQ(code_of([] { Expr::parse("3/2").eval({}); }), Errc::NotApplicable);
    EXPECT_EQ(code_of([] { Expr::parse("2^63").eval({}); }), Errc::ExponentOutOfRange);
    EXPECT_EQ(code_of([] { Expr::parse("2^62*4").eval({}); }), Errc::ExponentOutOfRange);
}

TEST(Expr, Constraints) {
    const auto cl = parse_constraints("n=2*m+1, m mod 2 = 0, gcd(i,n)=1, i<n, m>=2, m mod 3 != 2");
    ASSERT_EQ(cl.size(), 6u);
    auto all = [&](std::int64_t m, std::int64_t i) {
        const Bindings b{{'m', m}, {'i', i}, {'n', 2 * m + 1}};
        for (const auto& c : cl) {
            if (!c.holds(b)) return false;
        }
        return true;
    };
    EXPECT_TRUE(all(4, 2));
    EXPECT_FALSE(all(3, 2));
    EXPECT_FALSE(all(2, 5));   // m mod 3 = 2
    EXPECT_FALSE(all(6, 13));  // i = n
    EXPECT_TRUE(parse_constraints("").empty());
}
