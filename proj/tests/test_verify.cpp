/**************************************************************************
 * test_verify.cpp
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

#include <filesystem>
#include <fstream>
#include <functional>

#include <gtest/gtest.h>

#include "zapn/verify.hpp"

using namespace zapn;

namespace {

const CertStep* find_step(const Certificate& c, const std::string& kind, const std::string& name) {
    for (const auto& s : c.steps) {
        if (s.kind == kind && s.name == name) return &s;
    }
    return nullptr;
}

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

TEST(Theorems, Registry) {
    EXPECT_EQ(theorem_registry().size(), 14u);
    EXPECT_EQ(printed_theorems().size(), 9u);
    EXPECT_EQ(theorem_info("2m+1").tag, "3.1");
    EXPECT_EQ(theorem_info("3.4-case3", false).family_id, 10);
    EXPECT_EQ(code_of([] { theorem_info("3.2-case2"); }), Errc::TranscriptionMissing);
    EXPECT_EQ(code_of([] { theorem_info("9.9"); }), Errc::UnknownTheorem);
    EXPECT_EQ(code_of([] { verify_theorem_symbolic("3.6-case2"); }), Errc::TranscriptionMissing);
    EXPECT_EQ(code_of([] { load_system("3.1", "/nonexistent"); }), Errc::Io);
}

TEST(Theorems, EveryFamilyHasATag) {
    for (const auto& f : builtin_families()) {
        const auto& th = theorem_info(f.theorem, false);
        EXPECT_EQ(th.family_id, f.id);
        EXPECT_EQ(th.printed, f.printed);
    }
}

TEST(Subfield, Membership) {
    EXPECT_TRUE(subfield_membership_check(9, 2));
    EXPECT_FALSE(subfield_membership_check(10, 2));
    EXPECT_FALSE(subfield_membership_check(35, 7));
    EXPECT_TRUE(subfield_membership_check(53 * 2 + 1, 53));
}

TEST(Conjugate, PrintedSystemsAtSmallestM) {
    for (const auto& tag : printed_theorems()) {
        const auto m = smallest_valid_m(tag);
        const auto rep = conjugate_system_report(tag, m);
        EXPECT_TRUE(rep.ok()) << tag << ": " << (rep.mismatches.empty() ? "" : rep.mismatches.front());
        EXPECT_EQ(rep.checked, std::uint64_t{1} << rep.inst.n);
        EXPECT_TRUE(verify_conjugate_system(tag, m)) << tag;
    }
}

TEST(Conjugate, ExcludedMStillAgrees) {
    for (const auto& [tag, m] : std::vector<std::pair<std::string, int>>{{"3.2", 5}, {"3.3", 2}, {"3.3", 5}}) {
        const auto rep = conjugate_system_report(tag, m, default_data_dir(), false);
        EXPECT_EQ(rep.scalar_roots, 2u) << tag << " " << m;
        EXPECT_TRUE(rep.ok()) << tag << " " << m;
    }
    EXPECT_EQ(code_of([] { conjugate_system_report("3.2", 5); }), Errc::ConstraintViolated);
    EXPECT_EQ(code_of([] { conjugate_system_report("3.1", 8); }), Errc::FieldTooLarge);
}

TEST(Conjugate, DetectsCorruptedSystem) {
    const std::string dir = ::testing::TempDir() + "zapn_sys";
    std::filesystem::create_directories(dir + "/systems");
    std::ofstream(dir + "/systems/3.1.txt") << "# altered\ny^2x^2+y^2x+y^2+x^3+x^2\nxy^2+xy+x+y^3+y^2+y\n";
    EXPECT_FALSE(verify_conjugate_system("3.1", 2, dir));
}

TEST(Exhaustive, FamilyInstances) {
    const auto r = verify_family_exhaustive(1, 4, false, 1);
    EXPECT_TRUE(r.zero_apn);
    EXPECT_EQ(r.uniformity, 6u);
    EXPECT_TRUE(r.is_example);
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_EQ(code_of([] { verify_family_exhaustive(4, 5); }), Errc::ConstraintViolated);
    EXPECT_EQ(code_of([] { verify_family_exhaustive(1, 12); }), Errc::FieldTooLarge);
}

TEST(Certificates, AllPrintedPass) {
    for (const auto& tag : printed_theorems()) {
        const auto c = verify_theorem_symbolic(tag);
        EXPECT_TRUE(c.passed()) << tag;
        EXPECT_EQ(c.verdict(), "pass");
        for (const auto& s : c.steps) EXPECT_NE(s.status, "fail") << tag << " " << s.kind << " " << s.name;
    }
}

TEST(Certificates, Thm2mPlus1) {
    const auto c = verify_theorem_symbolic("3.1");
    EXPECT_EQ(c.final_factorization, "x*(x+1)*(x^2+x+1)^4");
    EXPECT_EQ(mp_parse(c.final_result), mp_parse("x*(x+1)*(x^2+x+1)^4"));
}

TEST(Certificates, Thm3mMinus1) {
    const auto c = verify_theorem_symbolic("3.2");
    const auto* sq = find_step(c, "expect_product", "R(x,y)");
    ASSERT_NE(sq, nullptr);
    EXPECT_EQ(sq->status, "pass");
    const auto* ds = find_step(c, "expect_degree_set", "R");
    ASSERT_NE(ds, nullptr);
    EXPECT_EQ(ds->result, "{7}");
    const auto* sub = find_step(c, "subfield_note", "GF(2^7)");
    ASSERT_NE(sub, nullptr);
    EXPECT_EQ(sub->status, "gap");
}

TEST(Certificates, Thm3m) {
    const auto c = verify_theorem_symbolic("3.3");
    const Factorization f = factorize(mp_parse(c.final_result).to_bitpoly(Var::x));
    std::vector<unsigned> mult;
    for (const auto& fc : f.factors) mult.push_back(fc.multiplicity);
    EXPECT_EQ(mult, (std::vector<unsigned>{480, 480, 64, 48, 48, 4, 4}));
    bool inner = false;
    for (const auto& s : c.steps) {
        if (s.kind == "frobenius_case" && s.detail.find("degree set {8,54,150}") != std::string::npos) inner = s.status == "pass";
    }
    EXPECT_TRUE(inner);
}

TEST(Certificates, Thm3mPlus1) {
    const auto c1 = verify_theorem_symbolic("3.4-case1");
    EXPECT_EQ(mp_parse(c1.final_result), mp_parse("y*(y+1)*(x^2+x+1)^2*(y^2+y+1)"));
    const auto c2 = verify_theorem_symbolic("3.4-case2");
    EXPECT_EQ(c2.final_factorization, "x^346*(x+1)^346");
}

TEST(Certificates, Thm4mPlus1) {
    const auto c = verify_theorem_symbolic("3.5");
    EXPECT_TRUE(c.passed());
    EXPECT_EQ(c.errata(), 2u);
    const auto* ds = find_step(c, "expect_degree_set", "R");
    ASSERT_NE(ds, nullptr);
    EXPECT_EQ(ds->result, "{53}");
}

TEST(Certificates, Thm5m) {
    const auto c = verify_theorem_symbolic("3.6");
    EXPECT_EQ(c.final_factorization, "x*(x+1)");
    EXPECT_EQ(c.errata(), 0u);
    for (const auto& s : c.steps) {
        if (s.kind == "expect_product" || s.kind == "divide") {
            EXPECT_EQ(s.status, "pass") << s.name;
        }
    }
}

TEST(Certificates, DeterministicAndMethodIndependent) {
    for (const std::string tag : {"3.1", "3.4-case2", "4m-1-case2"}) {
        const auto a = to_json(verify_theorem_symbolic(tag, {ResultantMethod::Interpolation, 1}));
        const auto b = to_json(verify_theorem_symbolic(tag, {ResultantMethod::Bareiss, 1}));
        const auto c = to_json(verify_theorem_symbolic(tag, {ResultantMethod::Interpolation, 1}));
        EXPECT_EQ(a, c) << tag;
        EXPECT_EQ(a, b) << tag;
    }
}

TEST(Certificates, MatchGoldenFiles) {
    for (const auto& tag : printed_theorems()) {
        std::ifstream in(std::string(ZAPN_SOURCE_DIR) + "/certificates/" + tag + ".json");
        ASSERT_TRUE(in) << tag;
        const auto golden = nlohmann::ordered_json::parse(in);
        EXPECT_EQ(to_json(verify_theorem_symbolic(tag)), golden) << tag;
    }
}

TEST(Certificates, JsonShape) {
    const auto j = to_json(verify_theorem_symbolic("3.1"));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"theorem", "family", "seed", "system", "steps", "final", "final_factorization",
                                              "errata", "verdict"}));
    EXPECT_EQ(j["verdict"], "pass");
}
