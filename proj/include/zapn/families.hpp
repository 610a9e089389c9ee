/**************************************************************************
 * families.hpp
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

// The fourteen exponent families d(m) over GF(2^n(m)).

#pragma once

#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zapn/error.hpp"
#include "zapn/expr.hpp"

namespace zapn {

/// m is excluded when m mod modulus == residue.
struct Exclusion {
    std::int64_t modulus = 1;
    std::int64_t residue = 0;

    bool excludes(std::int64_t m) const noexcept { return ((m % modulus) + modulus) % modulus == residue; }
    std::string text() const {
        return "m mod " + std::to_string(modulus) + " != " + std::to_string(residue);
    }
    friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

struct FamilySpec {
    int id = 0;
    std::string d_formula;
    std::string n_formula;
    std::vector<Exclusion> exclusions;
    std::string theorem;  // certificate tag
    bool printed = false;  // whether a symbolic certificate exists for the tag
    std::optional<unsigned> subfield_degree;
    std::vector<std::pair<std::uint64_t, unsigned>> examples;  // (d, n)

    std::int64_t n_of(std::int64_t m) const { return Expr::parse(n_formula).eval({{'m', m}}); }

    /// The constraint list in catalog syntax.
    std::string constraint_text() const {
        std::string s = "n=" + n_formula + ", m>=2";
        for (const auto& e : exclusions) s += ", " + e.text();
        return s;
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline const std::vector<FamilySpec>& builtin_families() {
    static const std::vector<FamilySpec> kFamilies = {
        {1, "2^(m+1)+3", "2*m+1", {}, "3.1", true, std::nullopt, {{35, 9}, {67, 11}}},
        {2, "5*2^m+3", "2*m+1", {}, "3.1-case2", false, std::nullopt, {{83, 9}, {163, 11}}},
        {3, "3*(2^m-1)", "3*m-1", {}, "3.2-case2", false, std::nullopt, {{45, 11}}},
        {4, "5*2^(m-1)+1", "3*m-1", {{14, 5}}, "3.2", true, 7u, {{41, 11}}},
        {5, "2^(2*m+1)-3*2^(m-1)+1", "3*m", {{3, 2}}, "3.3", true, std::nullopt, {{117, 9}}},
        {6, "2^(2*m)+2^(m-1)+1", "3*m+1", {}, "3.4-case1", true, std::nullopt, {{69, 10}}},
        {7, "2^(2*m)+3*2^(m-1)-1", "3*m+1", {}, "3.4-case2", true, std::nullopt, {{75, 10}}},
        {8, "2^(2*m-1)+2^m+1", "4*m-1", {}, "4m-1-case2", true, std::nullopt, {{41, 11}}},
        {9, "3*2^m+1", "4*m-1", {}, "4m-1-case1", true, std::nullopt, {{25, 11}}},
        {10, "2^(2*m-1)-2^(m-1)-1", "4*m-1", {}, "4m-1-case3", false, std::nullopt, {{27, 11}}},
        {11, "3*(2^(2*m+1)-1)", "4*m-1", {}, "4m-1-case4", false, std::nullopt, {{381, 11}}},
        {12, "2^(2*m+1)+2^(m-1)+1", "4*m+1", {{53, 13}}, "3.5", true, 53u, {{35, 9}}},
        {13, "2^(3*m)+2^m+1", "5*m", {}, "3.6", true, std::nullopt, {{69, 10}}},
        {14, "2^(2*m+1)-2^m-1", "5*m", {{3, 0}}, "3.6-case2", false, std::nullopt, {{27, 10}}},
    };
    return kFamilies;
}

inline const FamilySpec& family(int id) {
    for (const auto& f : builtin_families()) {
        if (f.id == id) return f;
    }
    throw Error(Errc::NotApplicable, "no family with id " + std::to_string(id));
}

struct FamilyInstance {
    int id = 0;
    std::int64_t m = 0;
    std::uint64_t d = 0;
    unsigned n = 0;
};

/// First violated exclusion at m, if any.
inline std::optional<Exclusion> violated_exclusion(const FamilySpec& f, std::int64_t m) {
    for (const auto& e : f.exclusions) {
        if (e.excludes(m)) return e;
    }
    return std::nullopt;
}

inline FamilyInstance family_instantiate(const FamilySpec& f, std::int64_t m) {
    if (m < 2) throw Error(Errc::MTooSmall, "family " + std::to_string(f.id) + " needs m >= 2, got " + std::to_string(m));
    if (auto e = violated_exclusion(f, m)) {
        throw Error(Errc::ConstraintViolated, "family " + std::to_string(f.id) + " at m = " + std::to_string(m) +
                                                  " violates " + e->text());
    }
    const std::int64_t n = f.n_of(m);
    if (n < 1 || n > 62) throw Error(Errc::ExponentOutOfRange, "n = " + std::to_string(n) + " is out of range");
    const std::int64_t d = Expr::parse(f.d_formula).eval({{'m', m}});
    return {f.id, m, static_cast<std::uint64_t>(d), static_cast<unsigned>(n)};
}

inline FamilyInstance family_instantiate(int id, std::int64_t m) { return family_instantiate(family(id), m); }

/// Valid m (>= 2, no exclusion hit) with n(m) <= max_n, ascending.
inline std::vector<std::int64_t> valid_m(const FamilySpec& f, std::int64_t max_n) {
    std::vector<std::int64_t> out;
    for (std::int64_t m = 2; f.n_of(m) <= max_n; ++m) {
        if (!violated_exclusion(f, m)) out.push_back(m);
    }
    return out;
}

/// gcd(k, n(m)) == 1 for the subfield degree k the proof relies on.
inline bool constraint_gcd_check(const FamilySpec& f, std::int64_t m) {
    if (!f.subfield_degree) {
        throw Error(Errc::NotApplicable, "family " + std::to_string(f.id) + " has no subfield-degree argument");
    }
    return std::gcd(static_cast<std::int64_t>(*f.subfield_degree), f.n_of(m)) == 1;
}

inline bool constraint_gcd_check(int id, std::int64_t m) { return constraint_gcd_check(family(id), m); }

// ---------------------------------------------------------------------------
// JSON form of the table (data/families.json)

inline nlohmann::ordered_json family_to_json(const FamilySpec& f) {
    nlohmann::ordered_json j;
    j["id"] = f.id;
    j["d"] = f.d_formula;
    j["n"] = f.n_formula;
    j["exclude"] = nlohmann::ordered_json::array();
    for (const auto& e : f.exclusions) j["exclude"].push_back({{"modulus", e.modulus}, {"residue", e.residue}});
    j["theorem"] = f.theorem;
    j["printed"] = f.printed;
    if (f.subfield_degree) j["subfield_degree"] = *f.subfield_degree;
    j["examples"] = nlohmann::ordered_json::array();
    for (const auto& [d, n] : f.examples) j["examples"].push_back({d, n});
    return j;
}

inline FamilySpec family_from_json(const nlohmann::json& j) {
    try {
        FamilySpec f;
        f.id = j.at("id").get<int>();
        f.d_formula = j.at("d").get<std::string>();
        f.n_formula = j.at("n").get<std::string>();
        for (const auto& e : j.value("exclude", nlohmann::json::array())) {
            f.exclusions.push_back({e.at("modulus").get<std::int64_t>(), e.at("residue").get<std::int64_t>()});
        }
        f.theorem = j.at("theorem").get<std::string>();
        f.printed = j.value("printed", false);
        if (j.contains("subfield_degree")) f.subfield_degree = j.at("subfield_degree").get<unsigned>();
        for (const auto& ex : j.value("examples", nlohmann::json::array())) {
            f.examples.emplace_back(ex.at(0).get<std::uint64_t>(), ex.at(1).get<unsigned>());
        }
        Expr::parse(f.d_formula);
        Expr::parse(f.n_formula);
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::SyntaxError, std::string("family record: ") + e.what());
    }
}

inline std::vector<FamilySpec> load_families(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::SyntaxError, path + ": " + e.what());
    }
    std::vector<FamilySpec> out;
    for (const auto& rec : j.at("families")) out.push_back(family_from_json(rec));
    return out;
}

}  // namespace zapn
