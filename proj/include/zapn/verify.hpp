/**************************************************************************
 * verify.hpp
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

// Family checks and replayable elimination certificates.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zapn/diffprops.hpp"
#include "zapn/error.hpp"
#include "zapn/families.hpp"
#include "zapn/gf2n.hpp"
#include "zapn/gf2poly.hpp"
#include "zapn/mpoly.hpp"

namespace zapn {

inline std::string default_data_dir() {
    if (const char* env = std::getenv("ZAPN_DATA_DIR"); env && *env) return env;
#ifdef ZAPN_DATA_DIR
    return ZAPN_DATA_DIR;
#else
    return "data";
#endif
}

// ---------------------------------------------------------------------------
// Theorem tags

struct TheoremInfo {
    std::string tag;
    int family_id = 0;
    bool printed = false;
};

inline const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> kTheorems = {
        {"3.1", 1, true},         {"3.1-case2", 2, false},  {"3.2", 4, true},
        {"3.2-case2", 3, false},  {"3.3", 5, true},         {"3.4-case1", 6, true},
        {"3.4-case2", 7, true},   {"4m-1-case1", 9, true},  {"4m-1-case2", 8, true},
        {"4m-1-case3", 10, false}, {"4m-1-case4", 11, false}, {"3.5", 12, true},
        {"3.6", 13, true},        {"3.6-case2", 14, false},
    };
    return kTheorems;
}

inline std::string canonical_tag(std::string tag) {
    static const std::map<std::string, std::string> kAliases = {
        {"3.1-case1", "3.1"},         {"3.2-case1", "3.2"},         {"3.6-case1", "3.6"},
        {"3.4-case3", "4m-1-case3"},  {"3.4-case4", "4m-1-case4"},  {"2m+1", "3.1"},
        {"3m-1", "3.2"},              {"3m", "3.3"},                {"4m+1", "3.5"},
        {"5m", "3.6"},
    };
    if (auto it = kAliases.find(tag); it != kAliases.end()) return it->second;
    return tag;
}

/// Looks up a tag; unprinted cases raise TranscriptionMissing.
inline const TheoremInfo& theorem_info(const std::string& tag, bool require_printed = true) {
    const std::string t = canonical_tag(tag);
    for (const auto& th : theorem_registry()) {
        if (th.tag != t) continue;
        if (require_printed && !th.printed) {
            throw Error(Errc::TranscriptionMissing, "transcription not in paper for '" + tag + "'");
        }
        return th;
    }
    throw Error(Errc::UnknownTheorem, "unknown theorem '" + tag + "'");
}

inline std::vector<std::string> printed_theorems() {
    std::vector<std::string> out;
    for (const auto& th : theorem_registry()) {
        if (th.printed) out.push_back(th.tag);
    }
    return out;
}

/// One polynomial per line; '#' comments and blank lines are skipped.
inline std::vector<MPoly> load_system(const std::string& tag, const std::string& data_dir = default_data_dir()) {
    const auto& th = theorem_info(tag);
    const std::string path = data_dir + "/systems/" + th.tag + ".txt";
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open system file '" + path + "'");
    std::vector<MPoly> sys;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        sys.push_back(mp_parse(line));
    }
    return sys;
}

inline bool subfield_membership_check(unsigned n, unsigned k) { return std::gcd(n, k) == 1; }

// ---------------------------------------------------------------------------
// Exhaustive family checks

struct FamilyReport {
    FamilyInstance inst;
    std::string modulus_hex;
    bool zero_apn = false;
    std::uint32_t uniformity = 0;
    std::vector<Felt> witnesses;
    bool is_example = false;
};

inline FamilyReport verify_family_exhaustive(int id, std::int64_t m, bool force = false, unsigned threads = 0) {
    const FamilySpec& f = family(id);
    FamilyReport r;
    r.inst = family_instantiate(f, m);
    if (r.inst.n > kScanCeiling && !force) {
        throw Error(Errc::FieldTooLarge, "n = " + std::to_string(r.inst.n) + " exceeds the scan ceiling");
    }
    const PowerMap pm(Field(r.inst.n), r.inst.d);
    const ScanOptions opt{threads, force};
    const auto z = is_zero_apn(pm, opt);
    r.modulus_hex = pm.field().modulus_hex();
    r.zero_apn = z.zero_apn;
    r.witnesses = z.witnesses;
    r.uniformity = differential_uniformity(pm, opt);
    for (const auto& [d, n] : f.examples) {
        if (d == r.inst.d && n == r.inst.n) r.is_example = true;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Conjugate-system fidelity

struct ConjugateReport {
    std::string tag;
    FamilyInstance inst;
    std::uint64_t checked = 0;
    std::uint64_t scalar_roots = 0;
    std::vector<std::string> mismatches;  // "c=0x..: eq k"

    bool ok() const { return mismatches.empty(); }
};

/// For every c in GF(2^n): (c+1)^d + c^d + 1 = 0 iff each equation vanishes at
/// (c, c^(2^m), c^(2^(2m)), c^(2^(3m)), c^(2^(4m))). The substitution is an
/// identity for every m >= 2, so exclusions are only enforced on request.
inline ConjugateReport conjugate_system_report(const std::string& tag, std::int64_t m,
                                               const std::string& data_dir = default_data_dir(),
                                               bool enforce_constraints = true) {
    const auto& th = theorem_info(tag);
    ConjugateReport rep;
    rep.tag = th.tag;
    if (enforce_constraints) {
        rep.inst = family_instantiate(th.family_id, m);
    } else {
        FamilySpec f = family(th.family_id);
        f.exclusions.clear();
        rep.inst = family_instantiate(f, m);
    }
    if (rep.inst.n > 16) throw Error(Errc::FieldTooLarge, "conjugate check limited to n <= 16");
    const auto sys = load_system(th.tag, data_dir);
    const Field F(rep.inst.n);
    const PowerMap pm(F, rep.inst.d);
    for (std::uint64_t c = 0; c < F.size(); ++c) {
        const Felt x{static_cast<std::uint32_t>(c)};
        const bool root = F.add(F.add(pm(F.add(x, F.one())), pm(x)), F.one()).is_zero();
        rep.scalar_roots += root;
        Assignment at;
        Felt cur = x;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            at[static_cast<Var>(i)] = cur;
            cur = F.frobenius(cur, static_cast<unsigned>(m % rep.inst.n));
        }
        for (std::size_t k = 0; k < sys.size(); ++k) {
            const bool vanishes = mp_eval(sys[k], F, at).is_zero();
            if (vanishes != root && rep.mismatches.size() < 16) {
                rep.mismatches.push_back("c=0x" + to_hex(BitPoly::from_word(c)) + ": eq " + std::to_string(k + 1));
            }
        }
        ++rep.checked;
    }
    return rep;
}

inline bool verify_conjugate_system(const std::string& tag, std::int64_t m,
                                    const std::string& data_dir = default_data_dir()) {
    return conjugate_system_report(tag, m, data_dir).ok();
}

/// Smallest valid m >= 2 for the family behind a printed tag.
inline std::int64_t smallest_valid_m(const std::string& tag) {
    const auto& f = family(theorem_info(tag).family_id);
    for (std::int64_t m = 2;; ++m) {
        if (!violated_exclusion(f, m)) return m;
    }
}

// ---------------------------------------------------------------------------
// Certificates

struct CertStep {
    std::string kind;
    std::string name;
    std::vector<std::string> inputs;
    std::string var;
    std::string result;
    std::string expected;
    std::string status;  // pass, fail, erratum, complete, gap
    std::string detail;
};

struct Certificate {
    std::string theorem;
    int family_id = 0;
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::string> system;
    std::vector<CertStep> steps;
    std::string final_result;
    std::string final_factorization;

    bool passed() const {
        if (steps.empty()) return false;
        for (const auto& s : steps) {
            if (s.status == "fail") return false;
        }
        return true;
    }
    std::string verdict() const { return passed() ? "pass" : "fail"; }

    std::size_t errata() const {
        std::size_t k = 0;
        for (const auto& s : steps) k += s.status == "erratum";
        return k;
    }
};

inline nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["theorem"] = c.theorem;
    j["family"] = c.family_id;
    j["seed"] = c.seed;
    j["system"] = c.system;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : c.steps) {
        nlohmann::ordered_json js;
        js["kind"] = s.kind;
        js["name"] = s.name;
        js["inputs"] = s.inputs;
        if (!s.var.empty()) js["var"] = s.var;
        if (!s.result.empty()) js["result"] = s.result;
        if (!s.expected.empty()) js["expected"] = s.expected;
        js["status"] = s.status;
        if (!s.detail.empty()) js["detail"] = s.detail;
        j["steps"].push_back(std::move(js));
    }
    j["final"] = c.final_result;
    j["final_factorization"] = c.final_factorization;
    j["errata"] = c.errata();
    j["verdict"] = c.verdict();
    return j;
}

/// A printed factor with its multiplicity.
struct PrintedFactor {
    std::string poly;
    unsigned mult = 1;
};

struct FrobeniusCase {
    std::string label;  // the congruence on m that forces the substitution
    unsigned k;         // x lies in GF(2^k)
    std::uint64_t wy, wz, wu, wv;  // y = x^wy, ...
    std::string expected;
    std::set<int> degree_set;  // when nonempty, checked instead of the root gcd
};

namespace detail {

inline std::string factors_text(const std::vector<PrintedFactor>& fs) {
    std::string s;
    for (const auto& f : fs) {
        if (!s.empty()) s += '*';
        s += "(" + f.poly + ")";
        if (f.mult > 1) s += "^" + std::to_string(f.mult);
    }
    return s;
}

inline std::string degree_set_text(const std::set<int>& ds) {
    std::string s = "{";
    for (int d : ds) s += (s.size() > 1 ? "," : "") + std::to_string(d);
    return s + "}";
}

class CertRunner {
public:
    CertRunner(Certificate& cert, const std::vector<MPoly>& sys, ResultantOptions opt)
        : cert_(cert), opt_(opt) {
        for (std::size_t i = 0; i < sys.size(); ++i) {
            vals_["E" + std::to_string(i + 1)] = sys[i];
            cert_.system.push_back(mp_print(sys[i]));
        }
    }

    const MPoly& get(const std::string& name) const {
        auto it = vals_.find(name);
        if (it == vals_.end()) throw Error(Errc::NotApplicable, "certificate refers to unknown value " + name);
        return it->second;
    }

    void resultant(const std::string& out, const std::string& a, const std::string& b, Var v) {
        MPoly r = zapn::resultant(get(a), get(b), v, opt_);
        CertStep s{"resultant", out, {a, b}, std::string(1, var_name(v)), mp_print(r), "", "", ""};
        s.status = r.degree(v) <= 0 ? "pass" : "fail";
        s.detail = std::to_string(r.size()) + " terms";
        cert_.steps.push_back(std::move(s));
        set(out, std::move(r));
    }

    void divide(const std::string& out, const std::string& a, const std::vector<std::string>& divisors) {
        MPoly q = get(a);
        bool ok = true;
        std::string dtext;
        for (const auto& d : divisors) {
            if (!dtext.empty()) dtext += '*';
            dtext += "(" + d + ")";
            auto r = divide_exact(q, mp_parse(d));
            if (!r) {
                ok = false;
                break;
            }
            q = std::move(*r);
        }
        CertStep s{"divide", out, {a}, "", ok ? mp_print(q) : "", dtext, ok ? "pass" : "fail", ok ? "" : "nonzero remainder"};
        cert_.steps.push_back(std::move(s));
        set(out, std::move(q));
    }

    /// Divides by each printed factor in turn; passes iff every division is
    /// exact and the final quotient is 1. When the printed list fails and a
    /// corrected list is given, the step is recorded as an erratum if the
    /// corrected list passes.
    void expect_product(const std::string& name, const std::vector<PrintedFactor>& printed,
                        const std::vector<PrintedFactor>& corrected = {}, const std::string& note = "") {
        std::string detail = check_product(get(name), printed);
        CertStep s{"expect_product", name, {name}, "", "", factors_text(printed), detail.empty() ? "pass" : "fail", detail};
        if (!detail.empty() && !corrected.empty()) {
            const std::string d2 = check_product(get(name), corrected);
            if (d2.empty()) {
                s.status = "erratum";
                s.result = factors_text(corrected);
                s.detail = note + "; printed form: " + detail;
            }
        }
        cert_.steps.push_back(std::move(s));
    }

    Factorization factor(const std::string& name) {
        auto it = facts_.find(name);
        if (it != facts_.end()) return it->second;
        const BitPoly p = get(name).to_bitpoly(Var::x);
        Factorization f = factorize(p, cert_.seed);
        facts_[name] = f;
        return f;
    }

    void expect_factorization(const std::string& name, const std::vector<PrintedFactor>& factors) {
        const Factorization got = factor(name);
        Factorization want;
        for (const auto& f : factors) want.factors.push_back({parse_bitpoly(f.poly), f.mult});
        std::sort(want.factors.begin(), want.factors.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
        const bool ok = got == want;
        cert_.steps.push_back({"expect_factorization", name, {name}, "", to_string(got), to_string(want),
                               ok ? "pass" : "fail", ""});
    }

    void expect_degree_set(const std::string& name, const std::set<int>& want) {
        const Factorization got = factor(name);
        const auto ds = degree_set(got, true);
        const bool ok = ds == want;
        cert_.steps.push_back({"expect_degree_set", name, {name}, "", degree_set_text(ds), degree_set_text(want),
                               ok ? "pass" : "fail", std::to_string(got.factors.size()) + " distinct irreducible factors"});
    }

    /// Substitutes x-powers for the conjugates in an equation, reduces
    /// modulo x^(2^k) + x and compares with the printed polynomial. Then
    /// either checks that its only roots in GF(2^k) are 0 and 1, or checks
    /// the degree set of its factors.
    void frobenius_case(const std::string& eq, const FrobeniusCase& fc) {
        const BitPoly sub = get(eq).substitute_powers({1, fc.wy, fc.wz, fc.wu, fc.wv});
        const BitPoly field_poly = BitPoly::monomial(std::size_t{1} << fc.k) + BitPoly::x();
        const BitPoly red = sub % field_poly;
        const BitPoly want = parse_bitpoly(fc.expected);
        bool ok = red == want;
        std::string detail = "k=" + std::to_string(fc.k);
        if (ok && fc.degree_set.empty()) {
            const BitPoly g = gcd(red, field_poly);
            ok = (BitPoly::from_word(0b110) % g).is_zero();
            detail += ", gcd with x^(2^k)+x = " + to_string(g);
        } else if (ok) {
            const auto ds = degree_set(factorize(red, cert_.seed), true);
            ok = ds == fc.degree_set;
            detail += ", degree set " + degree_set_text(ds);
        }
        cert_.steps.push_back({"frobenius_case", fc.label, {eq}, "", to_string(red), fc.expected, ok ? "pass" : "fail", detail});
    }

    /// Informational: does gcd(k, n(m)) = 1 hold for every valid m <= 10000?
    void subfield_note(int family_id, unsigned k, const std::string& handled_by = "") {
        const auto& f = family(family_id);
        std::optional<std::int64_t> first_bad;
        for (std::int64_t m = 2; m <= 10000; ++m) {
            if (violated_exclusion(f, m)) continue;
            if (std::gcd(static_cast<std::int64_t>(k), f.n_of(m)) != 1) {
                first_bad = m;
                break;
            }
        }
        CertStep s{"subfield_note", "GF(2^" + std::to_string(k) + ")", {}, "", "", "", "", ""};
        if (!first_bad) {
            s.status = "complete";
            s.detail = "gcd(" + std::to_string(k) + ", n) = 1 for every valid m <= 10000";
        } else if (!handled_by.empty()) {
            s.status = "complete";
            s.detail = "gcd > 1 first at m = " + std::to_string(*first_bad) + "; " + handled_by;
        } else {
            s.status = "gap";
            s.detail = "gcd(" + std::to_string(k) + ", n) > 1 at valid m = " + std::to_string(*first_bad) +
                       " (n = " + std::to_string(f.n_of(*first_bad)) + ")";
        }
        cert_.steps.push_back(std::move(s));
    }

    void finish(const std::string& name) {
        cert_.final_result = mp_print(get(name));
        if (facts_.count(name)) cert_.final_factorization = to_string(facts_[name]);
    }

    /// Removes every power of a factor the proof has shown to be nonzero.
    void divide_out(const std::string& out, const std::string& a, const std::string& factor) {
        MPoly q = get(a);
        const MPoly f = mp_parse(factor);
        unsigned k = 0;
        while (auto r = divide_exact(q, f)) {
            q = std::move(*r);
            ++k;
        }
        CertStep s{"divide_out", out, {a}, "", mp_print(q), "(" + factor + ")^k", k > 0 ? "pass" : "fail",
                   "k = " + std::to_string(k)};
        cert_.steps.push_back(std::move(s));
        set(out, std::move(q));
    }

private:
    void set(const std::string& name, MPoly p) { vals_[name] = std::move(p); }

    static std::string check_product(MPoly q, const std::vector<PrintedFactor>& factors) {
        for (const auto& f : factors) {
            const MPoly fp = mp_parse(f.poly);
            for (unsigned k = 0; k < f.mult; ++k) {
                auto r = divide_exact(q, fp);
                if (!r) return "(" + f.poly + ")^" + std::to_string(k + 1) + " does not divide";
                q = std::move(*r);
            }
        }
        if (!q.is_one()) return "cofactor " + mp_print(q) + " left over";
        return "";
    }

    Certificate& cert_;
    ResultantOptions opt_;
    std::map<std::string, MPoly> vals_;
    std::map<std::string, Factorization> facts_;
};

}  // namespace detail

/// Replays the printed elimination chain of a theorem.
inline Certificate verify_theorem_symbolic(const std::string& tag, const ResultantOptions& opt = {},
                                           const std::string& data_dir = default_data_dir(),
                                           std::uint64_t seed = kDefaultSeed) {
    const auto& th = theorem_info(tag);
    Certificate cert;
    cert.theorem = th.tag;
    cert.family_id = th.family_id;
    cert.seed = seed;
    detail::CertRunner r(cert, load_system(th.tag, data_dir), opt);
    const std::string& t = th.tag;

    if (t == "3.1") {
        r.resultant("R", "E1", "E2", Var::y);
        r.expect_factorization("R", {{"x"}, {"x+1"}, {"x^2+x+1", 4}});
        r.subfield_note(th.family_id, 2);
        r.finish("R");
    } else if (t == "3.2") {
        r.resultant("R(x,y)", "E2", "E3", Var::z);
        r.expect_product("R(x,y)", {{"x^25+x^24y^2+x^17y^2+x^17+x^16+x^9y^2+x^8y^2+x^8+x+y^2", 2}});
        r.resultant("R", "E1", "R(x,y)", Var::y);
        r.expect_degree_set("R", {7});
        r.subfield_note(th.family_id, 7);
        r.finish("R");
    } else if (t == "3.3") {
        const std::string P =
            "x^20y^6+x^20y^5+x^20y^3+x^20y+x^20+x^18y^8+x^18y^2+x^16y^12+x^16y^10+x^16y^9+x^16y^8+x^16y^7+x^16y^4"
            "+x^16y^3+x^14y^8+x^14y^4+x^12y^9+x^12y^8+x^12y^5+x^12y^4+x^10y^10+x^10y^6+x^8y^12+x^8y^11+x^8y^8"
            "+x^8y^7+x^6y^12+x^6y^8+x^4y^13+x^4y^12+x^4y^9+x^4y^8+x^4y^7+x^4y^6+x^4y^4+x^2y^14+x^2y^8+y^16+y^15"
            "+y^13+y^11+y^10";
        const std::string Q =
            "x^10y^2+x^10y+x^10+x^8y^3+x^8y^2+x^8y+x^8+x^6y^6+x^6y^5+x^6y^4+x^6y^3+x^6y^2+x^6y+x^6+x^4y^10+x^4y^9"
            "+x^4y^8+x^4y^7+x^4y^6+x^4y^5+x^4y^4+x^2y^10+x^2y^9+x^2y^8+x^2y^7+y^10+y^9+y^8";
        r.resultant("Res1(x,y)", "E1", "E2", Var::z);
        r.expect_product("Res1(x,y)", {{"y", 8}, {"y+1", 8}, {"x^2+y", 4}, {P}});
        r.resultant("Res2(x,y)", "E1", "E3", Var::z);
        r.expect_product("Res2(x,y)", {{"x+y", 8}, {Q, 2}});
        r.resultant("R", "Res1(x,y)", "Res2(x,y)", Var::y);
        r.expect_factorization("R", {{"x", 480},
                                     {"x+1", 480},
                                     {"x^2+x+1", 64},
                                     {"x^3+x^2+1", 48},
                                     {"x^3+x+1", 48},
                                     {"x^12+x^11+x^8+x^6+x^4+x^3+x^2+x+1", 4},
                                     {"x^12+x^11+x^10+x^9+x^8+x^6+x^4+x+1", 4}});
        const std::uint64_t k16 = 16, k256 = 256;
        r.frobenius_case("E1", {"GF(4), m even", 2, 1, 1, 0, 0, "x^2+x", {}});
        r.frobenius_case("E1", {"GF(8), m = 1 mod 3", 3, 2, 4, 0, 0, "x^6+x^5+x^4+x^3", {}});
        r.frobenius_case("E1", {"GF(8), m = 0 mod 3", 3, 1, 1, 0, 0, "x^4+x", {}});
        r.frobenius_case("E1", {"GF(64), m = 2 mod 4, m = 1 mod 3", 6, k16, 4, 0, 0, "x^34+x^33+x^18+x^17", {}});
        r.frobenius_case("E1", {"GF(64), m = 2 mod 4, m = 0 mod 3", 6, 1, 1, 0, 0, "x^8+x^4", {}});
        r.frobenius_case("E1", {"GF(2^12), m = 0 mod 4, m = 1 mod 3", 12, k16, k256, 0, 0,
                                "x^1072+x^1058+x^1042+x^1026+x^96+x^80+x^64+x^50", {8, 54, 150}});
        r.frobenius_case("E1", {"GF(16), m = 0 mod 4", 4, 1, 1, 0, 0, "x^8+x^4", {}});
        r.frobenius_case("E1", {"GF(2^12), m = 0 mod 12", 12, 1, 1, 0, 0, "x^8+x^4", {}});
        r.subfield_note(th.family_id, 2, "handled by the GF(4) case");
        r.subfield_note(th.family_id, 3, "handled by the GF(8) cases");
        r.subfield_note(th.family_id, 12, "handled by the GF(2^12) cases");
        r.finish("R");
    } else if (t == "3.4-case1") {
        r.resultant("R(x,y)", "E1", "E2", Var::z);
        r.expect_product("R(x,y)", {{"y"}, {"y+1"}, {"x^2+x+1", 2}, {"y^2+y+1"}});
        r.frobenius_case("E1", {"GF(4), m odd", 2, 2, 1, 0, 0, "x^2+x", {}});
        r.subfield_note(th.family_id, 2, "handled by the GF(4) case");
        r.finish("R(x,y)");
    } else if (t == "3.4-case2") {
        const std::string P =
            "x^12+x^10y^6+x^10y^5+x^10y^3+x^10y+x^8y^7+x^8y^5+x^8y^4+x^8y^3+x^8y^2+x^6y^12+x^6y^10+x^6y^5+x^6y^3"
            "+x^4y^13+x^4y^12+x^4y^11+x^4y^10+x^4y^8+x^2y^14+x^2y^12+x^2y^10+x^2y^9+y^15";
        const std::string Q =
            "x^9+x^8y^4+x^7y^4+x^7y^2+x^6y^6+x^6y^4+x^5y^8+x^5y^6+x^5y^4+x^5y^2+x^4y^10+x^4y^8+x^4y^6+x^4y^4"
            "+x^3y^8+x^3y^6+x^2y^10+x^2y^8+xy^8+y^12";
        r.resultant("Res1(x,y)", "E1", "E2", Var::z);
        r.expect_product("Res1(x,y)", {{"x+y", 2}, {P}});
        r.resultant("Res2(x,y)", "E1", "E3", Var::z);
        r.expect_product("Res2(x,y)", {{"x", 6}, {"x+1", 6}, {"x+y^2", 2}, {Q, 2}});
        r.resultant("R", "Res1(x,y)", "Res2(x,y)", Var::y);
        r.expect_factorization("R", {{"x", 346}, {"x+1", 346}});
        r.finish("R");
    } else if (t == "4m-1-case1") {
        r.resultant("Res1(x,z)", "E3", "E4", Var::u);
        r.expect_product("Res1(x,z)", {{"x^2+z"}, {"x^2+x+1", 8}});
        r.resultant("Res2(x,y)", "E2", "Res1(x,z)", Var::z);
        r.expect_product("Res2(x,y)", {{"x^2+y"}, {"x^2+x+1", 26}});
        r.resultant("R", "E1", "Res2(x,y)", Var::y);
        r.expect_factorization("R", {{"x"}, {"x+1"}, {"x^2+x+1", 80}});
        r.subfield_note(th.family_id, 2);
        r.finish("R");
    } else if (t == "4m-1-case2") {
        r.resultant("Res1(x,y,z)", "E2", "E3", Var::u);
        r.expect_product("Res1(x,y,z)", {{"y^2xz^2+y^2xz+y^2z^3+y^2z^2+y^2+xz^3+xz+x+z^2+z", 2}});
        r.resultant("Res2(x,y,z)", "E2", "E4", Var::u);
        r.expect_product("Res2(x,y,z)", {{"y^3x^2+y^3z^2+y^2x^2z^2+y^2z^2+y^2+yx^2z^2+yx^2+y+x^2+z^2", 2}});
        r.resultant("Res3(x,y)", "E1", "Res1(x,y,z)", Var::z);
        r.expect_product("Res3(x,y)", {{"y^8x^6+y^8x^5+y^8x^3+y^8x^2+y^8+x^7+x^5+x^4+x^2+x", 2}});
        r.resultant("Res4(x,y)", "E1", "Res2(x,y,z)", Var::z);
        r.expect_product("Res4(x,y)", {{"x^2+x+1", 4}, {"y^7+y^6x^2+y^5x^2+y^5+y^4+y^3x^2+y^2x^2+y^2+y+x^2", 2}});
        r.resultant("R", "Res3(x,y)", "Res4(x,y)", Var::y);
        r.expect_factorization("R", {{"x", 4},
                                     {"x+1", 4},
                                     {"x^2+x+1", 128},
                                     {"x^5+x^2+1", 4},
                                     {"x^5+x^3+1", 4},
                                     {"x^5+x^3+x^2+x+1", 4},
                                     {"x^5+x^4+x^2+x+1", 4},
                                     {"x^5+x^4+x^3+x+1", 4},
                                     {"x^5+x^4+x^3+x^2+1", 4}});
        r.frobenius_case("E1", {"GF(32), m = 4 mod 5", 5, 16, 8, 0, 0, "x^10+x^9+x^8+x^3+x^2+x", {}});
        r.subfield_note(th.family_id, 2);
        r.subfield_note(th.family_id, 5, "handled by the GF(32) case");
        r.finish("R");
    } else if (t == "3.5") {
        r.resultant("Res1(x,y,z)", "E2", "E3", Var::u);
        r.expect_product("Res1(x,y,z)", {{"x^8y^2z^8+x^8y^2z+x^8z^9+x^8z^8+x^8+y^2z^9+y^2z+y^2+z^8+z", 2}});
        r.resultant("Res2(x,y,z)", "E2", "E4", Var::u);
        r.expect_product("Res2(x,y,z)", {{"xy^6+xy^4z+xy^4+xy^2z+x+y^6z+y^4+y^2z+y^2+z", 4}});
        const std::string P =
            "x^50y^16+x^50y+x^50+x^48y^17+x^48y^16+x^48y+x^34y^17+x^34+x^32y^16+x^32y+x^18y^17+x^18y^16+x^18y"
            "+x^16y^17+x^16+x^2y^16+x^2y+x^2+y^17+y^16+y";
        const std::string Q = "x^2y^24+x^2y^17+x^2y^9+x^2y^8+x^2+y^25+y^17+y^16+y^8+y";
        r.resultant("Res1(x,y)", "E1", "Res1(x,y,z)", Var::z);
        r.expect_product("Res1(x,y)", {{P, 2}}, {{P + "+x^32", 2}}, "printed base lacks the term x^32");
        r.resultant("Res2(x,y)", "E1", "Res2(x,y,z)", Var::z);
        r.expect_product("Res2(x,y)", {{"x^2+x+1"}, {Q, 4}}, {{"x^2+x+1", 8}, {Q, 4}},
                         "x^2+x+1 occurs with multiplicity 8, not 1");
        r.divide_out("Res2(x,y)/(x^2+x+1)", "Res2(x,y)", "x^2+x+1");
        r.resultant("R", "Res1(x,y)", "Res2(x,y)/(x^2+x+1)", Var::y);
        r.expect_degree_set("R", {53});
        r.subfield_note(th.family_id, 2);
        r.subfield_note(th.family_id, 53);
        r.finish("R");
    } else if (t == "3.6") {
        r.resultant("Res1(y,z,u)", "E2", "E4", Var::v);
        r.expect_product("Res1(y,z,u)", {{"z+u"}, {"y^2+y+1"}});
        r.resultant("Res2(x,y,z)", "E2", "E5", Var::v);
        r.expect_product("Res2(x,y,z)", {{"z^2+z+1"}, {"y+x"}});
        r.resultant("Res3(x,y,z)", "E1", "Res1(y,z,u)", Var::u);
        r.expect_product("Res3(x,y,z)", {{"yx+yz+y+xz+x+z"}, {"y^2+y+1"}});
        r.resultant("Res4(x,y,z)", "E3", "Res1(y,z,u)", Var::u);
        r.expect_product("Res4(x,y,z)", {{"x+z^2"}, {"y^2+y+1"}});
        r.divide("Res3/(y^2+y+1)", "Res3(x,y,z)", {"y^2+y+1"});
        r.divide("Res4/(y^2+y+1)", "Res4(x,y,z)", {"y^2+y+1"});
        r.resultant("Res1(x,y)", "Res3/(y^2+y+1)", "Res4/(y^2+y+1)", Var::z);
        r.expect_product("Res1(x,y)", {{"x^2+x+1"}, {"y^2+x"}});
        r.resultant("Res2(x,y)", "Res3/(y^2+y+1)", "Res2(x,y,z)", Var::z);
        r.expect_product("Res2(x,y)", {{"x^2+x+1"}, {"y+x"}, {"y^2+y+1"}});
        r.divide("A", "Res1(x,y)", {"x^2+x+1"});
        r.divide("B", "Res2(x,y)", {"x^2+x+1", "y^2+y+1"});
        r.resultant("R", "A", "B", Var::y);
        r.expect_factorization("R", {{"x"}, {"x+1"}});
        r.frobenius_case("E1", {"GF(4), m even", 2, 1, 1, 1, 1, "x^2+x", {}});
        r.subfield_note(th.family_id, 2, "handled by the GF(4) case");
        r.finish("R");
    }
    return cert;
}

}  // namespace zapn
