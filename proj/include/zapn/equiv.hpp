/**************************************************************************
 * equiv.hpp
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

// CCZ-equivalence of power maps through cyclotomic cosets, and a catalog of
// exponent families to classify against.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zapn/error.hpp"
#include "zapn/expr.hpp"
#include "zapn/families.hpp"

namespace zapn {

namespace detail {

inline std::uint64_t mersenne(unsigned n) {
    if (n < 1 || n > 62) throw Error(Errc::ExponentOutOfRange, "n = " + std::to_string(n) + " outside [1, 62]");
    return (std::uint64_t{1} << n) - 1;
}

inline void check_exponent(std::uint64_t d, unsigned n) {
    const std::uint64_t M = mersenne(n);
    if (d < 1 || d + 1 > M) {
        throw Error(Errc::ExponentOutOfRange,
                    "exponent " + std::to_string(d) + " outside [1, 2^" + std::to_string(n) + "-2]");
    }
}

}  // namespace detail

/// Orbit of d under doubling mod 2^n - 1.
struct Coset {
    unsigned n = 0;
    std::vector<std::uint64_t> members;  // ascending

    std::uint64_t leader() const { return members.front(); }
    bool contains(std::uint64_t e) const { return std::binary_search(members.begin(), members.end(), e); }
    friend bool operator==(const Coset&, const Coset&) = default;
};

inline Coset cyclotomic_coset(std::uint64_t d, unsigned n) {
    detail::check_exponent(d, n);
    const std::uint64_t M = detail::mersenne(n);
    Coset c{n, {}};
    std::uint64_t e = d;
    for (unsigned i = 0; i < n; ++i) {
        c.members.push_back(e);
        e = (2 * e) % M;
    }
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    return c;
}

/// d^{-1} mod 2^n - 1 when gcd(d, 2^n - 1) = 1.
inline std::optional<std::uint64_t> inverse_exponent(std::uint64_t d, unsigned n) {
    const std::int64_t M = static_cast<std::int64_t>(detail::mersenne(n));
    std::int64_t r0 = M, r1 = static_cast<std::int64_t>(d % static_cast<std::uint64_t>(M));
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) return std::nullopt;
    return static_cast<std::uint64_t>(((s0 % M) + M) % M);
}

/// x^d and x^e are CCZ-equivalent iff e is in the coset of d, or d is
/// invertible mod 2^n - 1 and e is in the coset of d^{-1}.
inline bool ccz_equivalent_power(std::uint64_t d, std::uint64_t e, unsigned n) {
    detail::check_exponent(d, n);
    detail::check_exponent(e, n);
    if (cyclotomic_coset(d, n).contains(e)) return true;
    if (auto inv = inverse_exponent(d, n)) return cyclotomic_coset(*inv, n).contains(e);
    return false;
}

enum class FamilyKind { ApnClassical, PaperFamily, Prior0Apn };

inline std::string_view kind_name(FamilyKind k) noexcept {
    switch (k) {
        case FamilyKind::ApnClassical: return "APN-classical";
        case FamilyKind::PaperFamily: return "paper-family";
        case FamilyKind::Prior0Apn: return "prior-0APN";
    }
    return "?";
}

inline FamilyKind parse_kind(std::string_view s) {
    if (s == "APN-classical") return FamilyKind::ApnClassical;
    if (s == "paper-family") return FamilyKind::PaperFamily;
    if (s == "prior-0APN") return FamilyKind::Prior0Apn;
    throw Error(Errc::SyntaxError, "unknown family kind '" + std::string(s) + "'");
}

/// A named exponent rule; free parameters (m, i) range over 1..n.
struct CatalogEntry {
    std::string name;
    FamilyKind kind = FamilyKind::ApnClassical;
    std::string expr_text;
    std::string constraint_text;

    CatalogEntry(std::string entry_name, FamilyKind entry_kind, std::string expr, std::string constraints)
        : name(std::move(entry_name)), kind(entry_kind), expr_text(std::move(expr)), constraint_text(std::move(constraints)),
          expr_(Expr::parse(expr_text)), clauses_(parse_constraints(constraint_text)) {
        for (char c : expr_.variables()) params_.insert(c);
        for (const auto& cl : clauses_) {
            for (char c : cl.lhs.variables()) params_.insert(c);
            for (char c : cl.rhs.variables()) params_.insert(c);
        }
        params_.erase('n');
    }

    /// Distinct exponents in [1, 2^n - 2] this rule yields at n, ascending.
    std::vector<std::uint64_t> exponents(unsigned n) const {
        const std::uint64_t M = detail::mersenne(n);
        std::vector<char> free(params_.begin(), params_.end());
        std::set<std::uint64_t> out;
        Bindings b{{'n', static_cast<std::int64_t>(n)}};
        std::vector<std::int64_t> val(free.size(), 1);
        for (;;) {
            for (std::size_t k = 0; k < free.size(); ++k) b[free[k]] = val[k];
            try {
                bool ok = true;
                for (const auto& cl : clauses_) {
                    if (!cl.holds(b)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    const std::uint64_t d = expr_.eval_mod(b, M);
                    if (d != 0) out.insert(d);
                }
            } catch (const Error& e) {
                if (e.code() != Errc::NotApplicable) throw;
            }
            std::size_t k = 0;
            while (k < free.size() && val[k] == static_cast<std::int64_t>(n)) val[k++] = 1;
            if (k == free.size()) break;
            ++val[k];
        }
        return {out.begin(), out.end()};
    }

private:
    Expr expr_;
    std::vector<Clause> clauses_;
    std::set<char> params_;
};

class Catalog {
public:
    /// The six classical APN families and the fourteen table families.
    static Catalog builtin() {
        Catalog c;
        const auto A = FamilyKind::ApnClassical;
        c.add({"Gold", A, "2^i+1", "i>=1, i<n, gcd(i,n)=1"});
        c.add({"Kasami", A, "2^(2*i)-2^i+1", "i>=2, i<n, gcd(i,n)=1"});
        c.add({"Welch", A, "2^m+3", "n=2*m+1"});
        c.add({"Niho-even", A, "2^m+2^(m/2)-1", "n=2*m+1, m mod 2 = 0"});
        c.add({"Niho-odd", A, "2^m+2^((3*m+1)/2)-1", "n=2*m+1, m mod 2 = 1"});
        c.add({"Inverse", A, "2^n-2", ""});
        c.add({"Dobbertin", A, "2^(4*i)+2^(3*i)+2^(2*i)+2^i-1", "n=5*i"});
        for (const auto& f : builtin_families()) {
            c.add({"paper#" + std::to_string(f.id), FamilyKind::PaperFamily, f.d_formula, f.constraint_text()});
        }
        return c;
    }

    void add(CatalogEntry e) { entries_.push_back(std::move(e)); }

    /// Records `name | kind | expression | constraints`; '#' starts a comment.
    void load(std::istream& in) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::vector<std::string> f;
            std::stringstream ss(line);
            std::string part;
            while (std::getline(ss, part, '|')) {
                const auto b = part.find_first_not_of(" \t\r"), e = part.find_last_not_of(" \t\r");
                f.push_back(b == std::string::npos ? "" : part.substr(b, e - b + 1));
            }
            if (f.size() < 3 || f.size() > 4) {
                throw Error(Errc::SyntaxError, "catalog line " + std::to_string(lineno) + ": expected 3 or 4 fields");
            }
            add({f[0], parse_kind(f[1]), f[2], f.size() == 4 ? f[3] : ""});
        }
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(Errc::Io, "cannot open catalog '" + path + "'");
        load(in);
    }

    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

    /// Names of entries with an exponent at n CCZ-equivalent to d.
    std::vector<std::string> classify(std::uint64_t d, unsigned n) const {
        detail::check_exponent(d, n);
        std::vector<std::string> out;
        for (const auto& e : entries_) {
            for (std::uint64_t x : e.exponents(n)) {
                if (x + 1 < (std::uint64_t{1} << n) && ccz_equivalent_power(d, x, n)) {
                    out.push_back(e.name);
                    break;
                }
            }
        }
        return out;
    }

private:
    std::vector<CatalogEntry> entries_;
};

struct LabeledExponent {
    std::string label;
    std::uint64_t d = 0;
};

struct InequivalenceMatrix {
    unsigned n = 0;
    std::vector<LabeledExponent> entries;
    std::vector<std::vector<bool>> equivalent;
};

inline InequivalenceMatrix pairwise_inequivalence_report(const std::vector<LabeledExponent>& entries, unsigned n) {
    InequivalenceMatrix m{n, entries, {}};
    m.equivalent.assign(entries.size(), std::vector<bool>(entries.size(), false));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = 0; j < entries.size(); ++j) {
            m.equivalent[i][j] = ccz_equivalent_power(entries[i].d, entries[j].d, n);
        }
    }
    return m;
}

/// One labeled exponent per coset leader for every entry instantiable at n.
inline std::vector<LabeledExponent> catalog_instances(const Catalog& c, unsigned n,
                                                      std::optional<FamilyKind> only = std::nullopt) {
    std::vector<LabeledExponent> out;
    for (const auto& e : c.entries()) {
        if (only && e.kind != *only) continue;
        std::set<std::uint64_t> leaders;
        for (std::uint64_t d : e.exponents(n)) {
            if (d + 1 >= (std::uint64_t{1} << n)) continue;
            if (leaders.insert(cyclotomic_coset(d, n).leader()).second) out.push_back({e.name, d});
        }
    }
    return out;
}

}  // namespace zapn
