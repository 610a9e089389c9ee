/**************************************************************************
 * zapn.cpp
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

// Command-line front end: exit 0 = property holds, 1 = fails, 2 = usage error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zapn/zapn.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kCacheVersion = "zapn-cache-1";

struct Globals {
    std::string modulus;
    std::string modulus_table;
    unsigned threads = 0;
    std::string cache_dir;
    std::uint64_t seed = zapn::kDefaultSeed;
    bool force = false;
    bool json = false;
    std::string output;
    std::string data_dir;
    std::string catalog;
};

std::string felt_hex(zapn::Felt f) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", f.bits);
    return buf;
}

zapn::Field make_field(const Globals& g, unsigned n) {
    if (!g.modulus.empty()) return zapn::Field(n, zapn::parse_hex_poly(g.modulus));
    if (!g.modulus_table.empty()) {
        const auto table = zapn::load_modulus_table(g.modulus_table);
        if (auto it = table.find(n); it != table.end()) return zapn::Field(n, it->second);
    }
    return zapn::Field(n);
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw zapn::Error(zapn::Errc::Io, "cannot write '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

/// Scan results keyed by version, n, modulus and d.
class ScanCache {
public:
    explicit ScanCache(std::string dir) : dir_(std::move(dir)) {}

    std::optional<json> get(unsigned n, const std::string& mod, std::uint64_t d) const {
        if (dir_.empty()) return std::nullopt;
        std::ifstream in(path(n, mod, d));
        if (!in) return std::nullopt;
        try {
            json j = json::parse(in);
            if (j.value("version", "") != kCacheVersion) return std::nullopt;
            return j;
        } catch (const json::exception&) {
            return std::nullopt;
        }
    }

    void put(unsigned n, const std::string& mod, std::uint64_t d, json j) const {
        if (dir_.empty()) return;
        std::error_code ec;
        fs::create_directories(fs::path(dir_) / kCacheVersion, ec);
        j["version"] = kCacheVersion;
        const auto p = path(n, mod, d);
        const auto tmp = p.string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << j.dump() << '\n';
        }
        fs::rename(tmp, p, ec);
    }

private:
    fs::path path(unsigned n, const std::string& mod, std::uint64_t d) const {
        return fs::path(dir_) / kCacheVersion / ("n" + std::to_string(n) + "_" + mod + "_d" + std::to_string(d) + ".json");
    }

    std::string dir_;
};

/// 0-APN verdict, uniformity and witnesses for x^d, from cache when present.
json scan_report(const Globals& g, const zapn::Field& F, std::uint64_t d) {
    const auto t0 = std::chrono::steady_clock::now();
    const ScanCache cache(g.cache_dir);
    const std::string mod = F.modulus_hex();
    json body;
    if (auto hit = cache.get(F.degree(), mod, d)) {
        body = std::move(*hit);
        body.erase("version");
    } else {
        const zapn::PowerMap pm(F, d);
        const zapn::ScanOptions opt{g.threads, g.force};
        const auto z = zapn::is_zero_apn(pm, opt);
        const auto u = zapn::differential_uniformity(pm, opt);
        body["zero_apn"] = z.zero_apn;
        body["uniformity"] = u;
        body["apn"] = u == 2;
        body["solutions"] = z.solutions;
        body["witnesses"] = json::array();
        for (auto w : z.witnesses) body["witnesses"].push_back(felt_hex(w));
        cache.put(F.degree(), mod, d, body);
    }
    json r;
    r["n"] = F.degree();
    r["d"] = d;
    r["modulus_hex"] = mod;
    r["seed"] = g.seed;
    for (auto& [k, v] : body.items()) r[k] = v;
    r["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

int cmd_check(const Globals& g, unsigned n, std::uint64_t d) {
    const auto F = make_field(g, n);
    const json r = scan_report(g, F, d);
    Sink sink(g.output);
    if (g.json) {
        sink.out() << r.dump() << '\n';
    } else {
        sink.out() << "x^" << d << " over GF(2^" << n << ") mod " << r["modulus_hex"].get<std::string>() << ": "
                   << (r["zero_apn"].get<bool>() ? "0-APN" : "not 0-APN") << ", uniformity "
                   << r["uniformity"].get<unsigned>() << '\n';
        if (!r["witnesses"].empty()) {
            sink.out() << "witnesses:";
            for (const auto& w : r["witnesses"]) sink.out() << ' ' << w.get<std::string>();
            sink.out() << '\n';
        }
    }
    return r["zero_apn"].get<bool>() ? 0 : 1;
}

int cmd_spectrum(const Globals& g, unsigned n, std::uint64_t d) {
    const auto F = make_field(g, n);
    const zapn::PowerMap pm(F, d);
    const auto s = zapn::diff_spectrum(pm, {g.threads, g.force});
    json r;
    r["n"] = n;
    r["d"] = d;
    r["modulus_hex"] = F.modulus_hex();
    r["seed"] = g.seed;
    r["uniformity"] = s.max_delta();
    r["spectrum"] = json::object();
    for (const auto& [delta, cnt] : s.counts) r["spectrum"][std::to_string(delta)] = cnt;
    Sink sink(g.output);
    if (g.json) {
        sink.out() << r.dump() << '\n';
    } else {
        sink.out() << "differential spectrum of x^" << d << " over GF(2^" << n << "):\n";
        for (const auto& [delta, cnt] : s.counts) sink.out() << "  delta " << delta << ": " << cnt << '\n';
    }
    return 0;
}

int cmd_x0check(const Globals& g, unsigned n, std::uint64_t d, const std::string& x0_text) {
    if (n > 14 && !g.force) throw zapn::Error(zapn::Errc::FieldTooLarge, "x0check is quadratic; n > 14 needs --force");
    const auto F = make_field(g, n);
    const zapn::PowerMap pm(F, d);
    const zapn::Felt x0 = F.element(std::stoull(x0_text, nullptr, 0));
    const bool ok = zapn::is_x0_apn(pm, x0);
    json r{{"n", n}, {"d", d}, {"modulus_hex", F.modulus_hex()}, {"seed", g.seed}, {"x0", felt_hex(x0)}, {"x0_apn", ok}};
    Sink sink(g.output);
    if (g.json) {
        sink.out() << r.dump() << '\n';
    } else {
        sink.out() << "x^" << d << " over GF(2^" << n << ") is " << (ok ? "" : "not ") << felt_hex(x0) << "-APN\n";
    }
    return ok ? 0 : 1;
}

int cmd_table1(const Globals& g, std::optional<int> only, unsigned max_n, std::optional<std::int64_t> m_max) {
    std::vector<zapn::FamilySpec> fams;
    if (!g.data_dir.empty() && fs::exists(fs::path(g.data_dir) / "families.json")) {
        fams = zapn::load_families((fs::path(g.data_dir) / "families.json").string());
    } else {
        fams = zapn::builtin_families();
    }
    Sink sink(g.output);
    bool all = true;
    std::size_t count = 0;
    for (const auto& f : fams) {
        if (only && f.id != *only) continue;
        for (std::int64_t m : zapn::valid_m(f, max_n)) {
            if (m_max && m > *m_max) break;
            const auto inst = zapn::family_instantiate(f, m);
            const auto F = make_field(g, inst.n);
            json r;
            r["id"] = f.id;
            r["m"] = m;
            const json scan = scan_report(g, F, inst.d);
            for (const auto& [k, v] : scan.items()) r[k] = v;
            bool example = false;
            for (const auto& [d, n] : f.examples) example |= d == inst.d && n == inst.n;
            r["example"] = example;
            all &= r["zero_apn"].get<bool>();
            ++count;
            if (g.json) {
                sink.out() << r.dump() << '\n';
            } else {
                sink.out() << "#" << f.id << " m=" << m << " (d,n)=(" << inst.d << "," << inst.n << ") "
                           << (r["zero_apn"].get<bool>() ? "0-APN" : "NOT 0-APN") << " uniformity "
                           << r["uniformity"].get<unsigned>() << (example ? " [table example]" : "") << '\n';
            }
        }
    }
    if (!g.json) sink.out() << count << " instances, " << (all ? "all 0-APN" : "FAILURES present") << '\n';
    return all ? 0 : 1;
}

int cmd_certify(const Globals& g, const std::string& tag, const std::string& method) {
    zapn::ResultantOptions opt;
    opt.threads = zapn::detail::resolve_threads(g.threads);
    if (method == "interpolation") opt.method = zapn::ResultantMethod::Interpolation;
    else if (method == "bareiss") opt.method = zapn::ResultantMethod::Bareiss;
    const std::string dir = g.data_dir.empty() ? zapn::default_data_dir() : g.data_dir;
    const auto cert = zapn::verify_theorem_symbolic(tag, opt, dir, g.seed);
    Sink sink(g.output);
    sink.out() << zapn::to_json(cert).dump(2) << '\n';
    if (!g.output.empty() && g.output != "-") {
        std::cerr << cert.theorem << ": " << cert.verdict() << " (" << cert.steps.size() << " steps, "
                  << cert.errata() << " errata)\n";
    }
    return cert.passed() ? 0 : 1;
}

zapn::Catalog load_catalog(const Globals& g) {
    auto c = zapn::Catalog::builtin();
    if (!g.catalog.empty()) c.load_file(g.catalog);
    return c;
}

int cmd_classify(const Globals& g, unsigned n, std::uint64_t d) {
    const auto matches = load_catalog(g).classify(d, n);
    const auto coset = zapn::cyclotomic_coset(d, n);
    const auto inv = zapn::inverse_exponent(d, n);
    json r{{"n", n}, {"d", d}, {"seed", g.seed}, {"matches", matches}, {"coset", coset.members}, {"leader", coset.leader()}};
    r["inverse"] = inv ? json(*inv) : json(nullptr);
    Sink sink(g.output);
    if (g.json) {
        sink.out() << r.dump() << '\n';
    } else {
        sink.out() << "d = " << d << " at n = " << n << ": ";
        if (matches.empty()) sink.out() << "no catalog match";
        for (std::size_t i = 0; i < matches.size(); ++i) sink.out() << (i ? ", " : "") << matches[i];
        sink.out() << "\ncoset:";
        for (auto e : coset.members) sink.out() << ' ' << e;
        sink.out() << '\n';
    }
    return 0;
}

int cmd_coset(const Globals& g, unsigned n, std::uint64_t d) {
    const auto coset = zapn::cyclotomic_coset(d, n);
    const auto inv = zapn::inverse_exponent(d, n);
    json r{{"n", n}, {"d", d}, {"leader", coset.leader()}, {"members", coset.members}};
    r["inverse"] = inv ? json(*inv) : json(nullptr);
    if (inv) r["inverse_coset"] = zapn::cyclotomic_coset(*inv, n).members;
    Sink sink(g.output);
    if (g.json) {
        sink.out() << r.dump() << '\n';
    } else {
        sink.out() << "coset of " << d << " mod 2^" << n << "-1 (leader " << coset.leader() << "):";
        for (auto e : coset.members) sink.out() << ' ' << e;
        sink.out() << '\n';
        if (inv) sink.out() << "inverse exponent " << *inv << '\n';
    }
    return 0;
}

int cmd_inequiv(const Globals& g, unsigned n, const std::string& kind) {
    std::optional<zapn::FamilyKind> only;
    if (!kind.empty()) only = zapn::parse_kind(kind);
    const auto inst = zapn::catalog_instances(load_catalog(g), n, only);
    const auto m = zapn::pairwise_inequivalence_report(inst, n);
    Sink sink(g.output);
    if (g.json) {
        json r{{"n", n}, {"seed", g.seed}, {"entries", json::array()}, {"equivalent_pairs", json::array()}};
        for (const auto& e : inst) r["entries"].push_back({{"label", e.label}, {"d", e.d}});
        for (std::size_t i = 0; i < inst.size(); ++i) {
            for (std::size_t j = i + 1; j < inst.size(); ++j) {
                if (m.equivalent[i][j]) r["equivalent_pairs"].push_back({i, j});
            }
        }
        sink.out() << r.dump() << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
        sink.out() << i << ' ' << inst[i].label << " d=" << inst[i].d << "  ";
        for (std::size_t j = 0; j < inst.size(); ++j) sink.out() << (i == j ? '\\' : m.equivalent[i][j] ? 'X' : '.');
        sink.out() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zapn: 0-APN power maps over GF(2^n)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "zapn 1.0.0");
    Globals g;
    app.add_option("--modulus", g.modulus, "field modulus in hex (default: smallest irreducible)")->envname("ZAPN_MODULUS");
    app.add_option("--modulus-table", g.modulus_table, "file of 'n hex' modulus lines")->envname("ZAPN_MODULUS_TABLE");
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)")->envname("ZAPN_THREADS");
    app.add_option("--cache-dir", g.cache_dir, "scan result cache (off when empty)")->envname("ZAPN_CACHE_DIR");
    app.add_option("--seed", g.seed, "seed for randomized factorization")->envname("ZAPN_SEED");
    app.add_flag("--force", g.force, "allow scans above the n <= 24 ceiling");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("-o,--output", g.output, "write the report to a file");
    app.add_option("--data-dir", g.data_dir, "directory with systems/ and families.json")->envname("ZAPN_DATA_DIR");
    app.add_option("--catalog", g.catalog, "extra catalog file")->envname("ZAPN_CATALOG");

    unsigned n = 0;
    std::uint64_t d = 0;
    auto add_nd = [&](CLI::App* sub) {
        sub->add_option("-n", n, "field degree")->required();
        sub->add_option("-d", d, "exponent")->required();
    };

    auto* check = app.add_subcommand("check", "0-APN test and differential uniformity of x^d");
    add_nd(check);
    auto* spectrum = app.add_subcommand("spectrum", "differential spectrum of x^d");
    add_nd(spectrum);
    auto* x0check = app.add_subcommand("x0check", "x0-APN test by the pair definition");
    add_nd(x0check);
    std::string x0 = "0";
    x0check->add_option("--x0", x0, "point x0 (integer or 0x hex)");

    auto* table1 = app.add_subcommand("table1", "exhaustive check of the fourteen families");
    std::optional<int> only;
    unsigned max_n = 20;
    std::optional<std::int64_t> m_max;
    table1->add_option("--only", only, "family id 1..14")->check(CLI::Range(1, 14));
    table1->add_option("--max-n", max_n, "largest field degree")->check(CLI::Range(1u, 32u));
    table1->add_option("--m-max", m_max, "largest m");

    auto* certify = app.add_subcommand("certify", "replay a printed elimination chain");
    std::string tag, method = "auto";
    certify->add_option("theorem", tag, "theorem tag, e.g. 3.1 or 3.4-case2")->required();
    certify->add_option("--method", method, "resultant method")->check(CLI::IsMember({"auto", "interpolation", "bareiss"}));

    auto* classify = app.add_subcommand("classify", "catalog families CCZ-equivalent to x^d");
    add_nd(classify);
    auto* coset = app.add_subcommand("coset", "cyclotomic coset of d mod 2^n-1");
    add_nd(coset);
    auto* inequiv = app.add_subcommand("inequiv-matrix", "pairwise CCZ-equivalence of catalog exponents");
    inequiv->add_option("-n", n, "field degree")->required();
    std::string kind;
    inequiv->add_option("--kind", kind, "restrict to one family kind");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(g, n, d);
        if (*spectrum) return cmd_spectrum(g, n, d);
        if (*x0check) return cmd_x0check(g, n, d, x0);
        if (*table1) return cmd_table1(g, only, max_n, m_max);
        if (*certify) return cmd_certify(g, tag, method);
        if (*classify) return cmd_classify(g, n, d);
        if (*coset) return cmd_coset(g, n, d);
        if (*inequiv) return cmd_inequiv(g, n, kind);
    } catch (const zapn::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
