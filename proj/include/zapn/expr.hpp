/**************************************************************************
 * expr.hpp
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

// Integer expressions over the parameters m, i, n, used by exponent
// formulas and their constraint clauses:
//
//   2^(2*i)-2^i+1        3*(2^(2*m+1)-1)        gcd(i,n)=1, m mod 14 != 5

#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zapn/error.hpp"

namespace zapn {

using Bindings = std::map<char, std::int64_t>;

class Expr {
public:
    enum class Op { Num, Var, Add, Sub, Mul, Div, Pow, Mod, Gcd, Neg };

    Expr() = default;

    static Expr parse(std::string_view text);

    /// Exact evaluation; throws on overflow, missing variables or inexact division.
    std::int64_t eval(const Bindings& b) const { return eval_node(*root_, b); }

    /// Evaluation modulo M (M >= 1); exponents and divisions are evaluated exactly.
    std::uint64_t eval_mod(const Bindings& b, std::uint64_t M) const { return eval_mod_node(*root_, b, M); }

    std::set<char> variables() const {
        std::set<char> out;
        if (root_) collect(*root_, out);
        return out;
    }

    const std::string& text() const noexcept { return text_; }

private:
    struct Node {
        Op op;
        std::int64_t value = 0;
        char var = 0;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };
    using NodePtr = std::shared_ptr<const Node>;

    friend class ExprParser;

    static void collect(const Node& n, std::set<char>& out) {
        if (n.op == Op::Var) out.insert(n.var);
        if (n.lhs) collect(*n.lhs, out);
        if (n.rhs) collect(*n.rhs, out);
    }

    static std::int64_t checked(bool overflow, std::int64_t v) {
        if (overflow) throw Error(Errc::ExponentOutOfRange, "integer overflow in expression");
        return v;
    }

    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t t;
        const bool o = __builtin_add_overflow(a, b, &t);
        return checked(o, t);
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t t;
        const bool o = __builtin_sub_overflow(a, b, &t);
        return checked(o, t);
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t t;
        const bool o = __builtin_mul_overflow(a, b, &t);
        return checked(o, t);
    }

    static std::int64_t ipow(std::int64_t base, std::int64_t e) {
        if (e < 0) throw Error(Errc::ExponentOutOfRange, "negative exponent in expression");
        std::int64_t r = 1;
        for (std::int64_t k = 0; k < e; ++k) {
            r = mul(r, base);
            if (r == 0 || r == 1) break;
        }
        return r;
    }

    static std::int64_t eval_node(const Node& n, const Bindings& b) {
        switch (n.op) {
            case Op::Num: return n.value;
            case Op::Var: {
                auto it = b.find(n.var);
                if (it == b.end()) throw Error(Errc::MissingVariable, std::string("no value for ") + n.var);
                return it->second;
            }
            case Op::Neg: {
                const std::int64_t v = eval_node(*n.lhs, b);
                return checked(v == INT64_MIN, -v);
            }
            default: break;
        }
        const std::int64_t x = eval_node(*n.lhs, b), y = eval_node(*n.rhs, b);
        switch (n.op) {
            case Op::Add: return add(x, y);
            case Op::Sub: return sub(x, y);
            case Op::Mul: return mul(x, y);
            case Op::Div:
                if (y == 0) throw Error(Errc::DivisionByZero, "division by zero in expression");
                if (x % y != 0) throw Error(Errc::NotApplicable, "inexact division in expression");
                return x / y;
            case Op::Mod:
                if (y <= 0) throw Error(Errc::DivisionByZero, "mod by a non-positive value");
                return ((x % y) + y) % y;
            case Op::Pow: return ipow(x, y);
            case Op::Gcd: return std::gcd(x, y);
            default: break;
        }
        throw Error(Errc::SyntaxError, "bad expression node");
    }

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t M) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % M);
    }

    static std::uint64_t to_mod(std::int64_t v, std::uint64_t M) {
        const std::int64_t m = static_cast<std::int64_t>(M);
        return static_cast<std::uint64_t>(((v % m) + m) % m);
    }

    static std::uint64_t eval_mod_node(const Node& n, const Bindings& b, std::uint64_t M) {
        switch (n.op) {
            case Op::Num:
            case Op::Var:
            case Op::Div:
            case Op::Mod:
            case Op::Gcd: return to_mod(eval_node(n, b), M);
            case Op::Neg: return (M - eval_mod_node(*n.lhs, b, M)) % M;
            case Op::Add: return (eval_mod_node(*n.lhs, b, M) + eval_mod_node(*n.rhs, b, M)) % M;
            case Op::Sub: return (eval_mod_node(*n.lhs, b, M) + M - eval_mod_node(*n.rhs, b, M)) % M;
            case Op::Mul: return mulmod(eval_mod_node(*n.lhs, b, M), eval_mod_node(*n.rhs, b, M), M);
            case Op::Pow: {
                std::uint64_t base = eval_mod_node(*n.lhs, b, M);
                std::int64_t e = eval_node(*n.rhs, b);
                if (e < 0) throw Error(Errc::ExponentOutOfRange, "negative exponent in expression");
                std::uint64_t r = 1 % M;
                while (e > 0) {
                    if (e & 1) r = mulmod(r, base, M);
                    base = mulmod(base, base, M);
                    e >>= 1;
                }
                return r;
            }
        }
        throw Error(Errc::SyntaxError, "bad expression node");
    }

    NodePtr root_;
    std::string text_;
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) { tokenize(); }

    Expr parse() {
        Expr e;
        e.text_ = std::string(text_);
        e.root_ = modexpr();
        if (pos_ != toks_.size()) fail("trailing input");
        return e;
    }

private:
    using Node = Expr::Node;
    using NodePtr = Expr::NodePtr;
    using Op = Expr::Op;

    struct Tok {
        enum Kind { Num, Ident, Sym } kind;
        std::string s;
        std::int64_t v = 0;
    };

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::SyntaxError, why + " in expression '" + std::string(text_) + "'");
    }

    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::int64_t v = 0;
                while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
                    if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, text_[i] - '0', &v)) fail("number too large");
                    ++i;
                }
                toks_.push_back({Tok::Num, {}, v});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string id;
                while (i < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i]))) id += text_[i++];
                toks_.push_back({Tok::Ident, id, 0});
            } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
                toks_.push_back({Tok::Sym, std::string(1, c), 0});
                ++i;
            } else {
                fail(std::string("unexpected '") + c + "'");
            }
        }
    }

    const Tok* peek() const { return pos_ < toks_.size() ? &toks_[pos_] : nullptr; }
    bool peek_sym(char c) const { return peek() && peek()->kind == Tok::Sym && peek()->s[0] == c; }
    bool peek_ident(std::string_view s) const { return peek() && peek()->kind == Tok::Ident && peek()->s == s; }

    static NodePtr make(Op op, NodePtr l, NodePtr r) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    NodePtr modexpr() {
        NodePtr l = sum();
        while (peek_ident("mod")) {
            ++pos_;
            l = make(Op::Mod, l, sum());
        }
        return l;
    }

    NodePtr sum() {
        NodePtr l = product();
        while (peek_sym('+') || peek_sym('-')) {
            const Op op = toks_[pos_++].s[0] == '+' ? Op::Add : Op::Sub;
            l = make(op, l, product());
        }
        return l;
    }

    bool starts_atom() const {
        const Tok* t = peek();
        if (!t) return false;
        if (t->kind == Tok::Num) return true;
        if (t->kind == Tok::Ident) return t->s != "mod";
        return t->s[0] == '(';
    }

    NodePtr product() {
        NodePtr l = unary();
        for (;;) {
            if (peek_sym('*') || peek_sym('/')) {
                const Op op = toks_[pos_++].s[0] == '*' ? Op::Mul : Op::Div;
                l = make(op, l, unary());
            } else if (starts_atom()) {
                l = make(Op::Mul, l, power());  // juxtaposition, as in 3(2^m-1)
            } else {
                return l;
            }
        }
    }

    NodePtr unary() {
        if (peek_sym('-')) {
            ++pos_;
            return make(Op::Neg, unary(), nullptr);
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (peek_sym('^')) {
            ++pos_;
            return make(Op::Pow, base, unary());  // right associative
        }
        return base;
    }

    NodePtr atom() {
        const Tok* t = peek();
        if (!t) fail("unexpected end");
        if (t->kind == Tok::Num) {
            ++pos_;
            auto n = std::make_shared<Node>();
            n->op = Op::Num;
            n->value = t->v;
            return n;
        }
        if (t->kind == Tok::Ident) {
            if (t->s == "gcd") {
                ++pos_;
                if (!peek_sym('(')) fail("expected '(' after gcd");
                ++pos_;
                NodePtr a = modexpr();
                if (!peek_sym(',')) fail("expected ',' in gcd");
                ++pos_;
                NodePtr b = modexpr();
                if (!peek_sym(')')) fail("expected ')'");
                ++pos_;
                return make(Op::Gcd, a, b);
            }
            if (t->s.size() == 1 && std::string_view("min").find(t->s[0]) != std::string_view::npos) {
                ++pos_;
                auto n = std::make_shared<Node>();
                n->op = Op::Var;
                n->var = t->s[0];
                return n;
            }
            throw Error(Errc::UnknownVariable, "unknown identifier '" + t->s + "' in '" + std::string(text_) + "'");
        }
        if (t->s[0] == '(') {
            ++pos_;
            NodePtr e = modexpr();
            if (!peek_sym(')')) fail("expected ')'");
            ++pos_;
            return e;
        }
        fail("unexpected '" + t->s + "'");
    }

    std::string_view text_;
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

inline Expr Expr::parse(std::string_view text) { return ExprParser(text).parse(); }

/// One comparison "lhs op rhs" of a constraint list.
struct Clause {
    enum class Cmp { Eq, Ne, Lt, Le, Gt, Ge };
    Expr lhs;
    Cmp cmp = Cmp::Eq;
    Expr rhs;
    std::string text;

    bool holds(const Bindings& b) const {
        const std::int64_t x = lhs.eval(b), y = rhs.eval(b);
        switch (cmp) {
            case Cmp::Eq: return x == y;
            case Cmp::Ne: return x != y;
            case Cmp::Lt: return x < y;
            case Cmp::Le: return x <= y;
            case Cmp::Gt: return x > y;
            case Cmp::Ge: return x >= y;
        }
        return false;
    }
};

/// Comma-separated clauses; commas inside parentheses belong to gcd(...).
inline std::vector<Clause> parse_constraints(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    std::vector<Clause> out;
    for (auto& part : parts) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        static const std::pair<std::string_view, Clause::Cmp> kOps[] = {
            {"!=", Clause::Cmp::Ne}, {"<=", Clause::Cmp::Le}, {">=", Clause::Cmp::Ge},
            {"=", Clause::Cmp::Eq},  {"<", Clause::Cmp::Lt},  {">", Clause::Cmp::Gt},
        };
        bool found = false;
        for (const auto& [tok, cmp] : kOps) {
            const auto at = part.find(tok);
            if (at == std::string::npos) continue;
            Clause c;
            c.lhs = Expr::parse(std::string_view(part).substr(0, at));
            c.rhs = Expr::parse(std::string_view(part).substr(at + tok.size()));
            c.cmp = cmp;
            const auto b = part.find_first_not_of(" \t"), e = part.find_last_not_of(" \t");
            c.text = part.substr(b, e - b + 1);
            out.push_back(std::move(c));
            found = true;
            break;
        }
        if (!found) throw Error(Errc::SyntaxError, "constraint '" + part + "' has no comparison");
    }
    return out;
}

}  // namespace zapn
