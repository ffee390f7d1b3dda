#pragma once

/**
 * @file regex.hpp
 * @brief Regular expressions in textbook notation, compiled to minimal DFAs.
 *
 * Grammar (precedence star > concatenation > union, all left associative):
 *
 *     union   := concat (('+' | '|') concat)*
 *     concat  := postfix postfix*
 *     postfix := atom '*'*
 *     atom    := [a-z0-9] | '_' | '(' union ')'
 *
 * '_' is the empty word. ASCII whitespace between tokens is ignored.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algorithms.hpp"
#include "automaton.hpp"

namespace revauto {

class RegexSyntaxError : public std::invalid_argument {
public:
    RegexSyntaxError(std::size_t offset, const std::string& message)
        : std::invalid_argument("regex syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct RegexAst {
    enum class Kind { Empty, Epsilon, Symbol, Concat, Union, Star };

    Kind kind = Kind::Empty;
    char symbol = 0;
    std::vector<RegexAst> children;

    static RegexAst empty() { return {Kind::Empty, 0, {}}; }
    static RegexAst epsilon() { return {Kind::Epsilon, 0, {}}; }
    static RegexAst sym(char c) { return {Kind::Symbol, c, {}}; }
    static RegexAst concat(RegexAst l, RegexAst r) { return {Kind::Concat, 0, {std::move(l), std::move(r)}}; }
    static RegexAst alt(RegexAst l, RegexAst r) { return {Kind::Union, 0, {std::move(l), std::move(r)}}; }
    static RegexAst star(RegexAst c) { return {Kind::Star, 0, {std::move(c)}}; }

    bool operator==(const RegexAst&) const = default;
};

inline bool is_regex_symbol(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

namespace detail {

class RegexParser {
public:
    explicit RegexParser(std::string_view text) : text_(text) {}

    RegexAst parse() {
        skip_space();
        if (pos_ == text_.size()) throw RegexSyntaxError(pos_, "empty expression");
        RegexAst ast = parse_union();
        skip_space();
        if (pos_ != text_.size()) {
            throw RegexSyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        }
        return ast;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    RegexAst parse_union() {
        RegexAst left = parse_concat();
        skip_space();
        while (!at_end() && (peek() == '+' || peek() == '|')) {
            ++pos_;
            RegexAst right = parse_concat();
            left = RegexAst::alt(std::move(left), std::move(right));
            skip_space();
        }
        return left;
    }

    [[nodiscard]] bool starts_atom() const {
        char c = peek();
        return is_regex_symbol(c) || c == '_' || c == '(';
    }

    RegexAst parse_concat() {
        skip_space();
        if (at_end()) throw RegexSyntaxError(pos_, "expected an operand");
        if (!starts_atom()) throw RegexSyntaxError(pos_, std::string("expected an operand, found '") + peek() + "'");
        RegexAst left = parse_postfix();
        skip_space();
        while (!at_end() && starts_atom()) {
            RegexAst right = parse_postfix();
            left = RegexAst::concat(std::move(left), std::move(right));
            skip_space();
        }
        return left;
    }

    RegexAst parse_postfix() {
        RegexAst node = parse_atom();
        skip_space();
        while (!at_end() && peek() == '*') {
            ++pos_;
            node = RegexAst::star(std::move(node));
            skip_space();
        }
        return node;
    }

    RegexAst parse_atom() {
        char c = peek();
        if (is_regex_symbol(c)) {
            ++pos_;
            return RegexAst::sym(c);
        }
        if (c == '_') {
            ++pos_;
            return RegexAst::epsilon();
        }
        // c == '('
        std::size_t open = pos_++;
        RegexAst inner = parse_union();
        skip_space();
        if (at_end() || peek() != ')') throw RegexSyntaxError(pos_, "unbalanced '(' opened at offset " + std::to_string(open));
        ++pos_;
        return inner;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RegexAst parse_regex(std::string_view text) { return detail::RegexParser(text).parse(); }

/**
 * Minimal-parenthesis rendering in the parser's grammar. Empty has no surface
 * syntax and is rejected.
 */
inline std::string to_string(const RegexAst& ast) {
    // precedence: union 0, concat 1, star/atom 2
    auto prec = [](const RegexAst& n) {
        switch (n.kind) {
        case RegexAst::Kind::Union: return 0;
        case RegexAst::Kind::Concat: return 1;
        default: return 2;
        }
    };
    auto wrap = [&](const RegexAst& n, int min_prec) {
        std::string s = to_string(n);
        return prec(n) < min_prec ? "(" + s + ")" : s;
    };
    switch (ast.kind) {
    case RegexAst::Kind::Empty: throw std::invalid_argument("the empty-language regex has no textual form");
    case RegexAst::Kind::Epsilon: return "_";
    case RegexAst::Kind::Symbol: return std::string(1, ast.symbol);
    case RegexAst::Kind::Concat: return wrap(ast.children[0], 1) + wrap(ast.children[1], 2);
    case RegexAst::Kind::Union: return wrap(ast.children[0], 0) + "+" + wrap(ast.children[1], 1);
    case RegexAst::Kind::Star: return wrap(ast.children[0], 2) + "*";
    }
    return {};
}

/// Sorted set of symbols occurring in the expression.
inline std::vector<std::string> regex_alphabet(const RegexAst& ast) {
    std::set<std::string> seen;
    std::vector<const RegexAst*> work{&ast};
    while (!work.empty()) {
        const RegexAst* n = work.back();
        work.pop_back();
        if (n->kind == RegexAst::Kind::Symbol) seen.insert(std::string(1, n->symbol));
        for (const auto& c : n->children) work.push_back(&c);
    }
    return {seen.begin(), seen.end()};
}

namespace detail {

struct EpsNfa {
    struct Edge {
        std::uint32_t to;
        std::optional<SymbolId> symbol;  // nullopt = epsilon
    };
    std::vector<std::vector<Edge>> edges;

    std::uint32_t add() {
        edges.emplace_back();
        return static_cast<std::uint32_t>(edges.size() - 1);
    }
};

struct Fragment {
    std::uint32_t start;
    std::uint32_t accept;
};

inline Fragment thompson(const RegexAst& ast, const std::vector<std::string>& alphabet, EpsNfa& nfa) {
    using K = RegexAst::Kind;
    switch (ast.kind) {
    case K::Empty: {
        return {nfa.add(), nfa.add()};
    }
    case K::Epsilon: {
        auto s = nfa.add(), f = nfa.add();
        nfa.edges[s].push_back({f, std::nullopt});
        return {s, f};
    }
    case K::Symbol: {
        auto s = nfa.add(), f = nfa.add();
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), std::string(1, ast.symbol));
        nfa.edges[s].push_back({f, static_cast<SymbolId>(it - alphabet.begin())});
        return {s, f};
    }
    case K::Concat: {
        Fragment l = thompson(ast.children[0], alphabet, nfa);
        Fragment r = thompson(ast.children[1], alphabet, nfa);
        nfa.edges[l.accept].push_back({r.start, std::nullopt});
        return {l.start, r.accept};
    }
    case K::Union: {
        Fragment l = thompson(ast.children[0], alphabet, nfa);
        Fragment r = thompson(ast.children[1], alphabet, nfa);
        auto s = nfa.add(), f = nfa.add();
        nfa.edges[s].push_back({l.start, std::nullopt});
        nfa.edges[s].push_back({r.start, std::nullopt});
        nfa.edges[l.accept].push_back({f, std::nullopt});
        nfa.edges[r.accept].push_back({f, std::nullopt});
        return {s, f};
    }
    case K::Star: {
        Fragment c = thompson(ast.children[0], alphabet, nfa);
        auto s = nfa.add(), f = nfa.add();
        nfa.edges[s].push_back({c.start, std::nullopt});
        nfa.edges[s].push_back({f, std::nullopt});
        nfa.edges[c.accept].push_back({c.start, std::nullopt});
        nfa.edges[c.accept].push_back({f, std::nullopt});
        return {s, f};
    }
    }
    throw std::logic_error("unknown regex node");
}

} // namespace detail

/**
 * Thompson construction followed by epsilon-closure elimination.
 * States are named n0, n1, ... after their Thompson index; n-start is the only initial state.
 */
inline Nfa ast_to_nfa(const RegexAst& ast) {
    std::vector<std::string> alphabet = regex_alphabet(ast);
    detail::EpsNfa eps;
    detail::Fragment frag = detail::thompson(ast, alphabet, eps);
    const std::size_t n = eps.edges.size();

    std::vector<std::vector<std::uint32_t>> closure(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        std::vector<std::uint32_t> work{s};
        seen[s] = true;
        while (!work.empty()) {
            auto v = work.back();
            work.pop_back();
            closure[s].push_back(v);
            for (const auto& e : eps.edges[v]) {
                if (!e.symbol && !seen[e.to]) {
                    seen[e.to] = true;
                    work.push_back(e.to);
                }
            }
        }
    }

    std::vector<std::string> names;
    std::vector<bool> initials(n, false), finals(n, false);
    std::vector<std::vector<Nfa::Targets>> delta(n, std::vector<Nfa::Targets>(alphabet.size()));
    initials[frag.start] = true;
    for (std::uint32_t s = 0; s < n; ++s) {
        names.push_back("n" + std::to_string(s));
        for (auto v : closure[s]) {
            if (v == frag.accept) finals[s] = true;
            for (const auto& e : eps.edges[v]) {
                if (e.symbol) delta[s][*e.symbol].push_back(e.to);
            }
        }
    }
    return Nfa(std::move(names), std::move(alphabet), std::move(initials), std::move(finals), std::move(delta));
}

/// parse -> Thompson -> subset construction -> minimization, states renamed q0, q1, ... breadth-first.
inline Dfa regex_to_min_dfa(const RegexAst& ast) {
    return rename_canonical(minimize(subset_construct(ast_to_nfa(ast))));
}

inline Dfa regex_to_min_dfa(std::string_view text) { return regex_to_min_dfa(parse_regex(text)); }

} // namespace revauto
