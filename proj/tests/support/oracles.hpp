#pragma once

// Reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "revauto/automaton.hpp"
#include "revauto/regex.hpp"

namespace oracle {

using revauto::Dfa;
using revauto::kNoState;
using revauto::Nfa;
using revauto::RegexAst;
using revauto::StateId;
using revauto::SymbolId;
using revauto::Word;

// All end positions j such that ast matches text[i, j).
inline std::set<std::size_t> match_ends(const RegexAst& ast, const std::string& text, std::size_t i) {
    using K = RegexAst::Kind;
    switch (ast.kind) {
    case K::Empty: return {};
    case K::Epsilon: return {i};
    case K::Symbol:
        if (i < text.size() && text[i] == ast.symbol) return {i + 1};
        return {};
    case K::Concat: {
        std::set<std::size_t> out;
        for (std::size_t m : match_ends(ast.children[0], text, i)) {
            auto rest = match_ends(ast.children[1], text, m);
            out.insert(rest.begin(), rest.end());
        }
        return out;
    }
    case K::Union: {
        auto out = match_ends(ast.children[0], text, i);
        auto rhs = match_ends(ast.children[1], text, i);
        out.insert(rhs.begin(), rhs.end());
        return out;
    }
    case K::Star: {
        std::set<std::size_t> out{i};
        std::vector<std::size_t> todo{i};
        while (!todo.empty()) {
            std::size_t m = todo.back();
            todo.pop_back();
            for (std::size_t e : match_ends(ast.children[0], text, m)) {
                if (out.insert(e).second) todo.push_back(e);
            }
        }
        return out;
    }
    }
    return {};
}

inline bool matches(const RegexAst& ast, const std::string& text) {
    return match_ends(ast, text, 0).count(text.size()) != 0;
}

// Every word over {0, ..., symbols-1} of length <= max_len, shortlex order.
inline std::vector<Word> all_words(std::size_t symbols, std::size_t max_len) {
    std::vector<Word> out{{}};
    for (std::size_t start = 0; start < out.size(); ++start) {
        if (out[start].size() == max_len) continue;
        for (SymbolId a = 0; a < symbols; ++a) {
            Word w = out[start];
            w.push_back(a);
            out.push_back(std::move(w));
        }
    }
    return out;
}

inline std::string spell(const std::vector<std::string>& alphabet, const Word& w) {
    std::string out;
    for (SymbolId a : w) out += alphabet[a];
    return out;
}

// Membership of a word spelled over `alphabet` in a DFA with a possibly different alphabet.
inline bool dfa_accepts(const Dfa& a, const std::vector<std::string>& alphabet, const Word& w) {
    StateId q = a.initial();
    for (SymbolId s : w) {
        auto t = a.find_symbol(alphabet[s]);
        if (!t) return false;
        q = a.next(q, *t);
        if (q == kNoState) return false;
    }
    return a.is_final(q);
}

inline bool nfa_accepts(const Nfa& n, const Word& w) {
    std::set<StateId> cur;
    for (StateId q = 0; q < n.num_states(); ++q) {
        if (n.is_initial(q)) cur.insert(q);
    }
    for (SymbolId a : w) {
        std::set<StateId> nxt;
        for (StateId q : cur) {
            for (StateId p : n.next(q, a)) nxt.insert(p);
        }
        cur = std::move(nxt);
    }
    return std::any_of(cur.begin(), cur.end(), [&](StateId q) { return n.is_final(q); });
}

// Languages agree on every word of length <= max_len over the union alphabet.
inline bool same_language_upto(const Dfa& a, const Dfa& b, std::size_t max_len) {
    std::set<std::string> sigma(a.alphabet().begin(), a.alphabet().end());
    sigma.insert(b.alphabet().begin(), b.alphabet().end());
    std::vector<std::string> alphabet(sigma.begin(), sigma.end());
    for (const auto& w : all_words(alphabet.size(), max_len)) {
        if (dfa_accepts(a, alphabet, w) != dfa_accepts(b, alphabet, w)) return false;
    }
    return true;
}

inline StateId run_from(const Dfa& a, StateId q, const Word& w) {
    for (SymbolId s : w) {
        if (q == kNoState) return q;
        q = a.next(q, s);
    }
    return q;
}

// Definition check: some x of length k-1 and sigma leave more than one predecessor of r.
inline bool k_irreversible(const Dfa& a, StateId r, std::size_t k) {
    for (const auto& x : all_words(a.num_symbols(), k - 1)) {
        if (x.size() != k - 1) continue;
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            std::set<StateId> before;
            for (StateId p = 0; p < a.num_states(); ++p) {
                StateId mid = run_from(a, p, x);
                if (mid != kNoState && a.next(mid, s) == r) before.insert(mid);
            }
            if (before.size() > 1) return true;
        }
    }
    return false;
}

inline std::vector<std::vector<bool>> reachability(const Dfa& a) {
    const std::size_t n = a.num_states();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (StateId q = 0; q < n; ++q) {
        std::vector<StateId> todo{q};
        reach[q][q] = true;
        while (!todo.empty()) {
            StateId u = todo.back();
            todo.pop_back();
            for (SymbolId s = 0; s < a.num_symbols(); ++s) {
                StateId v = a.next(u, s);
                if (v != kNoState && !reach[q][v]) {
                    reach[q][v] = true;
                    todo.push_back(v);
                }
            }
        }
    }
    return reach;
}

// Direct search for a k-forbidden pattern by enumerating every x of length k-1.
inline bool has_k_pattern(const Dfa& a, std::size_t k) {
    auto reach = reachability(a);
    for (const auto& x : all_words(a.num_symbols(), k - 1)) {
        if (x.size() != k - 1) continue;
        for (StateId p = 0; p < a.num_states(); ++p) {
            StateId px = run_from(a, p, x);
            if (px == kNoState) continue;
            for (StateId q = 0; q < a.num_states(); ++q) {
                if (q == p) continue;
                StateId qx = run_from(a, q, x);
                if (qx == kNoState || qx == px) continue;
                for (SymbolId s = 0; s < a.num_symbols(); ++s) {
                    StateId r = a.next(px, s);
                    if (r != kNoState && r == a.next(qx, s) && reach[r][q]) return true;
                }
            }
        }
    }
    return false;
}

inline bool has_cycle(const Dfa& a) {
    auto reach = reachability(a);
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            StateId p = a.next(q, s);
            if (p != kNoState && reach[p][q]) return true;
        }
    }
    return false;
}

// Random automata and expressions. All generators are deterministic given the engine.
using Rng = std::mt19937;

inline Dfa random_dfa(Rng& rng, std::size_t n, std::size_t symbols, double density = 0.8) {
    revauto::DfaBuilder b;
    for (std::size_t s = 0; s < symbols; ++s) b.add_symbol(std::string(1, static_cast<char>('a' + s)));
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution defined(density);
    std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(n - 1));
    for (std::size_t q = 0; q < n; ++q) b.add_state("s" + std::to_string(q), coin(rng));
    b.set_initial(0);
    for (StateId q = 0; q < n; ++q) {
        for (SymbolId s = 0; s < symbols; ++s) {
            if (defined(rng)) b.add_transition(q, s, target(rng));
        }
    }
    return b.build();
}

inline Nfa random_nfa(Rng& rng, std::size_t n, std::size_t symbols) {
    std::vector<std::string> names, alphabet;
    for (std::size_t q = 0; q < n; ++q) names.push_back("n" + std::to_string(q));
    for (std::size_t s = 0; s < symbols; ++s) alphabet.push_back(std::string(1, static_cast<char>('a' + s)));
    std::bernoulli_distribution coin(0.3);
    std::vector<bool> initials(n), finals(n);
    std::vector<std::vector<Nfa::Targets>> delta(n, std::vector<Nfa::Targets>(symbols));
    for (std::size_t q = 0; q < n; ++q) {
        initials[q] = q == 0 || coin(rng);
        finals[q] = coin(rng);
        for (std::size_t s = 0; s < symbols; ++s) {
            for (StateId p = 0; p < n; ++p) {
                if (coin(rng)) delta[q][s].push_back(p);
            }
        }
    }
    return Nfa(names, alphabet, initials, finals, delta);
}

inline RegexAst random_regex(Rng& rng, std::size_t depth, const std::string& symbols) {
    std::uniform_int_distribution<std::size_t> pick_sym(0, symbols.size() - 1);
    std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 5);
    switch (pick(rng)) {
    case 0: return RegexAst::sym(symbols[pick_sym(rng)]);
    case 1: return RegexAst::epsilon();
    case 2:
    case 3: return RegexAst::concat(random_regex(rng, depth - 1, symbols), random_regex(rng, depth - 1, symbols));
    case 4: return RegexAst::alt(random_regex(rng, depth - 1, symbols), random_regex(rng, depth - 1, symbols));
    default: return RegexAst::star(random_regex(rng, depth - 1, symbols));
    }
}

} // namespace oracle
