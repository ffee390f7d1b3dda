#pragma once

/**
 * @file algorithms.hpp
 * @brief Trimming, reversal, determinization, minimization and equivalence.
 */

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "automaton.hpp"

namespace revauto {

/// The canonical empty-language automaton: one non-final initial state, no transitions.
inline Dfa empty_language_dfa(std::vector<std::string> alphabet, std::string state_name = "q0") {
    const std::size_t k = alphabet.size();
    return Dfa({std::move(state_name)}, std::move(alphabet), 0, {false}, std::vector<StateId>(k, kNoState));
}

/// States reachable from the initial state, in breadth-first order over the sorted alphabet.
inline std::vector<StateId> bfs_order(const Dfa& a) {
    std::vector<bool> seen(a.num_states(), false);
    std::vector<StateId> order{a.initial()};
    seen[a.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            StateId p = a.next(order[i], s);
            if (p != kNoState && !seen[p]) {
                seen[p] = true;
                order.push_back(p);
            }
        }
    }
    return order;
}

namespace detail {

/// Keeps the states flagged in `keep` (which must contain the initial state), preserving order.
/// Transitions into dropped states become undefined.
inline Dfa restrict_states(const Dfa& a, const std::vector<bool>& keep) {
    std::vector<StateId> remap(a.num_states(), kNoState);
    std::vector<std::string> names;
    std::vector<bool> finals;
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (!keep[q]) continue;
        remap[q] = static_cast<StateId>(names.size());
        names.push_back(a.state_name(q));
        finals.push_back(a.is_final(q));
    }
    std::vector<StateId> table;
    table.reserve(names.size() * a.num_symbols());
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (!keep[q]) continue;
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            StateId p = a.next(q, s);
            table.push_back(p == kNoState ? kNoState : remap[p]);
        }
    }
    return Dfa(std::move(names), a.alphabet(), remap[a.initial()], std::move(finals), std::move(table));
}

} // namespace detail

/**
 * Restriction to useful (reachable and co-reachable) states.
 * An empty language yields empty_language_dfa() named after the original initial state.
 */
inline Dfa trim(const Dfa& a) {
    const std::size_t n = a.num_states();
    std::vector<bool> reachable(n, false);
    for (StateId q : bfs_order(a)) reachable[q] = true;

    std::vector<std::vector<StateId>> preds(n);
    for (StateId q = 0; q < n; ++q) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            if (StateId p = a.next(q, s); p != kNoState) preds[p].push_back(q);
        }
    }
    std::vector<bool> productive(n, false);
    std::vector<StateId> work;
    for (StateId q = 0; q < n; ++q) {
        if (a.is_final(q)) {
            productive[q] = true;
            work.push_back(q);
        }
    }
    while (!work.empty()) {
        StateId q = work.back();
        work.pop_back();
        for (StateId p : preds[q]) {
            if (!productive[p]) {
                productive[p] = true;
                work.push_back(p);
            }
        }
    }
    if (!productive[a.initial()]) return empty_language_dfa(a.alphabet(), a.state_name(a.initial()));

    std::vector<bool> keep(n);
    for (StateId q = 0; q < n; ++q) keep[q] = reachable[q] && productive[q];
    return detail::restrict_states(a, keep);
}

/// True when no state was dropped by trim() (the empty-language sentinel counts as trimmed).
inline bool is_trimmed(const Dfa& a) {
    Dfa t = trim(a);
    return t.num_states() == a.num_states() && t.num_transitions() == a.num_transitions();
}

/// Reverse automaton: initials are the finals of `a`, the only final is its initial state.
inline Nfa reverse(const Dfa& a) {
    const std::size_t n = a.num_states();
    std::vector<std::vector<Nfa::Targets>> delta(n, std::vector<Nfa::Targets>(a.num_symbols()));
    for (StateId q = 0; q < n; ++q) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            if (StateId p = a.next(q, s); p != kNoState) delta[p][s].push_back(q);
        }
    }
    std::vector<bool> finals(n, false);
    finals[a.initial()] = true;
    return Nfa(a.state_names(), a.alphabet(), a.finals(), std::move(finals), std::move(delta));
}

/// Powerset construction; only reachable nonempty subsets (plus the initial one) are created.
/// Subset states are named "{m1,m2,...}" after their members.
inline Dfa subset_construct(const Nfa& n) {
    using Subset = std::vector<StateId>;
    std::map<Subset, StateId> ids;
    std::vector<Subset> subsets;
    auto intern = [&](Subset s) {
        auto [it, fresh] = ids.emplace(s, static_cast<StateId>(subsets.size()));
        if (fresh) subsets.push_back(std::move(s));
        return it->second;
    };
    Subset start;
    for (StateId q = 0; q < n.num_states(); ++q) {
        if (n.is_initial(q)) start.push_back(q);
    }
    intern(start);

    std::vector<StateId> table;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (SymbolId s = 0; s < n.num_symbols(); ++s) {
            Subset target;
            for (StateId q : subsets[i]) {
                const auto& t = n.next(q, s);
                target.insert(target.end(), t.begin(), t.end());
            }
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            table.push_back(target.empty() ? kNoState : intern(std::move(target)));
        }
    }

    std::vector<std::string> names;
    std::vector<bool> finals;
    for (const auto& subset : subsets) {
        std::string name = "{";
        bool final = false;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (i != 0) name += ',';
            name += n.state_name(subset[i]);
            final = final || n.is_final(subset[i]);
        }
        names.push_back(name + "}");
        finals.push_back(final);
    }
    return Dfa(std::move(names), n.alphabet(), 0, std::move(finals), std::move(table));
}

/**
 * Renumbers reachable states in breadth-first order and names them prefix0, prefix1, ...
 * Unreachable states are dropped.
 */
inline Dfa rename_canonical(const Dfa& a, const std::string& prefix = "q") {
    std::vector<StateId> order = bfs_order(a);
    std::vector<StateId> remap(a.num_states(), kNoState);
    for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<StateId>(i);
    std::vector<std::string> names;
    std::vector<bool> finals;
    std::vector<StateId> table;
    for (std::size_t i = 0; i < order.size(); ++i) {
        names.push_back(prefix + std::to_string(i));
        finals.push_back(a.is_final(order[i]));
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            StateId p = a.next(order[i], s);
            table.push_back(p == kNoState ? kNoState : remap[p]);
        }
    }
    return Dfa(std::move(names), a.alphabet(), 0, std::move(finals), std::move(table));
}

/**
 * Minimal trimmed DFA by partition refinement.
 *
 * Undefined transitions stay undefined. Output states are in breadth-first
 * order and each takes the name of its earliest (breadth-first) member.
 */
inline Dfa minimize(const Dfa& input) {
    Dfa a = trim(input);
    const std::size_t n = a.num_states();
    const std::size_t k = a.num_symbols();

    // After trimming every state is productive, so "undefined" behaves as a
    // distinct dead block and can be encoded as -1 in signatures.
    std::vector<std::uint32_t> block(n);
    for (StateId q = 0; q < n; ++q) block[q] = a.is_final(q) ? 1 : 0;
    std::size_t num_blocks = 0;
    while (true) {
        std::map<std::vector<std::int64_t>, std::uint32_t> signatures;
        std::vector<std::uint32_t> refined(n);
        for (StateId q = 0; q < n; ++q) {
            std::vector<std::int64_t> sig;
            sig.reserve(k + 1);
            sig.push_back(block[q]);
            for (SymbolId s = 0; s < k; ++s) {
                StateId p = a.next(q, s);
                sig.push_back(p == kNoState ? -1 : static_cast<std::int64_t>(block[p]));
            }
            auto [it, fresh] = signatures.emplace(std::move(sig), static_cast<std::uint32_t>(signatures.size()));
            refined[q] = it->second;
        }
        std::size_t count = signatures.size();
        block = std::move(refined);
        if (count == num_blocks) break;
        num_blocks = count;
    }

    // Quotient, visited breadth-first from the initial block.
    std::vector<StateId> rep(num_blocks, kNoState);
    for (StateId q : bfs_order(a)) {
        if (rep[block[q]] == kNoState) rep[block[q]] = q;
    }
    std::vector<std::uint32_t> order{block[a.initial()]};
    std::vector<StateId> new_id(num_blocks, kNoState);
    new_id[order[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        StateId q = rep[order[i]];
        for (SymbolId s = 0; s < k; ++s) {
            StateId p = a.next(q, s);
            if (p == kNoState || new_id[block[p]] != kNoState) continue;
            new_id[block[p]] = static_cast<StateId>(order.size());
            order.push_back(block[p]);
        }
    }
    std::vector<std::string> names;
    std::vector<bool> finals;
    std::vector<StateId> table;
    for (std::uint32_t b : order) {
        StateId q = rep[b];
        names.push_back(a.state_name(q));
        finals.push_back(a.is_final(q));
        for (SymbolId s = 0; s < k; ++s) {
            StateId p = a.next(q, s);
            table.push_back(p == kNoState ? kNoState : new_id[block[p]]);
        }
    }
    return Dfa(std::move(names), a.alphabet(), 0, std::move(finals), std::move(table));
}

struct EquivalenceResult {
    bool equivalent = true;
    /// Shortest (then lexicographically least) word accepted by exactly one automaton.
    std::optional<std::vector<std::string>> counterexample;

    explicit operator bool() const noexcept { return equivalent; }
};

/**
 * Language equality over the union alphabet. A symbol missing from one
 * automaton is an undefined transition there.
 */
inline EquivalenceResult equivalent(const Dfa& a, const Dfa& b) {
    std::vector<std::string> alphabet = a.alphabet();
    alphabet.insert(alphabet.end(), b.alphabet().begin(), b.alphabet().end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<std::optional<SymbolId>> in_a, in_b;
    for (const auto& s : alphabet) {
        in_a.push_back(a.find_symbol(s));
        in_b.push_back(b.find_symbol(s));
    }

    using Pair = std::pair<StateId, StateId>;
    auto accepting = [&](Pair p) {
        bool fa = p.first != kNoState && a.is_final(p.first);
        bool fb = p.second != kNoState && b.is_final(p.second);
        return std::pair{fa, fb};
    };
    std::map<Pair, std::pair<Pair, std::size_t>> parent;  // child -> (parent, symbol)
    std::deque<Pair> queue;
    Pair start{a.initial(), b.initial()};
    parent.emplace(start, std::pair{start, SIZE_MAX});
    queue.push_back(start);
    while (!queue.empty()) {
        Pair cur = queue.front();
        queue.pop_front();
        auto [fa, fb] = accepting(cur);
        if (fa != fb) {
            std::vector<std::string> word;
            for (Pair p = cur; p != start;) {
                const auto& [prev, sym] = parent.at(p);
                word.push_back(alphabet[sym]);
                p = prev;
            }
            std::reverse(word.begin(), word.end());
            return {false, std::move(word)};
        }
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
            StateId na = (cur.first == kNoState || !in_a[s]) ? kNoState : a.next(cur.first, *in_a[s]);
            StateId nb = (cur.second == kNoState || !in_b[s]) ? kNoState : b.next(cur.second, *in_b[s]);
            if (na == kNoState && nb == kNoState) continue;
            Pair nxt{na, nb};
            if (parent.emplace(nxt, std::pair{cur, s}).second) queue.push_back(nxt);
        }
    }
    return {true, std::nullopt};
}

/**
 * Structural isomorphism of the reachable parts, matching symbols by name.
 * Both automata must have only reachable states for a full-structure answer.
 */
inline bool isomorphic(const Dfa& a, const Dfa& b) {
    if (a.num_states() != b.num_states() || a.alphabet() != b.alphabet()) return false;
    std::vector<StateId> map_ab(a.num_states(), kNoState), map_ba(b.num_states(), kNoState);
    std::vector<std::pair<StateId, StateId>> work{{a.initial(), b.initial()}};
    map_ab[a.initial()] = b.initial();
    map_ba[b.initial()] = a.initial();
    std::size_t mapped = 1;
    while (!work.empty()) {
        auto [p, q] = work.back();
        work.pop_back();
        if (a.is_final(p) != b.is_final(q)) return false;
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            StateId pn = a.next(p, s), qn = b.next(q, s);
            if ((pn == kNoState) != (qn == kNoState)) return false;
            if (pn == kNoState) continue;
            if (map_ab[pn] == kNoState && map_ba[qn] == kNoState) {
                map_ab[pn] = qn;
                map_ba[qn] = pn;
                ++mapped;
                work.emplace_back(pn, qn);
            } else if (map_ab[pn] != qn || map_ba[qn] != pn) {
                return false;
            }
        }
    }
    return mapped == a.num_states();
}

} // namespace revauto
