#pragma once

/**
 * @file witness.hpp
 * @brief Certificates of irreversibility and their independent checkers.
 */

#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "scc.hpp"

namespace revauto {

/**
 * A k-forbidden pattern (k = |x| + 1): p != q, δ(p,x) != δ(q,x),
 * δ(p,xσ) = δ(q,xσ) = r and δ(r,w) = q.
 */
struct ForbiddenPatternWitness {
    StateId p = kNoState;
    StateId q = kNoState;
    StateId r = kNoState;
    Word x;
    SymbolId sigma = 0;
    Word w;

    [[nodiscard]] std::size_t k() const noexcept { return x.size() + 1; }
    bool operator==(const ForbiddenPatternWitness&) const = default;
};

/**
 * Stem and cycle of a lasso in the pattern NFA, starting at the diagonal
 * pair (anchor, anchor). Reading stem·cycle^m backwards gives the word xσ of
 * a (|stem| + m·|cycle|)-forbidden pattern, for every m >= 0.
 */
struct PumpCertificate {
    StateId anchor = kNoState;
    Word stem;
    Word cycle;

    bool operator==(const PumpCertificate&) const = default;
};

using Witness = std::variant<ForbiddenPatternWitness, PumpCertificate>;

/// Returns a description of the first violated condition, or nullopt when the witness is valid for `a`.
inline std::optional<std::string> check_witness(const Dfa& a, const ForbiddenPatternWitness& wit) {
    const std::size_t n = a.num_states();
    if (wit.p >= n || wit.q >= n || wit.r >= n) return "state out of range";
    if (wit.sigma >= a.num_symbols()) return "symbol out of range";
    for (SymbolId s : wit.x) {
        if (s >= a.num_symbols()) return "symbol out of range in x";
    }
    for (SymbolId s : wit.w) {
        if (s >= a.num_symbols()) return "symbol out of range in w";
    }
    if (wit.p == wit.q) return "p equals q";
    StateId px = a.run(wit.p, wit.x), qx = a.run(wit.q, wit.x);
    if (px == kNoState || qx == kNoState) return "δ(p,x) or δ(q,x) undefined";
    if (px == qx) return "δ(p,x) equals δ(q,x)";
    if (a.next(px, wit.sigma) != wit.r) return "δ(p,xσ) differs from r";
    if (a.next(qx, wit.sigma) != wit.r) return "δ(q,xσ) differs from r";
    if (a.run(wit.r, wit.w) != wit.q) return "δ(r,w) differs from q";
    return std::nullopt;
}

inline bool is_valid_witness(const Dfa& a, const ForbiddenPatternWitness& wit) {
    return !check_witness(a, wit).has_value();
}

/// Breadth-first shortest word from `from` to `to` (lexicographically least among the shortest).
inline std::optional<Word> shortest_word(const Dfa& a, StateId from, StateId to) {
    std::vector<std::pair<StateId, SymbolId>> parent(a.num_states(), {kNoState, 0});
    std::vector<bool> seen(a.num_states(), false);
    std::deque<StateId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        if (q == to) {
            Word w;
            for (StateId v = to; v != from; v = parent[v].first) w.push_back(parent[v].second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            StateId p = a.next(q, s);
            if (p != kNoState && !seen[p]) {
                seen[p] = true;
                parent[p] = {q, s};
                queue.push_back(p);
            }
        }
    }
    return std::nullopt;
}

} // namespace revauto
