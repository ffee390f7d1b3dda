#pragma once

/**
 * @file reversibility.hpp
 * @brief Degrees of irreversibility of states, automata and languages.
 *
 * A state r is k-irreversible when some x of length k-1 and symbol σ admit two
 * distinct states δ(p,x) among the p with δ(p,xσ) = r. An automaton is
 * k-reversible when no state is k-irreversible, and a language is k-reversible
 * when some DFA accepting it is. The language degree is read off the minimal
 * DFA through its forbidden patterns, located with the pattern NFA.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "algorithms.hpp"
#include "automaton.hpp"
#include "degree.hpp"
#include "pattern_nfa.hpp"
#include "scc.hpp"
#include "witness.hpp"

namespace revauto {

/// Raised by brute_force_k_irreversible() when |Σ|^(k-1) exceeds its enumeration guard.
class EnumerationLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

namespace detail {

/**
 * Longest backward path from each seed pair in the pairwise reverse product.
 *
 * Nodes are unordered pairs {s, t}, s != t; {s, t} --c--> {s', t'} whenever
 * δ(s', c) = s and δ(t', c) = t. Determinism keeps s' != t'.
 */
class BackwardPairProduct {
public:
    explicit BackwardPairProduct(const Dfa& a) : a_(a), rev_(reverse(a)) {}

    /// Registers the pairs of distinct σ-predecessors of r and returns their node ids.
    std::vector<std::uint32_t> seed(StateId r) {
        std::vector<std::uint32_t> seeds;
        for (SymbolId s = 0; s < a_.num_symbols(); ++s) {
            const auto& preds = rev_.next(r, s);
            for (std::size_t i = 0; i < preds.size(); ++i) {
                for (std::size_t j = i + 1; j < preds.size(); ++j) seeds.push_back(intern(preds[i], preds[j]));
            }
        }
        return seeds;
    }

    /// Expands every registered node and returns longest path lengths (nullopt = unbounded).
    std::vector<std::optional<std::size_t>> solve() {
        for (std::uint32_t node = 0; node < pairs_.size(); ++node) {
            auto [s, t] = pairs_[node];
            std::vector<std::uint32_t> out;
            for (SymbolId c = 0; c < a_.num_symbols(); ++c) {
                for (StateId s2 : rev_.next(s, c)) {
                    for (StateId t2 : rev_.next(t, c)) out.push_back(intern(s2, t2));
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            adj_[node] = std::move(out);
        }
        return longest_paths(adj_);
    }

private:
    std::uint32_t intern(StateId s, StateId t) {
        if (s > t) std::swap(s, t);
        std::uint64_t key = (static_cast<std::uint64_t>(s) << 32) | t;
        auto [it, fresh] = ids_.emplace(key, static_cast<std::uint32_t>(pairs_.size()));
        if (fresh) {
            pairs_.emplace_back(s, t);
            adj_.emplace_back();
        }
        return it->second;
    }

    const Dfa& a_;
    Nfa rev_;
    std::unordered_map<std::uint64_t, std::uint32_t> ids_;
    std::vector<std::pair<StateId, StateId>> pairs_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

inline Degree height_from(const std::vector<std::uint32_t>& seeds, const std::vector<std::optional<std::size_t>>& len) {
    if (seeds.empty()) return Degree::zero();
    std::size_t best = 0;
    for (auto s : seeds) {
        if (!len[s]) return Degree::infinite();
        best = std::max(best, *len[s]);
    }
    return Degree::finite(best + 1);
}

} // namespace detail

/**
 * Largest k for which r is k-irreversible: Zero when r is reversible,
 * Finite(m) when r is m-irreversible but (m+1)-reversible, Infinite when r is
 * k-irreversible for every k.
 */
inline Degree state_irr_height(const Dfa& a, StateId r) {
    if (r >= a.num_states()) throw std::out_of_range("unknown state id " + std::to_string(r));
    detail::BackwardPairProduct product(a);
    auto seeds = product.seed(r);
    auto len = product.solve();
    return detail::height_from(seeds, len);
}

inline Degree state_irr_height(const Dfa& a, std::string_view state) {
    auto r = a.find_state(state);
    if (!r) throw std::out_of_range("unknown state '" + std::string(state) + "'");
    return state_irr_height(a, *r);
}

/// state_irr_height() for every state, sharing one product.
inline std::vector<Degree> state_irr_heights(const Dfa& a) {
    detail::BackwardPairProduct product(a);
    std::vector<std::vector<std::uint32_t>> seeds;
    for (StateId r = 0; r < a.num_states(); ++r) seeds.push_back(product.seed(r));
    auto len = product.solve();
    std::vector<Degree> out;
    out.reserve(seeds.size());
    for (const auto& s : seeds) out.push_back(detail::height_from(s, len));
    return out;
}

/// Transition graph is a tree rooted at the initial state (every state reachable).
inline bool is_tree(const Dfa& a) {
    std::vector<std::size_t> indegree(a.num_states(), 0);
    for (StateId t : a.table()) {
        if (t != kNoState) ++indegree[t];
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (indegree[q] != (q == a.initial() ? 0U : 1U)) return false;
    }
    return bfs_order(a).size() == a.num_states();
}

/**
 * Minimal k >= 1 such that every state of the automaton (taken as given) is
 * k-reversible; Zero when the transition graph is a tree.
 */
inline Degree automaton_degree(const Dfa& a) {
    if (is_tree(a)) return Degree::zero();
    std::size_t worst = 0;
    for (const Degree& h : state_irr_heights(a)) {
        if (h.is_infinite()) return Degree::infinite();
        if (h.is_finite()) worst = std::max(worst, h.value());
    }
    return Degree::finite(worst + 1);
}

namespace detail {

struct PatternPath {
    StateId anchor = kNoState;
    Word labels;  // as read by the pattern NFA
    PatternNfa::NodeId end = 0;
};

/**
 * Lexicographically least label sequence of length `length` starting at a
 * diagonal node; ends at the least node id among those reached.
 * Requires some diagonal node with longest path >= length.
 */
inline PatternPath least_path(const PatternNfa& nfa, const std::vector<std::optional<std::size_t>>& len,
                              std::size_t length) {
    using NodeId = PatternNfa::NodeId;
    auto long_enough = [&](NodeId v, std::size_t need) { return !len[v] || *len[v] >= need; };

    // layers[i] holds (node, index of its parent in layers[i-1]).
    std::vector<std::vector<std::pair<NodeId, std::size_t>>> layers(1);
    for (NodeId r = 0; r < nfa.num_base_states(); ++r) {
        if (long_enough(r, length)) layers[0].emplace_back(r, 0);
    }
    if (layers[0].empty()) throw std::logic_error("no pattern path of the requested length");

    Word labels;
    std::vector<bool> seen(nfa.num_nodes(), false);
    for (std::size_t step = 0; step < length; ++step) {
        const std::size_t remaining = length - step - 1;
        std::vector<std::pair<NodeId, std::size_t>> next;
        for (SymbolId a = 0; a < nfa.num_symbols() && next.empty(); ++a) {
            for (std::size_t i = 0; i < layers.back().size(); ++i) {
                for (NodeId w : nfa.successors(layers.back()[i].first, a)) {
                    if (seen[w] || !long_enough(w, remaining)) continue;
                    seen[w] = true;
                    next.emplace_back(w, i);
                }
            }
            if (!next.empty()) labels.push_back(a);
        }
        for (const auto& e : next) seen[e.first] = false;
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
    }

    PatternPath path;
    path.labels = std::move(labels);
    path.end = layers.back().front().first;
    std::size_t idx = 0;
    for (std::size_t layer = layers.size() - 1; layer > 0; --layer) idx = layers[layer][idx].second;
    path.anchor = layers[0][idx].first;
    return path;
}

/// Converts a pattern-NFA path (anchor r, labels z, end (p, q)) to a forbidden pattern.
inline ForbiddenPatternWitness to_witness(const Dfa& m, StateId anchor, const Word& labels, StateId p, StateId q) {
    ForbiddenPatternWitness w;
    w.p = p;
    w.q = q;
    w.r = anchor;
    w.sigma = labels.front();
    w.x.assign(labels.rbegin(), labels.rend() - 1);
    w.w = shortest_word(m, anchor, q).value();
    return w;
}

struct PatternAnalysis {
    PatternNfa nfa;
    std::vector<std::optional<std::size_t>> len;

    explicit PatternAnalysis(const Dfa& m) : nfa(build_pattern_nfa(m)), len(longest_paths(nfa.adjacency())) {}

    /// Longest word length over the diagonal, nullopt if unbounded.
    [[nodiscard]] std::optional<std::size_t> longest() const {
        std::size_t best = 0;
        for (PatternNfa::NodeId r = 0; r < nfa.num_base_states(); ++r) {
            if (!len[r]) return std::nullopt;
            best = std::max(best, *len[r]);
        }
        return best;
    }
};

} // namespace detail

/**
 * The k-forbidden pattern with the lexicographically least pattern-NFA label
 * sequence, if one exists. `m` should be minimal for the answer to speak about
 * the language; the search itself is valid for any DFA.
 */
inline std::optional<ForbiddenPatternWitness> has_k_forbidden_pattern(const Dfa& m, std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    detail::PatternAnalysis analysis(m);
    auto longest = analysis.longest();
    if (longest && *longest < k) return std::nullopt;
    auto path = detail::least_path(analysis.nfa, analysis.len, k);
    auto [p, q] = analysis.nfa.pair(path.end);
    return detail::to_witness(m, path.anchor, path.labels, p, q);
}

/**
 * Expands a pump certificate to the forbidden pattern of length
 * |stem| + reps·|cycle|.
 */
inline ForbiddenPatternWitness expand_certificate(const Dfa& m, const PumpCertificate& cert, std::size_t reps) {
    Word labels = cert.stem;
    for (std::size_t i = 0; i < reps; ++i) labels.insert(labels.end(), cert.cycle.begin(), cert.cycle.end());
    if (labels.empty()) throw std::invalid_argument("certificate expansion is empty");
    PatternNfa nfa = build_pattern_nfa(m);
    auto ends = nfa.read(cert.anchor, labels);
    if (ends.empty()) throw std::invalid_argument("certificate does not describe a pattern-NFA path");
    auto [p, q] = nfa.pair(ends.front());
    return detail::to_witness(m, cert.anchor, labels, p, q);
}

/// Forbidden pattern of exactly `length` symbols read along the certificate's lasso.
inline ForbiddenPatternWitness certificate_witness(const Dfa& m, const PumpCertificate& cert, std::size_t length) {
    if (length < 1) throw std::invalid_argument("length must be at least 1");
    Word labels;
    for (std::size_t i = 0; i < length; ++i) {
        labels.push_back(i < cert.stem.size() ? cert.stem[i]
                                              : cert.cycle.at((i - cert.stem.size()) % cert.cycle.size()));
    }
    PatternNfa nfa = build_pattern_nfa(m);
    auto ends = nfa.read(cert.anchor, labels);
    if (ends.empty()) throw std::invalid_argument("certificate does not describe a pattern-NFA path");
    auto [p, q] = nfa.pair(ends.front());
    return detail::to_witness(m, cert.anchor, labels, p, q);
}

struct LanguageAnalysis {
    Degree degree = Degree::zero();
    /// The trimmed minimal DFA the degree and witness refer to.
    Dfa minimal;
    std::optional<Witness> witness;
    /// Nodes of the pattern NFA (0 when the language is finite).
    std::size_t pattern_nodes = 0;
};

namespace detail {

/// Shortest stem to the first cyclic node, then the shortest cycle through it.
inline PumpCertificate find_certificate(const PatternNfa& nfa, const std::vector<std::optional<std::size_t>>& len) {
    using NodeId = PatternNfa::NodeId;
    SccIndex scc = scc_decompose(nfa.adjacency());
    auto on_cycle = [&](NodeId v) { return scc.cyclic[scc.component_of[v]]; };

    NodeId anchor = 0;
    while (len[anchor]) ++anchor;

    std::unordered_map<NodeId, std::pair<NodeId, SymbolId>> parent;
    auto word_to = [&](NodeId from, NodeId v) {
        Word w;
        for (; v != from; v = parent.at(v).first) w.push_back(parent.at(v).second);
        std::reverse(w.begin(), w.end());
        return w;
    };

    // Stem: breadth-first from the anchor to the first node lying on a cycle.
    NodeId entry = anchor;
    {
        std::deque<NodeId> queue{anchor};
        std::vector<bool> seen(nfa.num_nodes(), false);
        seen[anchor] = true;
        while (!queue.empty() && !on_cycle(queue.front())) {
            NodeId v = queue.front();
            queue.pop_front();
            for (SymbolId a = 0; a < nfa.num_symbols(); ++a) {
                for (NodeId u : nfa.successors(v, a)) {
                    if (seen[u]) continue;
                    seen[u] = true;
                    parent[u] = {v, a};
                    queue.push_back(u);
                }
            }
        }
        if (queue.empty()) throw std::logic_error("pattern NFA has no reachable cycle");
        entry = queue.front();
    }
    Word stem = word_to(anchor, entry);

    // Cycle: breadth-first from the entry until an edge closes back on it.
    parent.clear();
    std::deque<NodeId> queue{entry};
    std::vector<bool> seen(nfa.num_nodes(), false);
    seen[entry] = true;
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (SymbolId a = 0; a < nfa.num_symbols(); ++a) {
            for (NodeId u : nfa.successors(v, a)) {
                if (u == entry) {
                    Word cycle = word_to(entry, v);
                    cycle.push_back(a);
                    return PumpCertificate{static_cast<StateId>(anchor), std::move(stem), std::move(cycle)};
                }
                if (seen[u]) continue;
                seen[u] = true;
                parent[u] = {v, a};
                queue.push_back(u);
            }
        }
    }
    throw std::logic_error("cycle search failed");
}

} // namespace detail

/**
 * Degree of the language accepted by `a`, decided on its minimal DFA.
 *
 * Zero for finite languages; otherwise Finite(ℓ+1) where ℓ is the longest word
 * of the pattern NFA, or Infinite when that NFA has a reachable cycle. The
 * witness is the maximal forbidden pattern (none for Finite(1)) or a pump
 * certificate.
 */
inline LanguageAnalysis language_degree(const Dfa& a) {
    LanguageAnalysis out{Degree::zero(), minimize(a), std::nullopt, 0};
    const Dfa& m = out.minimal;
    if (scc_decompose(m).acyclic()) return out;

    detail::PatternAnalysis analysis(m);
    out.pattern_nodes = analysis.nfa.num_nodes();
    auto longest = analysis.longest();
    if (!longest) {
        out.degree = Degree::infinite();
        out.witness = detail::find_certificate(analysis.nfa, analysis.len);
        return out;
    }
    out.degree = Degree::finite(*longest + 1);
    if (*longest >= 1) {
        auto path = detail::least_path(analysis.nfa, analysis.len, *longest);
        auto [p, q] = analysis.nfa.pair(path.end);
        out.witness = detail::to_witness(m, path.anchor, path.labels, p, q);
    }
    return out;
}

/// (n² - n)/2 + 1 for an n-state minimal DFA.
inline std::size_t strong_irreversibility_bound(std::size_t n) { return (n * n - n) / 2 + 1; }

/**
 * True iff the pattern NFA of `m` accepts a word of length (n² - n)/2 + 1,
 * by layered reachability without cycle detection.
 */
inline bool strong_via_bound(const Dfa& m) {
    PatternNfa nfa = build_pattern_nfa(m);
    const std::size_t bound = strong_irreversibility_bound(m.num_states());
    std::vector<bool> layer(nfa.num_nodes(), false);
    for (PatternNfa::NodeId r = 0; r < nfa.num_base_states(); ++r) layer[r] = true;
    for (std::size_t step = 0; step < bound; ++step) {
        std::vector<bool> next(nfa.num_nodes(), false);
        bool any = false;
        for (PatternNfa::NodeId v = 0; v < nfa.num_nodes(); ++v) {
            if (!layer[v]) continue;
            for (SymbolId a = 0; a < nfa.num_symbols(); ++a) {
                for (auto u : nfa.successors(v, a)) next[u] = any = true;
            }
        }
        if (!any) return false;
        layer = std::move(next);
    }
    return true;
}

inline constexpr double kBruteForceLimit = 1e6;

/**
 * Literal check of k-irreversibility of r: enumerates every x of length k-1
 * and σ, collecting {δ(p,x) | δ(p,xσ) = r}.
 */
inline bool brute_force_k_irreversible(const Dfa& a, StateId r, std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (r >= a.num_states()) throw std::out_of_range("unknown state id " + std::to_string(r));
    const std::size_t sigma = a.num_symbols();
    if (std::pow(static_cast<double>(sigma), static_cast<double>(k - 1)) > kBruteForceLimit) {
        throw EnumerationLimitError("|Σ|^(k-1) exceeds the brute-force enumeration limit");
    }
    if (sigma == 0) return false;
    Word x(k - 1, 0);
    while (true) {
        for (SymbolId s = 0; s < sigma; ++s) {
            StateId first = kNoState;
            for (StateId p = 0; p < a.num_states(); ++p) {
                StateId px = a.run(p, x);
                if (px == kNoState || a.next(px, s) != r) continue;
                if (first == kNoState) {
                    first = px;
                } else if (px != first) {
                    return true;
                }
            }
        }
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == sigma) x[i++] = 0;
        if (i == x.size()) break;
    }
    return false;
}

} // namespace revauto
