#pragma once

/**
 * @file pattern_nfa.hpp
 * @brief The pattern NFA: product of the reverse automaton with its SCC-restricted copy.
 *
 * Nodes are pairs (u, v) of base states. From (u, v) on a, the NFA moves to
 * every (u', v') with δ(u', a) = u, δ(v', a) = v, v' in the SCC of v, and
 * u' != v'. Initial nodes are the diagonal pairs (r, r); every node is final.
 *
 * Orientation: a path from (r, r) to (p, q) reads z, and the forbidden
 * pattern word is the reversal of z. That is, δ(p, rev(z)) = δ(q, rev(z)) = r,
 * and q lies in the SCC of r. Only node lengths matter for degrees; witness
 * extraction reverses labels.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algorithms.hpp"
#include "automaton.hpp"
#include "scc.hpp"

namespace revauto {

class PatternNfa {
public:
    using NodeId = std::uint32_t;

    /// Materializes the part reachable from the diagonal. Node r is always the diagonal (r, r).
    static PatternNfa build(const Dfa& m) {
        PatternNfa out;
        const std::size_t n = m.num_states();
        const std::size_t k = m.num_symbols();
        out.base_states_ = n;
        out.num_symbols_ = k;
        Nfa rev = reverse(m);
        SccIndex scc = scc_decompose(m);

        auto intern = [&](StateId u, StateId v) {
            auto [it, fresh] = out.index_.emplace(key(u, v), static_cast<NodeId>(out.pairs_.size()));
            if (fresh) {
                out.pairs_.emplace_back(u, v);
                out.delta_.emplace_back(k);
            }
            return it->second;
        };
        for (StateId r = 0; r < n; ++r) intern(r, r);
        for (NodeId node = 0; node < out.pairs_.size(); ++node) {
            auto [u, v] = out.pairs_[node];
            for (SymbolId a = 0; a < k; ++a) {
                std::vector<NodeId> targets;
                for (StateId p : rev.next(u, a)) {
                    for (StateId q : rev.next(v, a)) {
                        if (p == q || !scc.same_component(q, v)) continue;
                        targets.push_back(intern(p, q));
                    }
                }
                std::sort(targets.begin(), targets.end());
                out.delta_[node][a] = std::move(targets);
            }
        }
        return out;
    }

    [[nodiscard]] std::size_t num_nodes() const noexcept { return pairs_.size(); }
    [[nodiscard]] std::size_t num_base_states() const noexcept { return base_states_; }
    [[nodiscard]] std::size_t num_symbols() const noexcept { return num_symbols_; }
    [[nodiscard]] std::pair<StateId, StateId> pair(NodeId node) const { return pairs_.at(node); }
    [[nodiscard]] const std::vector<NodeId>& successors(NodeId node, SymbolId a) const { return delta_.at(node).at(a); }
    [[nodiscard]] bool is_initial(NodeId node) const { return node < base_states_; }

    [[nodiscard]] std::optional<NodeId> find(StateId u, StateId v) const {
        auto it = index_.find(key(u, v));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::size_t num_transitions() const {
        std::size_t count = 0;
        for (const auto& row : delta_) {
            for (const auto& t : row) count += t.size();
        }
        return count;
    }

    /// Unlabelled successor lists, for graph algorithms.
    [[nodiscard]] std::vector<std::vector<NodeId>> adjacency() const {
        std::vector<std::vector<NodeId>> adj(pairs_.size());
        for (NodeId v = 0; v < pairs_.size(); ++v) {
            for (const auto& t : delta_[v]) adj[v].insert(adj[v].end(), t.begin(), t.end());
            std::sort(adj[v].begin(), adj[v].end());
            adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
        }
        return adj;
    }

    /// Nodes reachable from `start` by reading `word`.
    [[nodiscard]] std::vector<NodeId> read(NodeId start, std::span<const SymbolId> word) const {
        std::vector<NodeId> current{start};
        for (SymbolId a : word) {
            std::vector<NodeId> next;
            for (NodeId v : current) {
                const auto& t = delta_[v][a];
                next.insert(next.end(), t.begin(), t.end());
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            current = std::move(next);
            if (current.empty()) break;
        }
        return current;
    }

    /// As a plain Nfa with nodes named "(u,v)" after the base state names.
    [[nodiscard]] Nfa to_nfa(const Dfa& base) const {
        std::vector<std::string> names;
        for (auto [u, v] : pairs_) names.push_back("(" + base.state_name(u) + "," + base.state_name(v) + ")");
        std::vector<bool> initials(pairs_.size(), false);
        for (NodeId r = 0; r < base_states_; ++r) initials[r] = true;
        std::vector<std::vector<Nfa::Targets>> delta(pairs_.size());
        for (NodeId v = 0; v < pairs_.size(); ++v) {
            for (const auto& t : delta_[v]) delta[v].emplace_back(t.begin(), t.end());
        }
        return Nfa(std::move(names), base.alphabet(), std::move(initials), std::vector<bool>(pairs_.size(), true),
                   std::move(delta));
    }

private:
    static std::uint64_t key(StateId u, StateId v) { return (static_cast<std::uint64_t>(u) << 32) | v; }

    std::size_t base_states_ = 0;
    std::size_t num_symbols_ = 0;
    std::vector<std::pair<StateId, StateId>> pairs_;
    std::vector<std::vector<std::vector<NodeId>>> delta_;
    std::unordered_map<std::uint64_t, NodeId> index_;
};

inline PatternNfa build_pattern_nfa(const Dfa& m) { return PatternNfa::build(m); }

} // namespace revauto
