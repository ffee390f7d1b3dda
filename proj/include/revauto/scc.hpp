#pragma once

/**
 * @file scc.hpp
 * @brief Strongly connected components, their reachability order, and
 *        longest paths in graphs that may contain cycles.
 *
 * Graphs are plain adjacency lists: any random-access range of ranges of
 * integral vertex ids. Automata are adapted with adjacency().
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <utility>
#include <vector>

#include "automaton.hpp"

namespace revauto {

using ComponentId = std::uint32_t;

template <typename G>
concept AdjacencyGraph = std::ranges::random_access_range<G> && requires(const G& g, std::size_t v) {
    { std::ranges::size(g) } -> std::convertible_to<std::size_t>;
    requires std::ranges::input_range<decltype(g[v])>;
};

/**
 * SCC partition of a directed graph.
 *
 * Components are numbered in a topological order of the condensation: if a
 * state of C2 is reachable from C1 and C1 != C2, then C1 < C2. Hence the
 * strict order C1 ≺ C2 always implies component id C1 < C2.
 */
struct SccIndex {
    std::vector<ComponentId> component_of;
    std::vector<std::vector<StateId>> components;
    /// Direct edges of the condensation DAG, sorted.
    std::vector<std::vector<ComponentId>> successors;
    /// cyclic[c]: the component contains at least one edge (size > 1 or a self-loop).
    std::vector<bool> cyclic;
    /// reaches[c1][c2]: c2 is reachable from c1 through at least one edge.
    std::vector<std::vector<bool>> reaches;

    [[nodiscard]] std::size_t size() const noexcept { return components.size(); }

    [[nodiscard]] bool same_component(StateId p, StateId q) const {
        return component_of.at(p) == component_of.at(q);
    }

    /// Strict order: c1 ≺ c2.
    [[nodiscard]] bool precedes(ComponentId c1, ComponentId c2) const {
        return c1 != c2 && reaches.at(c1).at(c2);
    }

    [[nodiscard]] bool acyclic() const {
        for (bool c : cyclic) {
            if (c) return false;
        }
        return true;
    }
};

/// Tarjan's algorithm, iterative so deep automata do not exhaust the call stack.
template <AdjacencyGraph G>
SccIndex scc_decompose(const G& graph) {
    constexpr std::uint32_t kUnvisited = UINT32_MAX;
    const std::size_t n = std::ranges::size(graph);

    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<StateId>> found;  // reverse topological order
    std::uint32_t counter = 0;

    struct Frame {
        std::uint32_t v;
        std::vector<std::uint32_t> succ;
        std::size_t pos;
    };
    auto make_frame = [&](std::uint32_t v) {
        Frame f{v, {}, 0};
        for (auto w : graph[v]) f.succ.push_back(static_cast<std::uint32_t>(w));
        return f;
    };

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        std::vector<Frame> call;
        call.push_back(make_frame(root));
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            if (f.pos < f.succ.size()) {
                std::uint32_t w = f.succ[f.pos++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back(make_frame(w));
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::uint32_t v = f.v;
            if (low[v] == index[v]) {
                std::vector<StateId> comp;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) {
                std::uint32_t parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    SccIndex scc;
    scc.components.assign(found.rbegin(), found.rend());
    const std::size_t m = scc.components.size();
    scc.component_of.assign(n, 0);
    for (ComponentId c = 0; c < m; ++c) {
        for (StateId v : scc.components[c]) scc.component_of[v] = c;
    }
    scc.successors.assign(m, {});
    scc.cyclic.assign(m, false);
    for (std::size_t v = 0; v < n; ++v) {
        ComponentId cv = scc.component_of[v];
        if (scc.components[cv].size() > 1) scc.cyclic[cv] = true;
        for (auto w : graph[v]) {
            ComponentId cw = scc.component_of[static_cast<std::size_t>(w)];
            if (cw == cv) {
                scc.cyclic[cv] = true;
            } else {
                scc.successors[cv].push_back(cw);
            }
        }
    }
    for (auto& s : scc.successors) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    // Successors always have larger ids, so a reverse sweep closes reachability.
    scc.reaches.assign(m, std::vector<bool>(m, false));
    for (std::size_t c = m; c-- > 0;) {
        for (ComponentId d : scc.successors[c]) {
            scc.reaches[c][d] = true;
            for (std::size_t e = d + 1; e < m; ++e) {
                if (scc.reaches[d][e]) scc.reaches[c][e] = true;
            }
        }
    }
    return scc;
}

/// Underlying graph of a DFA (one edge per distinct target, labels dropped).
inline std::vector<std::vector<StateId>> adjacency(const Dfa& a) {
    std::vector<std::vector<StateId>> adj(a.num_states());
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            if (StateId p = a.next(q, s); p != kNoState) adj[q].push_back(p);
        }
        std::sort(adj[q].begin(), adj[q].end());
        adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
    }
    return adj;
}

inline std::vector<std::vector<StateId>> adjacency(const Nfa& a) {
    std::vector<std::vector<StateId>> adj(a.num_states());
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            const auto& t = a.next(q, s);
            adj[q].insert(adj[q].end(), t.begin(), t.end());
        }
        std::sort(adj[q].begin(), adj[q].end());
        adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
    }
    return adj;
}

inline SccIndex scc_decompose(const Dfa& a) { return scc_decompose(adjacency(a)); }
inline SccIndex scc_decompose(const Nfa& a) { return scc_decompose(adjacency(a)); }

/**
 * Length (in edges) of the longest path starting at each vertex.
 * nullopt marks vertices from which a cycle is reachable, i.e. paths of every length exist.
 */
template <AdjacencyGraph G>
std::vector<std::optional<std::size_t>> longest_paths(const G& graph) {
    SccIndex scc = scc_decompose(graph);
    const std::size_t n = std::ranges::size(graph);
    std::vector<std::optional<std::size_t>> length(n, std::size_t{0});
    for (std::size_t c = scc.size(); c-- > 0;) {
        if (scc.cyclic[c]) {
            for (StateId v : scc.components[c]) length[v] = std::nullopt;
            continue;
        }
        // Acyclic components are single vertices; their successors are already final.
        StateId v = scc.components[c].front();
        std::optional<std::size_t> best = 0;
        for (auto w : graph[v]) {
            const auto& lw = length[static_cast<std::size_t>(w)];
            if (!lw) {
                best = std::nullopt;
                break;
            }
            best = std::max(*best, *lw + 1);
        }
        length[v] = best;
    }
    return length;
}

} // namespace revauto
