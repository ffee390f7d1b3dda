#pragma once

/**
 * @file construct.hpp
 * @brief Simulation of a DFA by an equivalent k-reversible DFA.
 *
 * A simulating state ⟨q, j, α⟩ holds the simulated state q, a counter j in
 * [1, k] of the steps spent in q's SCC (saturating at k), and the history α
 * of (state, counter) pairs recorded whenever the simulation left an SCC.
 * When the input has no k-forbidden pattern the result is k-reversible.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algorithms.hpp"
#include "automaton.hpp"
#include "reversibility.hpp"
#include "scc.hpp"
#include "witness.hpp"

namespace revauto {

struct SimState {
    StateId q = 0;
    std::size_t counter = 1;
    std::vector<std::pair<StateId, std::size_t>> history;

    auto operator<=>(const SimState&) const = default;
    bool operator==(const SimState&) const = default;
};

/// One move of the simulation; nullopt when δ(q, a) is undefined.
inline std::optional<SimState> sim_step(const SimState& s, SymbolId a, const Dfa& base, const SccIndex& scc,
                                        std::size_t k) {
    StateId p = base.next(s.q, a);
    if (p == kNoState) return std::nullopt;
    if (scc.same_component(p, s.q)) return SimState{p, std::min(s.counter + 1, k), s.history};
    SimState out{p, 1, s.history};
    out.history.emplace_back(s.q, s.counter);
    return out;
}

/// The history's components strictly increase in the SCC order and all precede q's component.
inline bool history_is_ordered(const SimState& s, const SccIndex& scc) {
    for (std::size_t i = 0; i < s.history.size(); ++i) {
        ComponentId here = scc.component_of.at(s.history[i].first);
        ComponentId after = i + 1 < s.history.size() ? scc.component_of.at(s.history[i + 1].first)
                                                     : scc.component_of.at(s.q);
        if (!scc.precedes(here, after)) return false;
    }
    return true;
}

/// `q#j#[(p1,j1),(p2,j2)]` with base state names.
inline std::string sim_state_name(const SimState& s, const Dfa& base) {
    std::string out = base.state_name(s.q) + "#" + std::to_string(s.counter) + "#[";
    for (std::size_t i = 0; i < s.history.size(); ++i) {
        if (i != 0) out += ',';
        out += "(" + base.state_name(s.history[i].first) + "," + std::to_string(s.history[i].second) + ")";
    }
    return out + "]";
}

/// (k+1)^n, saturated at the largest std::uint64_t.
inline std::uint64_t simulation_state_bound(std::size_t k, std::size_t n) {
    std::uint64_t bound = 1;
    const std::uint64_t base = k + 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (bound > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        bound *= base;
    }
    return bound;
}

/// The input has a k-forbidden pattern, so the simulation would not be k-reversible.
class ForbiddenPatternError : public std::runtime_error {
public:
    ForbiddenPatternError(std::size_t k, ForbiddenPatternWitness witness)
        : std::runtime_error("automaton contains a " + std::to_string(k) + "-forbidden pattern"), k_(k),
          witness_(std::move(witness)) {}

    [[nodiscard]] std::size_t k() const noexcept { return k_; }
    [[nodiscard]] const ForbiddenPatternWitness& witness() const noexcept { return witness_; }

private:
    std::size_t k_;
    ForbiddenPatternWitness witness_;
};

struct ConstructOptions {
    /// Build even when the precheck finds a k-forbidden pattern.
    bool force = false;
    /// Verify the history ordering of every materialized state.
    bool check_history = false;
    /// Abort with std::length_error beyond this many states.
    std::size_t max_states = std::size_t{1} << 22;
};

struct Construction {
    Dfa automaton;
    /// The trimmed input the simulation replays.
    Dfa base;
    /// states[i] is the simulating state of automaton state i.
    std::vector<SimState> states;
    /// Present when the precheck found a pattern and the build was forced.
    std::optional<ForbiddenPatternWitness> pattern;
    std::uint64_t state_bound = 0;

    /// The precheck passed (no k-forbidden pattern in the input).
    [[nodiscard]] bool guaranteed() const noexcept { return !pattern.has_value(); }
};

/**
 * Breadth-first materialization of the simulation from ⟨q_I, 1, ε⟩.
 *
 * The input is trimmed first. Throws std::invalid_argument for k < 1 and
 * ForbiddenPatternError when the input has a k-forbidden pattern, unless
 * options.force is set.
 */
inline Construction construct_k_reversible(const Dfa& input, std::size_t k, const ConstructOptions& options = {}) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    Dfa base = trim(input);
    std::optional<ForbiddenPatternWitness> pattern = has_k_forbidden_pattern(base, k);
    if (pattern && !options.force) throw ForbiddenPatternError(k, *pattern);

    SccIndex scc = scc_decompose(base);
    std::map<SimState, StateId> ids;
    std::vector<SimState> states;
    std::vector<StateId> table;
    auto intern = [&](SimState s) {
        auto [it, fresh] = ids.emplace(s, static_cast<StateId>(states.size()));
        if (fresh) {
            if (states.size() >= options.max_states) throw std::length_error("simulation exceeds the state limit");
            if (options.check_history && !history_is_ordered(s, scc)) {
                throw std::logic_error("simulation history out of SCC order");
            }
            states.push_back(std::move(s));
        }
        return it->second;
    };
    intern(SimState{base.initial(), 1, {}});
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (SymbolId a = 0; a < base.num_symbols(); ++a) {
            auto next = sim_step(states[i], a, base, scc, k);
            table.push_back(next ? intern(std::move(*next)) : kNoState);
        }
    }

    std::vector<std::string> names;
    std::vector<bool> finals;
    for (const auto& s : states) {
        names.push_back(sim_state_name(s, base));
        finals.push_back(base.is_final(s.q));
    }
    Dfa automaton(std::move(names), base.alphabet(), 0, std::move(finals), std::move(table));
    std::uint64_t bound = simulation_state_bound(k, base.num_states());
    return Construction{std::move(automaton), std::move(base), std::move(states), std::move(pattern), bound};
}

} // namespace revauto
