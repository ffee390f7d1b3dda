#pragma once

/**
 * @file automaton.hpp
 * @brief Deterministic and nondeterministic finite automata over named states and symbols.
 *
 * States and symbols are dense indices. Names are kept alongside so that every
 * automaton can be serialized and rendered without a side table. Transition
 * functions are partial: a missing DFA transition is kNoState and no dead sink
 * is ever added implicitly.
 *
 * Symbol indices always follow the lexicographic order of the symbol names, so
 * "lexicographically least word" means the same thing on indices and on text.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revauto {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;
using Word = std::vector<SymbolId>;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// Raised when an automaton would violate its structural invariants.
class AutomatonError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void check_unique_names(const std::vector<std::string>& names, const char* what) {
    std::vector<std::string_view> sorted(names.begin(), names.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw AutomatonError(std::string("duplicate ") + what + " '" + std::string(*dup) + "'");
    }
}

inline std::optional<std::uint32_t> index_of(const std::vector<std::string>& names, std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - names.begin());
}

} // namespace detail

/**
 * A DFA with a partial transition function.
 *
 * The alphabet must be strictly sorted. The transition table is row-major,
 * `table[state * num_symbols() + symbol]`, with kNoState for undefined moves.
 */
class Dfa {
public:
    Dfa(std::vector<std::string> state_names, std::vector<std::string> alphabet, StateId initial,
        std::vector<bool> finals, std::vector<StateId> table)
        : names_(std::move(state_names)), alphabet_(std::move(alphabet)), initial_(initial),
          finals_(std::move(finals)), table_(std::move(table)) {
        if (names_.empty()) throw AutomatonError("a DFA needs at least one state");
        if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
            std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
            throw AutomatonError("DFA alphabet must be strictly sorted");
        }
        detail::check_unique_names(names_, "state");
        if (initial_ >= names_.size()) throw AutomatonError("initial state out of range");
        if (finals_.size() != names_.size()) throw AutomatonError("final flags do not match state count");
        if (table_.size() != names_.size() * alphabet_.size()) {
            throw AutomatonError("transition table does not match states x symbols");
        }
        for (StateId t : table_) {
            if (t != kNoState && t >= names_.size()) throw AutomatonError("transition target out of range");
        }
    }

    [[nodiscard]] std::size_t num_states() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t num_symbols() const noexcept { return alphabet_.size(); }
    [[nodiscard]] StateId initial() const noexcept { return initial_; }
    [[nodiscard]] bool is_final(StateId q) const { return finals_.at(q); }
    [[nodiscard]] const std::vector<bool>& finals() const noexcept { return finals_; }

    [[nodiscard]] StateId next(StateId q, SymbolId a) const noexcept {
        return table_[static_cast<std::size_t>(q) * alphabet_.size() + a];
    }

    /// State reached from q on w, or kNoState if some move is undefined.
    [[nodiscard]] StateId run(StateId q, std::span<const SymbolId> w) const noexcept {
        for (SymbolId a : w) {
            if (q == kNoState) break;
            q = next(q, a);
        }
        return q;
    }

    [[nodiscard]] bool accepts(std::span<const SymbolId> w) const noexcept {
        StateId q = run(initial_, w);
        return q != kNoState && finals_[q];
    }

    [[nodiscard]] const std::string& state_name(StateId q) const { return names_.at(q); }
    [[nodiscard]] const std::vector<std::string>& state_names() const noexcept { return names_; }
    [[nodiscard]] const std::string& symbol(SymbolId a) const { return alphabet_.at(a); }
    [[nodiscard]] const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] const std::vector<StateId>& table() const noexcept { return table_; }

    [[nodiscard]] std::optional<StateId> find_state(std::string_view name) const {
        return detail::index_of(names_, name);
    }
    [[nodiscard]] std::optional<SymbolId> find_symbol(std::string_view name) const {
        auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), name);
        if (it == alphabet_.end() || *it != name) return std::nullopt;
        return static_cast<SymbolId>(it - alphabet_.begin());
    }

    [[nodiscard]] std::size_t num_transitions() const noexcept {
        return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(),
                                                      [](StateId t) { return t != kNoState; }));
    }

private:
    std::vector<std::string> names_;
    std::vector<std::string> alphabet_;
    StateId initial_;
    std::vector<bool> finals_;
    std::vector<StateId> table_;
};

/**
 * Incremental, name-based construction of a Dfa.
 *
 * Symbols may be added in any order; build() sorts them and remaps the table.
 * States keep their insertion order.
 */
class DfaBuilder {
public:
    SymbolId add_symbol(const std::string& name) {
        if (auto it = symbols_.find(name); it != symbols_.end()) return it->second;
        auto id = static_cast<SymbolId>(symbol_names_.size());
        symbols_.emplace(name, id);
        symbol_names_.push_back(name);
        for (auto& row : rows_) row.push_back(kNoState);
        return id;
    }

    StateId add_state(const std::string& name, bool final = false) {
        if (states_.count(name) != 0) throw AutomatonError("duplicate state '" + name + "'");
        auto id = static_cast<StateId>(state_names_.size());
        states_.emplace(name, id);
        state_names_.push_back(name);
        finals_.push_back(final);
        rows_.emplace_back(symbol_names_.size(), kNoState);
        return id;
    }

    [[nodiscard]] std::optional<StateId> find_state(const std::string& name) const {
        auto it = states_.find(name);
        if (it == states_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::optional<SymbolId> find_symbol(const std::string& name) const {
        auto it = symbols_.find(name);
        if (it == symbols_.end()) return std::nullopt;
        return it->second;
    }

    void set_initial(StateId q) { initial_ = q; }
    void set_final(StateId q, bool final = true) { finals_.at(q) = final; }

    /// Adds q --a--> p. Throws if (q, a) already has a different or equal target.
    void add_transition(StateId q, SymbolId a, StateId p) {
        StateId& slot = rows_.at(q).at(a);
        if (slot != kNoState) {
            throw AutomatonError("nondeterministic transition from '" + state_names_[q] + "' on '" +
                                 symbol_names_[a] + "'");
        }
        slot = p;
    }

    /// Convenience: creates states and symbols on first use.
    void add_transition(const std::string& q, const std::string& a, const std::string& p) {
        auto qs = find_state(q) ? *find_state(q) : add_state(q);
        auto ps = find_state(p) ? *find_state(p) : add_state(p);
        add_transition(qs, add_symbol(a), ps);
    }

    [[nodiscard]] Dfa build() const {
        if (!initial_) throw AutomatonError("DFA has no initial state");
        std::vector<SymbolId> order(symbol_names_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<SymbolId>(i);
        std::sort(order.begin(), order.end(),
                  [&](SymbolId x, SymbolId y) { return symbol_names_[x] < symbol_names_[y]; });
        std::vector<std::string> alphabet;
        alphabet.reserve(order.size());
        for (SymbolId old : order) alphabet.push_back(symbol_names_[old]);
        std::vector<StateId> table;
        table.reserve(rows_.size() * order.size());
        for (const auto& row : rows_) {
            for (SymbolId old : order) table.push_back(row[old]);
        }
        return Dfa(state_names_, std::move(alphabet), *initial_, finals_, std::move(table));
    }

private:
    std::map<std::string, SymbolId> symbols_;
    std::vector<std::string> symbol_names_;
    std::map<std::string, StateId> states_;
    std::vector<std::string> state_names_;
    std::vector<bool> finals_;
    std::vector<std::vector<StateId>> rows_;
    std::optional<StateId> initial_;
};

/**
 * An epsilon-free NFA with a set of initial states.
 *
 * `delta[state][symbol]` is a sorted, duplicate-free target list.
 */
class Nfa {
public:
    using Targets = std::vector<StateId>;

    Nfa(std::vector<std::string> state_names, std::vector<std::string> alphabet, std::vector<bool> initials,
        std::vector<bool> finals, std::vector<std::vector<Targets>> delta)
        : names_(std::move(state_names)), alphabet_(std::move(alphabet)), initials_(std::move(initials)),
          finals_(std::move(finals)), delta_(std::move(delta)) {
        const std::size_t n = names_.size();
        if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
            std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
            throw AutomatonError("NFA alphabet must be strictly sorted");
        }
        detail::check_unique_names(names_, "state");
        if (initials_.size() != n || finals_.size() != n || delta_.size() != n) {
            throw AutomatonError("NFA components do not match state count");
        }
        for (auto& row : delta_) {
            if (row.size() != alphabet_.size()) throw AutomatonError("NFA row does not match alphabet");
            for (auto& targets : row) {
                std::sort(targets.begin(), targets.end());
                targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
                if (!targets.empty() && targets.back() >= n) throw AutomatonError("NFA target out of range");
            }
        }
    }

    [[nodiscard]] std::size_t num_states() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t num_symbols() const noexcept { return alphabet_.size(); }
    [[nodiscard]] const Targets& next(StateId q, SymbolId a) const { return delta_[q][a]; }
    [[nodiscard]] bool is_initial(StateId q) const { return initials_.at(q); }
    [[nodiscard]] bool is_final(StateId q) const { return finals_.at(q); }
    [[nodiscard]] const std::vector<bool>& initials() const noexcept { return initials_; }
    [[nodiscard]] const std::vector<bool>& finals() const noexcept { return finals_; }
    [[nodiscard]] const std::string& state_name(StateId q) const { return names_.at(q); }
    [[nodiscard]] const std::vector<std::string>& state_names() const noexcept { return names_; }
    [[nodiscard]] const std::string& symbol(SymbolId a) const { return alphabet_.at(a); }
    [[nodiscard]] const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }

    [[nodiscard]] std::optional<StateId> find_state(std::string_view name) const {
        return detail::index_of(names_, name);
    }

    /// Direct subset simulation.
    [[nodiscard]] bool accepts(std::span<const SymbolId> w) const {
        std::vector<bool> current = initials_;
        for (SymbolId a : w) {
            std::vector<bool> next_set(names_.size(), false);
            bool any = false;
            for (StateId q = 0; q < names_.size(); ++q) {
                if (!current[q]) continue;
                for (StateId p : delta_[q][a]) next_set[p] = any = true;
            }
            if (!any) return false;
            current = std::move(next_set);
        }
        for (StateId q = 0; q < names_.size(); ++q) {
            if (current[q] && finals_[q]) return true;
        }
        return false;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::string> alphabet_;
    std::vector<bool> initials_;
    std::vector<bool> finals_;
    std::vector<std::vector<Targets>> delta_;
};

/// Renders a word over the automaton's alphabet. Single-character alphabets are
/// concatenated, longer symbol names are separated by spaces; the empty word is "ε".
inline std::string render_word(const std::vector<std::string>& alphabet, std::span<const SymbolId> w) {
    if (w.empty()) return "ε";
    bool compact = std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i != 0) out += ' ';
        out += alphabet.at(w[i]);
    }
    return out;
}

/// Parses a word written with one character per symbol (or "_" / "" for the empty word).
inline Word parse_compact_word(const std::vector<std::string>& alphabet, std::string_view text) {
    Word w;
    if (text == "_") return w;
    for (char c : text) {
        std::string s(1, c);
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
        if (it == alphabet.end() || *it != s) throw AutomatonError("symbol '" + s + "' not in alphabet");
        w.push_back(static_cast<SymbolId>(it - alphabet.begin()));
    }
    return w;
}

} // namespace revauto
