#pragma once

/**
 * @file io.hpp
 * @brief The line-oriented DFA text format and Graphviz export.
 *
 * DFA files are UTF-8 text. Blank lines are ignored and `#` starts a comment
 * when it begins a token. The required sections appear in this order, one
 * line each:
 *
 *     alphabet: a b
 *     states: q0 q1
 *     initial: q0
 *     final: q1            (the list may be empty)
 *
 * followed by any number of `trans: <state> <symbol> <state>` lines. Tokens
 * are whitespace separated and may be any non-whitespace strings.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "automaton.hpp"

namespace revauto {

class DfaFormatError : public std::runtime_error {
public:
    DfaFormatError(std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

    /// 1-based line number, 0 when the problem is not tied to a line.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

} // namespace detail

inline Dfa parse_dfa_file(std::string_view text) {
    static constexpr std::string_view kSections[] = {"alphabet:", "states:", "initial:", "final:"};
    std::vector<std::vector<std::string>> sections;
    DfaBuilder builder;
    std::set<std::string> alphabet;
    std::size_t line_no = 0;
    std::size_t begin = 0;

    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;

        auto tokens = detail::tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::string& key = tokens.front();
        std::vector<std::string> args(tokens.begin() + 1, tokens.end());

        if (sections.size() < std::size(kSections)) {
            const std::string_view expected = kSections[sections.size()];
            if (key != expected) {
                throw DfaFormatError(line_no, "expected section '" + std::string(expected) + "', found '" + key + "'");
            }
            switch (sections.size()) {
            case 0:
                for (const auto& s : args) {
                    if (!alphabet.insert(s).second) throw DfaFormatError(line_no, "duplicate symbol '" + s + "'");
                    builder.add_symbol(s);
                }
                break;
            case 1:
                if (args.empty()) throw DfaFormatError(line_no, "at least one state is required");
                for (const auto& s : args) {
                    if (builder.find_state(s)) throw DfaFormatError(line_no, "duplicate state '" + s + "'");
                    builder.add_state(s);
                }
                break;
            case 2: {
                if (args.size() != 1) throw DfaFormatError(line_no, "exactly one initial state is required");
                auto q = builder.find_state(args[0]);
                if (!q) throw DfaFormatError(line_no, "undeclared state '" + args[0] + "'");
                builder.set_initial(*q);
                break;
            }
            case 3:
                for (const auto& s : args) {
                    auto q = builder.find_state(s);
                    if (!q) throw DfaFormatError(line_no, "undeclared state '" + s + "'");
                    builder.set_final(*q);
                }
                break;
            }
            sections.push_back(std::move(args));
        } else if (key == "trans:") {
            if (args.size() != 3) throw DfaFormatError(line_no, "expected 'trans: <state> <symbol> <state>'");
            auto from = builder.find_state(args[0]);
            auto to = builder.find_state(args[2]);
            if (!from) throw DfaFormatError(line_no, "undeclared state '" + args[0] + "'");
            if (!to) throw DfaFormatError(line_no, "undeclared state '" + args[2] + "'");
            auto sym = builder.find_symbol(args[1]);
            if (!sym) throw DfaFormatError(line_no, "undeclared symbol '" + args[1] + "'");
            try {
                builder.add_transition(*from, *sym, *to);
            } catch (const AutomatonError&) {
                throw DfaFormatError(line_no, "determinism violation: second transition from '" + args[0] +
                                                  "' on '" + args[1] + "'");
            }
        } else {
            throw DfaFormatError(line_no, "unexpected line starting with '" + key + "'");
        }
        if (end == text.size()) break;
    }
    if (sections.size() < std::size(kSections)) {
        throw DfaFormatError(0, "missing section '" + std::string(kSections[sections.size()]) + "'");
    }
    return builder.build();
}

/// Canonical text: states and symbols sorted, transitions sorted by (state, symbol).
inline std::string serialize_dfa(const Dfa& a) {
    std::vector<std::string> states = a.state_names();
    std::sort(states.begin(), states.end());
    std::vector<std::string> finals;
    std::vector<std::tuple<std::string, std::string, std::string>> trans;
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (a.is_final(q)) finals.push_back(a.state_name(q));
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            if (StateId p = a.next(q, s); p != kNoState) trans.emplace_back(a.state_name(q), a.symbol(s), a.state_name(p));
        }
    }
    std::sort(finals.begin(), finals.end());
    std::sort(trans.begin(), trans.end());

    auto line = [](std::string key, const std::vector<std::string>& items) {
        for (const auto& i : items) key += " " + i;
        return key + "\n";
    };
    std::string out;
    out += line("alphabet:", a.alphabet());
    out += line("states:", states);
    out += "initial: " + a.state_name(a.initial()) + "\n";
    out += line("final:", finals);
    for (const auto& [from, sym, to] : trans) out += "trans: " + from + " " + sym + " " + to + "\n";
    return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string render_dot(const std::vector<std::string>& names, const std::vector<bool>& initials,
                              const std::vector<bool>& finals,
                              const std::map<std::pair<StateId, StateId>, std::vector<std::string>>& edges) {
    std::ostringstream os;
    os << "digraph automaton {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t q = 0; q < names.size(); ++q) {
        if (initials[q]) os << "  __init" << q << " [shape=point];\n";
    }
    for (std::size_t q = 0; q < names.size(); ++q) {
        os << "  " << dot_quote(names[q]) << " [shape=" << (finals[q] ? "doublecircle" : "circle") << "];\n";
    }
    for (std::size_t q = 0; q < names.size(); ++q) {
        if (initials[q]) os << "  __init" << q << " -> " << dot_quote(names[q]) << ";\n";
    }
    for (const auto& [ends, labels] : edges) {
        std::string label;
        for (std::size_t i = 0; i < labels.size(); ++i) label += (i ? "," : "") + labels[i];
        os << "  " << dot_quote(names[ends.first]) << " -> " << dot_quote(names[ends.second])
           << " [label=" << dot_quote(label) << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace detail

inline std::string to_dot(const Dfa& a) {
    std::map<std::pair<StateId, StateId>, std::vector<std::string>> edges;
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            if (StateId p = a.next(q, s); p != kNoState) edges[{q, p}].push_back(a.symbol(s));
        }
    }
    std::vector<bool> initials(a.num_states(), false);
    initials[a.initial()] = true;
    return detail::render_dot(a.state_names(), initials, a.finals(), edges);
}

inline std::string to_dot(const Nfa& a) {
    std::map<std::pair<StateId, StateId>, std::vector<std::string>> edges;
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (SymbolId s = 0; s < a.num_symbols(); ++s) {
            for (StateId p : a.next(q, s)) edges[{q, p}].push_back(a.symbol(s));
        }
    }
    return detail::render_dot(a.state_names(), a.initials(), a.finals(), edges);
}

} // namespace revauto
