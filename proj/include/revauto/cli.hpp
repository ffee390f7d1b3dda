#pragma once

/**
 * @file cli.hpp
 * @brief The `revauto` command-line tool.
 *
 * Exit status: 0 success, 1 usage or parse error, 2 refusal because a
 * forbidden pattern is present, 3 negative answer of `check`.
 */

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algorithms.hpp"
#include "automaton.hpp"
#include "construct.hpp"
#include "io.hpp"
#include "pattern_nfa.hpp"
#include "regex.hpp"
#include "report.hpp"
#include "reversibility.hpp"

namespace revauto::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kRefused = 2, kNegative = 3 };

inline constexpr const char* kRegexHelp =
    "Regular expression over [a-z0-9]: '+' or '|' for union, juxtaposition for concatenation, "
    "postfix '*', parentheses, '_' for the empty word";

struct Input {
    std::string file;
    std::string regex;
};

struct LoadedInput {
    Dfa dfa;
    std::string kind;
    std::string source;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LoadedInput load(const Input& in) {
    if (in.file.empty() == in.regex.empty()) throw UsageError("give exactly one of <file> or --regex");
    if (!in.regex.empty()) return {regex_to_min_dfa(in.regex), "regex", in.regex};
    return {parse_dfa_file(read_file(in.file)), "file", in.file};
}

inline void add_input(CLI::App* cmd, Input& in, bool allow_regex = true) {
    cmd->add_option("file", in.file, "DFA file");
    if (allow_regex) cmd->add_option("--regex,-r", in.regex, kRegexHelp);
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

/// Runs the tool on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degrees of irreversibility of regular languages and k-reversible DFA construction", "revauto"};
    app.require_subcommand(1);
    app.footer(std::string("DFA file format: 'alphabet:', 'states:', 'initial:', 'final:' lines in this order, then "
                           "'trans: <state> <symbol> <state>' lines; '#' starts a comment.\n") +
               kRegexHelp + ".");

    Input analyze_in;
    bool json = false;
    bool timing = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report the automaton and language degree with a witness");
    add_input(analyze_cmd, analyze_in);
    analyze_cmd->add_flag("--json", json, "Machine-readable output");
    analyze_cmd->add_flag("--timing", timing, "Include the analysis time");

    Input construct_in;
    std::size_t construct_k = 0;
    std::string output_path;
    bool force = false;
    bool no_minimize = false;
    auto* construct_cmd = app.add_subcommand("construct", "Build an equivalent k-reversible DFA");
    construct_cmd->add_option("-k", construct_k, "Target k (>= 1)")->required();
    add_input(construct_cmd, construct_in);
    construct_cmd->add_option("-o,--output", output_path, "Write the DFA here instead of standard output");
    construct_cmd->add_flag("--force", force, "Build even if a k-forbidden pattern is present");
    construct_cmd->add_flag("--no-minimize", no_minimize, "Simulate the input as given instead of its minimal DFA");

    Input check_in;
    std::size_t check_k = 0;
    auto* check_cmd = app.add_subcommand("check", "Is the automaton, as given, k-reversible? (exit 0 yes, 3 no)");
    check_cmd->add_option("-k", check_k, "k (>= 1)")->required();
    add_input(check_cmd, check_in, false);

    Input minimize_in;
    auto* minimize_cmd = app.add_subcommand("minimize", "Print the minimal DFA");
    add_input(minimize_cmd, minimize_in);

    Input dot_in;
    bool dot_minimize = false;
    bool dot_pattern = false;
    auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of the automaton");
    add_input(dot_cmd, dot_in);
    dot_cmd->add_flag("--minimize", dot_minimize, "Render the minimal DFA");
    dot_cmd->add_flag("--pattern", dot_pattern, "Render the pattern NFA of the minimal DFA");

    Input witness_in;
    std::size_t witness_k = 0;
    auto* witness_cmd = app.add_subcommand("witness", "Print the maximal forbidden pattern or a pump certificate");
    add_input(witness_cmd, witness_in);
    witness_cmd->add_option("-k", witness_k, "Print a k-forbidden pattern of the minimal DFA instead");

    std::vector<const char*> argv{"revauto"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (analyze_cmd->parsed()) {
            auto in = load(analyze_in);
            auto start = std::chrono::steady_clock::now();
            AnalysisReport report = analyze(in.dfa, in.kind, in.source);
            if (timing) {
                report.timing_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            }
            out << (json ? to_json(report).dump(2) + "\n" : render_text(report));
            return kSuccess;
        }
        if (construct_cmd->parsed()) {
            if (construct_k < 1) throw UsageError("-k must be at least 1");
            auto in = load(construct_in);
            Dfa base = no_minimize ? trim(in.dfa) : minimize(in.dfa);
            ConstructOptions options;
            options.force = force;
            try {
                Construction c = construct_k_reversible(base, construct_k, options);
                if (c.pattern) {
                    err << "warning: " << describe_pattern(c.base, *c.pattern) << "\n"
                        << "warning: the result is not guaranteed to be " << construct_k << "-reversible\n";
                }
                if (Degree d = automaton_degree(c.automaton); !(d <= Degree::finite(construct_k))) {
                    err << "warning: the result is not " << construct_k << "-reversible (automaton degree: "
                        << d.describe() << ")\n";
                }
                err << "constructed " << c.automaton.num_states() << " states from " << c.base.num_states()
                    << " (bound (k+1)^n = " << c.state_bound << ")\n";
                write_output(serialize_dfa(c.automaton), output_path, out);
                return kSuccess;
            } catch (const ForbiddenPatternError& e) {
                detail::validated(base, e.witness());
                err << "refused: " << describe_pattern(base, e.witness()) << "\n";
                return kRefused;
            }
        }
        if (check_cmd->parsed()) {
            if (check_k < 1) throw UsageError("-k must be at least 1");
            auto in = load(check_in);
            Degree d = automaton_degree(trim(in.dfa));
            bool yes = d <= Degree::finite(check_k);
            out << (yes ? "yes" : "no") << ": automaton degree " << d.describe() << "\n";
            return yes ? kSuccess : kNegative;
        }
        if (minimize_cmd->parsed()) {
            out << serialize_dfa(minimize(load(minimize_in).dfa));
            return kSuccess;
        }
        if (dot_cmd->parsed()) {
            auto in = load(dot_in);
            if (dot_pattern) {
                Dfa m = minimize(in.dfa);
                out << to_dot(build_pattern_nfa(m).to_nfa(m));
            } else {
                out << to_dot(dot_minimize ? minimize(in.dfa) : in.dfa);
            }
            return kSuccess;
        }
        if (witness_cmd->parsed()) {
            auto in = load(witness_in);
            if (witness_k > 0) {
                Dfa m = minimize(in.dfa);
                auto w = has_k_forbidden_pattern(m, witness_k);
                if (!w) {
                    out << "no " << witness_k << "-forbidden pattern\n";
                    return kSuccess;
                }
                out << describe_pattern(m, detail::validated(m, *w)) << "\n";
                return kSuccess;
            }
            LanguageAnalysis lang = language_degree(in.dfa);
            out << "language degree: " << lang.degree.describe() << "\n";
            out << "witness: " << describe_witness(lang.minimal, lang.witness) << "\n";
            return kSuccess;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RegexSyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DfaFormatError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const AutomatonError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace revauto::cli
