#pragma once

/**
 * @file report.hpp
 * @brief Analysis reports in human-readable and JSON form.
 *
 * Both renderings carry the same fields. Every witness is re-validated
 * against the minimal DFA before it is rendered.
 */

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algorithms.hpp"
#include "automaton.hpp"
#include "degree.hpp"
#include "reversibility.hpp"
#include "witness.hpp"

namespace revauto {

struct AnalysisReport {
    std::string source_kind;  // "file" or "regex"
    std::string source;
    std::vector<std::string> alphabet;
    std::size_t input_states = 0;
    std::size_t minimal_states = 0;
    Degree language_degree = Degree::zero();
    Degree automaton_degree = Degree::zero();
    Dfa minimal;
    std::optional<Witness> witness;
    std::optional<double> timing_ms;
};

/// Pump certificates are shown together with these many expansions (lengths 1, 2, ...).
inline constexpr std::size_t kCertificateExpansions = 3;

/**
 * Degree of the input automaton (trimmed) and of its language (minimized).
 */
inline AnalysisReport analyze(const Dfa& input, std::string source_kind, std::string source) {
    LanguageAnalysis lang = language_degree(input);
    Degree automaton = automaton_degree(trim(input));
    AnalysisReport report{std::move(source_kind), std::move(source), input.alphabet(), input.num_states(),
                          lang.minimal.num_states(), lang.degree, automaton, lang.minimal, lang.witness, std::nullopt};
    if (report.automaton_degree < report.language_degree) {
        throw std::logic_error("language degree exceeds automaton degree");
    }
    return report;
}

namespace detail {

inline const ForbiddenPatternWitness& validated(const Dfa& m, const ForbiddenPatternWitness& w) {
    if (auto problem = check_witness(m, w)) throw std::logic_error("invalid witness: " + *problem);
    return w;
}

inline std::vector<ForbiddenPatternWitness> certificate_expansions(const Dfa& m, const PumpCertificate& cert) {
    std::vector<ForbiddenPatternWitness> out;
    for (std::size_t len = 1; len <= kCertificateExpansions; ++len) {
        out.push_back(validated(m, certificate_witness(m, cert, len)));
    }
    return out;
}

inline nlohmann::ordered_json word_json(const Dfa& m, const Word& w) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (SymbolId s : w) out.push_back(m.symbol(s));
    return out;
}

} // namespace detail

inline std::string describe_pattern(const Dfa& m, const ForbiddenPatternWitness& w) {
    const auto& alphabet = m.alphabet();
    return std::to_string(w.k()) + "-forbidden pattern: p = " + m.state_name(w.p) + ", q = " + m.state_name(w.q) +
           ", r = " + m.state_name(w.r) + ", x = " + render_word(alphabet, w.x) + ", sigma = " + m.symbol(w.sigma) +
           ", w = " + render_word(alphabet, w.w);
}

inline std::string describe_certificate(const Dfa& m, const PumpCertificate& c) {
    return "pump certificate: anchor = " + m.state_name(c.anchor) + ", stem = " + render_word(m.alphabet(), c.stem) +
           ", cycle = " + render_word(m.alphabet(), c.cycle);
}

inline nlohmann::ordered_json degree_json(const Degree& d) {
    nlohmann::ordered_json out;
    switch (d.kind()) {
    case Degree::Kind::Zero: out["kind"] = "zero"; break;
    case Degree::Kind::Finite:
        out["kind"] = "finite";
        out["k"] = d.value();
        break;
    case Degree::Kind::Infinite: out["kind"] = "infinite"; break;
    }
    out["text"] = d.describe();
    return out;
}

inline nlohmann::ordered_json pattern_json(const Dfa& m, const ForbiddenPatternWitness& w) {
    detail::validated(m, w);
    return {{"type", "forbidden_pattern"},
            {"k", w.k()},
            {"p", m.state_name(w.p)},
            {"q", m.state_name(w.q)},
            {"r", m.state_name(w.r)},
            {"x", detail::word_json(m, w.x)},
            {"sigma", m.symbol(w.sigma)},
            {"w", detail::word_json(m, w.w)}};
}

inline nlohmann::ordered_json witness_json(const Dfa& m, const std::optional<Witness>& witness) {
    if (!witness) return nullptr;
    if (const auto* fp = std::get_if<ForbiddenPatternWitness>(&*witness)) return pattern_json(m, *fp);
    const auto& cert = std::get<PumpCertificate>(*witness);
    nlohmann::ordered_json expansions = nlohmann::ordered_json::array();
    for (const auto& w : detail::certificate_expansions(m, cert)) expansions.push_back(pattern_json(m, w));
    return {{"type", "pump_certificate"},
            {"anchor", m.state_name(cert.anchor)},
            {"stem", detail::word_json(m, cert.stem)},
            {"cycle", detail::word_json(m, cert.cycle)},
            {"expansions", expansions}};
}

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
    nlohmann::ordered_json out;
    out["source"] = {{"kind", r.source_kind}, {"value", r.source}};
    out["alphabet"] = r.alphabet;
    out["input_states"] = r.input_states;
    out["minimal_states"] = r.minimal_states;
    out["automaton_degree"] = degree_json(r.automaton_degree);
    out["language_degree"] = degree_json(r.language_degree);
    out["witness"] = witness_json(r.minimal, r.witness);
    if (r.timing_ms) out["timing_ms"] = *r.timing_ms;
    return out;
}

/// Human-readable witness lines (no trailing newline on the last line).
inline std::string describe_witness(const Dfa& m, const std::optional<Witness>& witness) {
    if (!witness) return "none";
    if (const auto* fp = std::get_if<ForbiddenPatternWitness>(&*witness)) {
        return describe_pattern(m, detail::validated(m, *fp));
    }
    const auto& cert = std::get<PumpCertificate>(*witness);
    std::string out = describe_certificate(m, cert);
    for (const auto& w : detail::certificate_expansions(m, cert)) out += "\n  " + describe_pattern(m, w);
    return out;
}

inline std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "source: " << r.source_kind << " " << r.source << "\n";
    os << "alphabet:";
    for (const auto& s : r.alphabet) os << " " << s;
    os << "\n";
    os << "input states: " << r.input_states << "\n";
    os << "minimal states: " << r.minimal_states << "\n";
    os << "automaton degree: " << r.automaton_degree.describe() << "\n";
    os << "language degree: " << r.language_degree.describe() << "\n";
    os << "witness: " << describe_witness(r.minimal, r.witness) << "\n";
    if (r.timing_ms) os << "timing: " << *r.timing_ms << " ms\n";
    return os.str();
}

} // namespace revauto
