#include <gtest/gtest.h>

#include "revauto/algorithms.hpp"
#include "revauto/pattern_nfa.hpp"
#include "revauto/regex.hpp"
#include "revauto/reversibility.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace revauto;

namespace {

Word w(const Dfa& a, std::string_view s) { return parse_compact_word(a.alphabet(), s); }

// Smallest k with no k-forbidden pattern, by direct enumeration; Infinite past the bound.
Degree oracle_language_degree(const Dfa& m) {
    if (!oracle::has_cycle(m)) return Degree::zero();
    const std::size_t bound = strong_irreversibility_bound(m.num_states());
    for (std::size_t k = 1; k <= bound + 1; ++k) {
        if (!oracle::has_k_pattern(m, k)) return Degree::finite(k);
    }
    return Degree::infinite();
}

} // namespace

TEST(Degree, OrderAndRendering) {
    EXPECT_LT(Degree::zero(), Degree::finite(1));
    EXPECT_LT(Degree::finite(3), Degree::finite(4));
    EXPECT_LT(Degree::finite(100), Degree::infinite());
    EXPECT_THROW(Degree::finite(0), std::invalid_argument);
    EXPECT_EQ(Degree::zero().describe(), "0 (finite language)");
    EXPECT_EQ(Degree::finite(3).describe(), "k-reversible, minimal k = 3");
    EXPECT_EQ(Degree::infinite().describe(), "strongly irreversible");
}

TEST(StateHeight, Hierarchy) {
    Dfa a = golden::hierarchy(2);
    EXPECT_EQ(state_irr_height(a, "q2"), Degree::finite(2));
    EXPECT_EQ(state_irr_height(a, "qI"), Degree::zero());
    EXPECT_EQ(state_irr_height(a, "q1"), Degree::zero());
    EXPECT_THROW(state_irr_height(a, "nope"), std::out_of_range);
}

TEST(StateHeight, Strong) {
    Dfa a = golden::strong();
    EXPECT_EQ(state_irr_height(a, "p"), Degree::infinite());
    EXPECT_EQ(state_irr_height(a, "qI"), Degree::zero());
}

TEST(AutomatonDegree, Golden) {
    EXPECT_EQ(automaton_degree(golden::a57()), Degree::finite(7));
    EXPECT_EQ(automaton_degree(golden::a_chain()), Degree::finite(4));
    EXPECT_EQ(automaton_degree(golden::a_loop()), Degree::finite(1));
    EXPECT_EQ(automaton_degree(golden::trie_a_b()), Degree::zero());
    EXPECT_EQ(automaton_degree(golden::strong()), Degree::infinite());
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(automaton_degree(golden::hierarchy(k)), Degree::finite(k + 1));
}

TEST(AutomatonDegree, NonTreeAcyclicIsNotZero) {
    Dfa m = minimize(golden::trie_ab_bb());
    EXPECT_FALSE(is_tree(m));
    EXPECT_EQ(automaton_degree(m), Degree::finite(1));
}

TEST(PatternNfa, Strong) {
    Dfa m = golden::strong();
    PatternNfa n = build_pattern_nfa(m);
    StateId qI = *m.find_state("qI"), p = *m.find_state("p");
    SymbolId a = *m.find_symbol("a"), b = *m.find_symbol("b");
    auto pp = *n.find(p, p);
    auto qp = n.find(qI, p);
    ASSERT_TRUE(qp);
    EXPECT_EQ(n.successors(pp, b), std::vector<PatternNfa::NodeId>{*qp});
    EXPECT_EQ(n.successors(*qp, a), std::vector<PatternNfa::NodeId>{*qp});
}

TEST(PatternNfa, SingleLoopHasNoMoves) {
    PatternNfa n = build_pattern_nfa(golden::a_loop());
    EXPECT_EQ(n.num_nodes(), 1u);
    EXPECT_EQ(n.num_transitions(), 0u);
}

TEST(PatternNfa, HierarchyLongestWordIsTwo) {
    Dfa m = golden::hierarchy(2);
    PatternNfa n = build_pattern_nfa(m);
    auto len = longest_paths(n.adjacency());
    std::size_t best = 0;
    for (PatternNfa::NodeId r = 0; r < n.num_base_states(); ++r) {
        ASSERT_TRUE(len[r]);
        best = std::max(best, *len[r]);
    }
    EXPECT_EQ(best, 2u);
    EXPECT_EQ(n.read(*n.find(2, 2), w(m, "bb")).size(), 1u);
    EXPECT_TRUE(n.read(*n.find(2, 2), w(m, "bba")).empty());
}

TEST(LanguageDegree, KnownExamples) {
    EXPECT_EQ(language_degree(regex_to_min_dfa("a*bbb*")).degree, Degree::finite(3));
    EXPECT_EQ(language_degree(regex_to_min_dfa("a*b(a+b)*")).degree, Degree::infinite());
    EXPECT_EQ(language_degree(regex_to_min_dfa("a*")).degree, Degree::finite(1));
    EXPECT_EQ(language_degree(golden::a57()).degree, Degree::finite(5));
    EXPECT_EQ(language_degree(regex_to_min_dfa("aaa*")).degree, Degree::finite(3));
    EXPECT_EQ(language_degree(golden::a_chain()).degree, Degree::finite(1));
}

TEST(LanguageDegree, EmptyAndEpsilonAreZero) {
    EXPECT_EQ(language_degree(regex_to_min_dfa("_")).degree, Degree::zero());
    Dfa empty = parse_dfa_file("alphabet: a\nstates: q\ninitial: q\nfinal:\ntrans: q a q\n");
    EXPECT_EQ(language_degree(empty).degree, Degree::zero());
}

TEST(LanguageDegree, WitnessLengthMatchesDegree) {
    auto r = language_degree(regex_to_min_dfa("a*bbb*"));
    ASSERT_TRUE(r.witness);
    const auto& fp = std::get<ForbiddenPatternWitness>(*r.witness);
    EXPECT_EQ(fp.k(), 2u);
    EXPECT_TRUE(is_valid_witness(r.minimal, fp));
}

TEST(LanguageDegree, CertificateForStrong) {
    auto r = language_degree(golden::strong());
    ASSERT_TRUE(r.witness);
    const auto& cert = std::get<PumpCertificate>(*r.witness);
    EXPECT_EQ(render_word(r.minimal.alphabet(), cert.stem), "b");
    EXPECT_EQ(render_word(r.minimal.alphabet(), cert.cycle), "a");
    for (std::size_t m = 0; m <= 2; ++m) EXPECT_TRUE(is_valid_witness(r.minimal, expand_certificate(r.minimal, cert, m)));
    for (std::size_t len = 1; len <= 10; ++len) {
        auto fp = certificate_witness(r.minimal, cert, len);
        EXPECT_EQ(fp.k(), len);
        EXPECT_TRUE(is_valid_witness(r.minimal, fp));
    }
}

TEST(ForbiddenPattern, Hierarchy) {
    Dfa m = golden::hierarchy(2);
    auto fp = has_k_forbidden_pattern(m, 2);
    ASSERT_TRUE(fp);
    EXPECT_TRUE(is_valid_witness(m, *fp));
    EXPECT_EQ(m.state_name(fp->p), "qI");
    EXPECT_EQ(m.state_name(fp->q), "q2");
    EXPECT_EQ(m.state_name(fp->r), "q2");
    EXPECT_EQ(render_word(m.alphabet(), fp->x), "b");
    EXPECT_EQ(m.symbol(fp->sigma), "b");
    EXPECT_TRUE(fp->w.empty());
    EXPECT_FALSE(has_k_forbidden_pattern(m, 3));
}

TEST(ForbiddenPattern, LiteralExampleWithQ1IsInvalid) {
    Dfa m = golden::hierarchy(2);
    ForbiddenPatternWitness bad{*m.find_state("q1"), *m.find_state("q2"), *m.find_state("q2"), w(m, "b"),
                                *m.find_symbol("b"), {}};
    EXPECT_FALSE(is_valid_witness(m, bad));
}

TEST(ForbiddenPattern, StrongLong) {
    Dfa m = golden::strong();
    auto fp = has_k_forbidden_pattern(m, 10);
    ASSERT_TRUE(fp);
    EXPECT_TRUE(is_valid_witness(m, *fp));
    EXPECT_EQ(render_word(m.alphabet(), fp->x), "aaaaaaaaa");
    EXPECT_EQ(m.state_name(fp->p), "qI");
    EXPECT_EQ(m.state_name(fp->q), "p");
    EXPECT_EQ(m.state_name(fp->r), "p");
    EXPECT_EQ(m.symbol(fp->sigma), "b");
    EXPECT_TRUE(fp->w.empty());
}

TEST(StrongViaBound, Examples) {
    EXPECT_TRUE(strong_via_bound(golden::strong()));
    EXPECT_FALSE(strong_via_bound(golden::a_loop()));
    EXPECT_FALSE(strong_via_bound(golden::hierarchy(2)));
    EXPECT_EQ(strong_irreversibility_bound(2), 2u);
    EXPECT_EQ(strong_irreversibility_bound(3), 4u);
}

TEST(BruteForce, Examples) {
    Dfa a = golden::hierarchy(2);
    StateId q2 = *a.find_state("q2");
    EXPECT_TRUE(brute_force_k_irreversible(a, q2, 2));
    EXPECT_FALSE(brute_force_k_irreversible(a, q2, 3));
    EXPECT_FALSE(brute_force_k_irreversible(a, *a.find_state("q1"), 1));
    EXPECT_THROW(brute_force_k_irreversible(a, q2, 0), std::invalid_argument);
}

TEST(Properties, HeightMatchesBruteForceAndMonotone) {
    oracle::Rng rng(101);
    for (int iter = 0; iter < 300; ++iter) {
        Dfa a = oracle::random_dfa(rng, 1 + iter % 5, 2);
        for (StateId r = 0; r < a.num_states(); ++r) {
            Degree h = state_irr_height(a, r);
            bool previous = true;
            for (std::size_t k = 1; k <= 4; ++k) {
                bool bf = brute_force_k_irreversible(a, r, k);
                EXPECT_EQ(bf, oracle::k_irreversible(a, r, k));
                EXPECT_EQ(bf, h >= Degree::finite(k));
                EXPECT_TRUE(previous || !bf);
                previous = bf;
            }
        }
    }
}

TEST(Properties, LanguageDegreeMatchesEnumeration) {
    oracle::Rng rng(202);
    for (int iter = 0; iter < 300; ++iter) {
        Dfa m = minimize(oracle::random_dfa(rng, 1 + iter % 4, 2));
        auto r = language_degree(m);
        EXPECT_EQ(r.degree, oracle_language_degree(r.minimal)) << serialize_dfa(m);
        EXPECT_EQ(r.degree.is_infinite(), strong_via_bound(r.minimal));
        EXPECT_LE(r.degree, automaton_degree(trim(m)));
    }
}

TEST(Properties, PatternMonotoneAndValid) {
    oracle::Rng rng(303);
    for (int iter = 0; iter < 200; ++iter) {
        Dfa m = minimize(oracle::random_dfa(rng, 1 + iter % 5, 2));
        bool later = false;
        for (std::size_t k = 6; k >= 1; --k) {
            auto fp = has_k_forbidden_pattern(m, k);
            if (fp) {
                EXPECT_TRUE(is_valid_witness(m, *fp));
                EXPECT_EQ(fp->k(), k);
            }
            EXPECT_TRUE(!later || fp.has_value());
            EXPECT_EQ(fp.has_value(), oracle::has_k_pattern(m, k));
            later = fp.has_value();
        }
    }
}

TEST(Properties, WitnessesAndCertificatesValidate) {
    oracle::Rng rng(404);
    for (int iter = 0; iter < 300; ++iter) {
        auto r = language_degree(oracle::random_dfa(rng, 1 + iter % 6, 2));
        if (!r.witness) {
            EXPECT_LE(r.degree, Degree::finite(1));
            continue;
        }
        if (const auto* fp = std::get_if<ForbiddenPatternWitness>(&*r.witness)) {
            EXPECT_TRUE(is_valid_witness(r.minimal, *fp));
            EXPECT_EQ(Degree::finite(fp->k() + 1), r.degree);
        } else {
            EXPECT_TRUE(r.degree.is_infinite());
            const auto& cert = std::get<PumpCertificate>(*r.witness);
            for (std::size_t m = 0; m <= 2; ++m) {
                EXPECT_TRUE(is_valid_witness(r.minimal, expand_certificate(r.minimal, cert, m)));
            }
        }
    }
}

TEST(Properties, UnaryIsWeaklyIrreversible) {
    oracle::Rng rng(505);
    for (int iter = 0; iter < 300; ++iter) {
        Dfa m = regex_to_min_dfa(oracle::random_regex(rng, iter % 5, "a"));
        auto r = language_degree(m);
        EXPECT_FALSE(r.degree.is_infinite());
        std::size_t tail = 0;
        StateId q = r.minimal.initial();
        auto scc = scc_decompose(r.minimal);
        while (q != kNoState && !scc.cyclic[scc.component_of[q]]) {
            q = r.minimal.num_symbols() ? r.minimal.next(q, 0) : kNoState;
            ++tail;
        }
        if (q == kNoState) {
            EXPECT_TRUE(r.degree.is_zero());
        } else {
            EXPECT_EQ(r.degree, Degree::finite(tail + 1));
        }
    }
}

TEST(Unary, ShiftedStar) {
    for (std::size_t k : {1, 2, 3, 5}) {
        std::string re = std::string(k - 1, 'a') + "a*";
        EXPECT_EQ(language_degree(regex_to_min_dfa(re)).degree, Degree::finite(k)) << re;
    }
}
