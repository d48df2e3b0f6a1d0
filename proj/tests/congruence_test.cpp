#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "condalg/congruence.hpp"
#include "condalg/normalizer.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace condalg;
using fixtures::term;

namespace {

const CongruenceKind static_ab = CongruenceKind::static_over(parse_sigma("ab"));

std::vector<CongruenceKind> chain() {
    return {CongruenceKind::free(), CongruenceKind::rp(), CongruenceKind::cr(),
            CongruenceKind::mem(), static_ab};
}

// Basic forms plus a slice of the random pool.
const std::vector<Term> &mixed_pool() {
    static const std::vector<Term> pool = [] {
        std::vector<Term> out = fixtures::basic_forms_ab2();
        for(const Term &t : oracle::random_pool(7, 60, 6))
            out.push_back(t);
        return out;
    }();
    return pool;
}

} // namespace

TEST(Kind, NamesAndRanks) {
    EXPECT_EQ(CongruenceKind::free().name(), "free");
    EXPECT_EQ(CongruenceKind::mem().name(), "mem");
    EXPECT_EQ(static_ab.name(), "static(ab)");
    const auto kinds = chain();
    for(std::size_t i = 0; i < kinds.size(); ++i)
        EXPECT_EQ(kinds[i].rank(), static_cast<int>(i));
    EXPECT_THROW(CongruenceKind::rp().sigma(), Error);
    EXPECT_EQ(static_ab.sigma(), parse_sigma("ab"));
}

TEST(NormalForm, Examples) {
    EXPECT_EQ(normal_form(term("T <| a |> a"), CongruenceKind::rp()), term("T <| a |> (F <| a |> F)"));
    EXPECT_EQ(normal_form(term("F <| a |> F"), CongruenceKind::static_over(parse_sigma("a"))),
              term("F <| a |> F"));
    EXPECT_EQ(normal_form(term("F"), CongruenceKind::static_over(parse_sigma("a"))),
              term("F <| a |> F"));
    EXPECT_EQ(normal_form(term("T"), CongruenceKind::free()), term("T"));
}

TEST(Equivalent, Examples) {
    const Term p = term("T <| a |> a");
    const Term q = term("T <| a |> (F <| a |> F)");
    EXPECT_TRUE(equivalent(p, q, CongruenceKind::rp()));
    EXPECT_FALSE(equivalent(p, q, CongruenceKind::free()));
    const CongruenceKind static_a = CongruenceKind::static_over(parse_sigma("a"));
    EXPECT_TRUE(equivalent(term("F <| a |> F"), term("F"), static_a));
    EXPECT_FALSE(equivalent(term("F <| a |> F"), term("F"), CongruenceKind::mem()));
    EXPECT_TRUE(equivalent(term("a <| b |> F"), term("b <| a |> F"), static_ab));
    EXPECT_FALSE(equivalent(term("a <| b |> F"), term("b <| a |> F"), CongruenceKind::mem()));
}

TEST(Equivalent, StaticRequiresCoverage) {
    EXPECT_THROW(equivalent(term("a"), term("c"), static_ab), AlphabetError);
}

TEST(Propositional, Translation) {
    const PropFormula a = PropFormula::make_atom(Atom("a"));
    EXPECT_EQ(to_propositional(term("a")), a);
    EXPECT_EQ(to_propositional(term("T")), PropFormula::make_true());
    EXPECT_EQ(to_propositional(term("T <| a |> F")),
              PropFormula::make_or(PropFormula::make_and(PropFormula::make_true(), a),
                                   PropFormula::make_and(PropFormula::make_not(a),
                                                         PropFormula::make_false())));
    EXPECT_EQ(render_formula(to_propositional(term("T <| a |> F"))), "((true & a) | (!a & false))");
}

TEST(TruthTable, PrintedExample) {
    const Term p = term("(a <| b |> F) <| a |> T");
    const TruthTable ab = truth_table(p, parse_sigma("ab"));
    ASSERT_EQ(ab.rows.size(), 4u);
    const std::vector<TruthTable::Row> expected_ab{
        {{true, true}, true}, {{true, false}, false}, {{false, true}, true}, {{false, false}, true}};
    EXPECT_EQ(ab.rows, expected_ab);
    const TruthTable ba = truth_table(p, parse_sigma("ba"));
    const std::vector<TruthTable::Row> expected_ba{
        {{true, true}, true}, {{true, false}, true}, {{false, true}, false}, {{false, false}, true}};
    EXPECT_EQ(ba.rows, expected_ba);
}

TEST(TruthTable, SmallCases) {
    for(const auto &row : truth_table(term("T"), parse_sigma("ab")).rows)
        EXPECT_TRUE(row.value);
    const TruthTable t = truth_table(term("F <| a |> F"), parse_sigma("a"));
    EXPECT_EQ(t.rows, (std::vector<TruthTable::Row>{{{true}, false}, {{false}, false}}));
    EXPECT_EQ(truth_table(term("T"), Sigma()).rows.size(), 1u);
}

TEST(TruthTable, Rendering) {
    const Term p = term("(a <| b |> F) <| a |> T");
    const TruthTable table = truth_table(p, parse_sigma("ab"));
    EXPECT_EQ(render_table_text(table, render_term(p)),
              "a b | (a <| b |> F) <| a |> T\n"
              "T T | T\n"
              "T F | F\n"
              "F T | T\n"
              "F F | T\n");
    EXPECT_EQ(render_table_json(table),
              R"({"sigma":["a","b"],"rows":[{"assignment":[true,true],"value":true},)"
              R"({"assignment":[true,false],"value":false},{"assignment":[false,true],"value":true},)"
              R"({"assignment":[false,false],"value":true}]})");
}

TEST(TruthTable, Limits) {
    EXPECT_THROW(truth_table(term("c"), parse_sigma("ab")), AlphabetError);
    EXPECT_THROW(truth_table(term("a"), parse_sigma("abcdefghijklmnopq")), SigmaError);
}

TEST(TruthTable, MatchesDirectEvaluation) {
    const std::vector<Atom> order{Atom("a"), Atom("b")};
    for(const Term &t : mixed_pool()) {
        const TruthTable table = truth_table(t, parse_sigma("ab"));
        const std::vector<bool> direct = oracle::assignment_results(t, order);
        // The oracle enumerates with a as the low bit and false first.
        for(const auto &row : table.rows) {
            const std::size_t index = (row.assignment[0] ? 1 : 0) + (row.assignment[1] ? 2 : 0);
            ASSERT_EQ(row.value, direct[index]) << render_term(t);
        }
    }
}

TEST(StaticTautology, Examples) {
    EXPECT_TRUE(static_matches_tautology(term("F <| a |> F"), term("F"), parse_sigma("a")));
    EXPECT_TRUE(static_matches_tautology(term("a"), term("b"), parse_sigma("ab")));
}

TEST(Witnesses, AllVerifiedAndCoverTheChain) {
    const auto ws = separation_witnesses();
    ASSERT_EQ(ws.size(), 4u);
    for(std::size_t i = 0; i < ws.size(); ++i) {
        EXPECT_TRUE(ws[i].verified) << i;
        EXPECT_EQ(ws[i].finer.rank(), static_cast<int>(i));
        EXPECT_EQ(ws[i].coarser.rank(), static_cast<int>(i) + 1);
        EXPECT_FALSE(equivalent(ws[i].p, ws[i].q, ws[i].finer));
        EXPECT_TRUE(equivalent(ws[i].p, ws[i].q, ws[i].coarser));
    }
    EXPECT_EQ(ws[0].p, term("T <| a |> a"));
    EXPECT_EQ(ws[3].q, term("F"));
}

TEST(DualRealization, TreesAgreeWithNormalForms) {
    const auto &pool = mixed_pool();
    for(const CongruenceKind &kind : chain()) {
        std::vector<EvalTree> trees;
        std::vector<Term> forms;
        for(const Term &t : pool) {
            trees.push_back(semantic_tree(t, kind));
            forms.push_back(normal_form(t, kind));
        }
        for(std::size_t i = 0; i < pool.size(); ++i)
            for(std::size_t j = i + 1; j < pool.size(); ++j)
                ASSERT_EQ(trees[i] == trees[j], forms[i] == forms[j])
                    << kind.name() << ": " << render_term(pool[i]) << " vs " << render_term(pool[j]);
    }
}

TEST(Lattice, InclusionsHold) {
    const auto &pool = mixed_pool();
    const auto kinds = chain();
    std::vector<std::vector<EvalTree>> trees(kinds.size());
    for(std::size_t k = 0; k < kinds.size(); ++k)
        for(const Term &t : pool)
            trees[k].push_back(semantic_tree(t, kinds[k]));
    for(std::size_t i = 0; i < pool.size(); ++i) {
        for(std::size_t j = i + 1; j < pool.size(); ++j) {
            for(std::size_t k = 0; k + 1 < kinds.size(); ++k) {
                if(trees[k][i] == trees[k][j])
                    ASSERT_EQ(trees[k + 1][i], trees[k + 1][j])
                        << kinds[k].name() << ": " << render_term(pool[i]) << " vs "
                        << render_term(pool[j]);
            }
        }
    }
}

TEST(Congruence, ClosedUnderContexts) {
    const std::vector<Term> forms = enumerate_basic_forms(fixtures::ab(), 1);
    std::vector<Term> pool(forms.begin(), forms.end());
    pool.push_back(term("a"));
    pool.push_back(term("b"));
    pool.push_back(term("T <| a |> a"));
    pool.push_back(term("T <| a |> (F <| a |> F)"));
    pool.push_back(term("(T <| a |> F) <| a |> F"));
    pool.push_back(term("T <| a |> (F <| b |> (T <| a |> F))"));
    pool.push_back(term("T <| a |> (F <| b |> F)"));
    pool.push_back(term("F <| a |> F"));
    const std::vector<Term> fillers{term("T"), term("F"), term("a"), term("b"), term("T <| b |> F")};

    using Context = std::function<Term(const Term &)>;
    std::vector<Context> contexts;
    for(const Term &u : fillers) {
        for(const Term &v : fillers) {
            contexts.push_back([u, v](const Term &x) { return Term::make_cond(x, u, v); });
            contexts.push_back([u, v](const Term &x) { return Term::make_cond(u, x, v); });
            contexts.push_back([u, v](const Term &x) { return Term::make_cond(u, v, x); });
        }
    }
    for(const CongruenceKind &kind : chain()) {
        for(const Term &p : pool) {
            for(const Term &q : pool) {
                if(!equivalent(p, q, kind))
                    continue;
                for(const Context &c : contexts)
                    ASSERT_TRUE(equivalent(c(p), c(q), kind))
                        << kind.name() << ": " << render_term(c(p)) << " vs " << render_term(c(q));
            }
        }
    }
}

TEST(Duality, FreeEquivalenceIsSelfDual) {
    const auto &pool = mixed_pool();
    for(std::size_t i = 0; i < pool.size(); ++i)
        for(std::size_t j = i; j < pool.size(); ++j)
            ASSERT_EQ(equivalent(pool[i], pool[j], CongruenceKind::free()),
                      equivalent(dual(pool[i]), dual(pool[j]), CongruenceKind::free()));
}

TEST(StaticLaws, RedundantConditionAndLayeredPrefix) {
    const Sigma sigma = parse_sigma("ab");
    const Term layers = e_sigma(sigma);
    const auto &forms = fixtures::basic_forms_ab2();
    for(const Term &p : mixed_pool()) {
        ASSERT_TRUE(equivalent(p, Term::make_cond(Term::make_true(), layers, p), static_ab));
        for(std::size_t k = 0; k < forms.size(); k += 7)
            ASSERT_TRUE(equivalent(p, Term::make_cond(p, forms[k], p), static_ab));
    }
}

// Tree equality coincides with equality of observable behaviour under each
// class of valuations, computed without any tree.
TEST(Completeness, AgreesWithValuationOracle) {
    const auto &pool = mixed_pool();
    const std::vector<std::pair<CongruenceKind, oracle::Valuation>> classes{
        {CongruenceKind::free(), oracle::Valuation::Free},
        {CongruenceKind::rp(), oracle::Valuation::RepetitionProof},
        {CongruenceKind::cr(), oracle::Valuation::Contractive},
        {CongruenceKind::mem(), oracle::Valuation::Memorizing},
    };
    for(const auto &[kind, valuation] : classes) {
        std::vector<std::set<std::string>> seen;
        std::vector<EvalTree> trees;
        for(const Term &t : pool) {
            seen.push_back(oracle::behaviours(t, valuation));
            trees.push_back(semantic_tree(t, kind));
        }
        for(std::size_t i = 0; i < pool.size(); ++i)
            for(std::size_t j = i + 1; j < pool.size(); ++j)
                ASSERT_EQ(trees[i] == trees[j], seen[i] == seen[j])
                    << kind.name() << ": " << render_term(pool[i]) << " vs " << render_term(pool[j]);
    }

    std::vector<std::vector<bool>> results;
    std::vector<EvalTree> trees;
    for(const Term &t : pool) {
        results.push_back(oracle::assignment_results(t, fixtures::ab()));
        trees.push_back(semantic_tree(t, static_ab));
    }
    for(std::size_t i = 0; i < pool.size(); ++i)
        for(std::size_t j = i + 1; j < pool.size(); ++j)
            ASSERT_EQ(trees[i] == trees[j], results[i] == results[j])
                << render_term(pool[i]) << " vs " << render_term(pool[j]);
}
