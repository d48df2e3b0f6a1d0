// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "condalg/axioms.hpp"
#include "condalg/cli.hpp"
#include "condalg/congruence.hpp"
#include "condalg/normalizer.hpp"
#include "condalg/shortcircuit.hpp"
#include "condalg/syntax.hpp"
#include "condalg/tree_transform.hpp"
#include "oracles.hpp"

using namespace condalg;

namespace {

constexpr double golden_tree_limit_seconds = 1.0;
constexpr double completeness_limit_seconds = 60.0;
constexpr std::uint64_t random_pool_seed = 20240601;
constexpr std::size_t random_pool_size = 200;
constexpr std::size_t random_pool_max_conds = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> problems;

    void fail(std::string why) {
        pass = false;
        if(problems.size() < 5)
            problems.push_back(std::move(why));
    }
};

Term term(const std::string &text) { return parse_term(text); }

const std::vector<Atom> ab{Atom("a"), Atom("b")};
const Sigma sigma_ab = parse_sigma("ab");
const Sigma sigma_ba = parse_sigma("ba");

std::vector<Term> basic_forms() { return enumerate_basic_forms(ab, 2); }

std::vector<Term> completeness_pool() {
    std::vector<Term> pool = basic_forms();
    for(const Term &t : oracle::random_pool(random_pool_seed, random_pool_size, random_pool_max_conds))
        pool.push_back(t);
    return pool;
}

std::vector<CongruenceKind> all_kinds() {
    return {CongruenceKind::free(),         CongruenceKind::rp(),
            CongruenceKind::cr(),           CongruenceKind::mem(),
            CongruenceKind::static_over(sigma_ab), CongruenceKind::static_over(sigma_ba)};
}

Outcome golden_trees() {
    Outcome o;
    const auto start = Clock::now();
    struct Case {
        const char *label;
        std::function<EvalTree()> tree;
        const char *expected;
    };
    const Term example = term("a <| (F <| a |> T) |> F");
    const Term layered = term("(a <| b |> F) <| a |> T");
    const std::vector<Case> cases{
        {"se", [&] { return se(example); }, "(F <a> (T <a> F))"},
        {"rpse", [&] { return rpse(example); }, "(F <a> (F <a> F))"},
        {"cse", [] { return cse(term("(a <| a |> F) <| a |> F")); }, "(T <a> F)"},
        {"mse", [] { return mse(term("(a <| b |> F) <| a |> F")); }, "((T <b> F) <a> F)"},
        {"sse ba", [&] { return sse(sigma_ba, layered); }, "((T <b> F) <a> (T <b> T))"},
        {"sse ab", [&] { return sse(sigma_ab, layered); }, "((T <a> T) <b> (F <a> T))"},
    };
    for(const Case &c : cases) {
        const std::string got = render_tree(c.tree(), TreeFormat::Ascii);
        if(got != c.expected)
            o.fail(std::string(c.label) + " gave " + got);
    }
    const double elapsed = seconds_since(start);
    if(elapsed >= golden_tree_limit_seconds)
        o.fail("took " + std::to_string(elapsed) + " s");
    o.summary = std::to_string(cases.size()) + " trees, " + std::to_string(elapsed) + " s";
    return o;
}

Outcome golden_tables() {
    Outcome o;
    const std::string label = "(a <| b |> F) <| a |> T";
    const std::vector<std::pair<std::string, std::string>> cases{
        {"ab", "a b | " + label + "\nT T | T\nT F | F\nF T | T\nF F | T\n"},
        {"ba", "b a | " + label + "\nT T | T\nT F | T\nF T | F\nF F | T\n"},
    };
    for(const auto &[sigma, expected] : cases) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = run_cli({"table", "--sigma", sigma, label}, out, err);
        if(status != exit_status::ok || out.str() != expected)
            o.fail("table --sigma " + sigma + " printed:\n" + out.str() + err.str());
    }
    o.summary = "2 tables";
    return o;
}

// Tree equality against normal-form equality, and against the test-side
// behaviour oracle for every kind.
Outcome completeness(const std::vector<Term> &pool, std::size_t basic_count) {
    Outcome o;
    const auto start = Clock::now();

    const std::uint64_t expected_basic = oracle::basic_form_count(2, 2);
    if(basic_count != expected_basic)
        o.fail("enumerated " + std::to_string(basic_count) + " basic forms, recurrence gives " +
               std::to_string(expected_basic));

    std::size_t pairs = 0;
    std::size_t disagreements = 0;
    const oracle::Valuation valuation_by_rank[] = {
        oracle::Valuation::Free, oracle::Valuation::RepetitionProof, oracle::Valuation::Contractive,
        oracle::Valuation::Memorizing};
    for(const CongruenceKind &kind : all_kinds()) {
        std::vector<EvalTree> trees;
        std::vector<Term> forms;
        std::vector<std::set<std::string>> observed;
        std::vector<std::vector<bool>> results;
        trees.reserve(pool.size());
        forms.reserve(pool.size());
        for(const Term &t : pool) {
            trees.push_back(semantic_tree(t, kind));
            forms.push_back(normal_form(t, kind));
            if(kind.is_static())
                results.push_back(oracle::assignment_results(t, ab));
            else
                observed.push_back(oracle::behaviours(t, valuation_by_rank[kind.rank()]));
        }
        for(std::size_t i = 0; i < pool.size(); ++i) {
            for(std::size_t j = i + 1; j < pool.size(); ++j) {
                ++pairs;
                const bool by_tree = trees[i] == trees[j];
                const bool by_form = forms[i] == forms[j];
                const bool by_oracle =
                    kind.is_static() ? results[i] == results[j] : observed[i] == observed[j];
                if(by_tree != by_form || by_tree != by_oracle) {
                    ++disagreements;
                    o.fail(kind.name() + ": " + render_term(pool[i]) + " vs " + render_term(pool[j]));
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    if(elapsed >= completeness_limit_seconds)
        o.fail("took " + std::to_string(elapsed) + " s");
    const std::size_t basic_pairs = basic_count * (basic_count - 1) / 2;
    o.summary = std::to_string(basic_count) + " basic forms (" + std::to_string(basic_pairs) +
                " pairs) + " + std::to_string(pool.size() - basic_count) + " random terms, " +
                std::to_string(pairs) + " pair checks over 6 kinds, " +
                std::to_string(disagreements) + " disagreements, " + std::to_string(elapsed) + " s";
    return o;
}

Outcome soundness() {
    Outcome o;
    const std::vector<Term> pool{term("T"), term("F"), term("a"), term("b"), term("T <| a |> F"),
                                 term("F <| b |> T")};
    const std::vector<AxiomSystem> systems{AxiomSystem::CP,    AxiomSystem::CPrp, AxiomSystem::CPcr,
                                           AxiomSystem::CPmem, AxiomSystem::CPs,  AxiomSystem::CPst};
    std::size_t instances = 0;
    std::size_t runs = 0;
    for(AxiomSystem system : systems) {
        for(const CongruenceKind &kind : all_kinds()) {
            if(kind.rank() < axiom_system_rank(system))
                continue;
            ++runs;
            for(const AxiomInstanceReport &r : check_axioms(system, pool, kind)) {
                ++instances;
                if(!r.holds())
                    o.fail(axiom_system_name(system) + " under " + kind.name() + ": " + r.axiom_name +
                           (r.lhs ? " " + render_term(*r.lhs) + "  vs  " + render_term(*r.rhs) : "") +
                           (r.detail.empty() ? "" : " (" + r.detail + ")"));
            }
        }
    }
    o.summary = std::to_string(runs) + " system/semantics runs, " + std::to_string(instances) +
                " instances";
    return o;
}

Outcome inclusions() {
    Outcome o;
    const auto oracle_equal = [](const Term &p, const Term &q, const CongruenceKind &kind) {
        if(kind.is_static()) {
            const auto &atoms = kind.sigma().atoms();
            return oracle::assignment_results(p, atoms) == oracle::assignment_results(q, atoms);
        }
        static const oracle::Valuation by_rank[] = {
            oracle::Valuation::Free, oracle::Valuation::RepetitionProof,
            oracle::Valuation::Contractive, oracle::Valuation::Memorizing};
        return oracle::behaviours(p, by_rank[kind.rank()]) == oracle::behaviours(q, by_rank[kind.rank()]);
    };
    const auto witnesses = separation_witnesses();
    if(witnesses.size() != 4)
        o.fail("expected 4 witnesses, got " + std::to_string(witnesses.size()));
    for(const SeparationWitness &w : witnesses) {
        const std::string label = w.finer.name() + " < " + w.coarser.name();
        if(!w.verified)
            o.fail(label + ": not verified");
        if(equivalent(w.p, w.q, w.finer) || !equivalent(w.p, w.q, w.coarser))
            o.fail(label + ": library verdicts do not separate");
        if(oracle_equal(w.p, w.q, w.finer) || !oracle_equal(w.p, w.q, w.coarser))
            o.fail(label + ": oracle verdicts do not separate");
    }
    const auto has_pair = [&](const char *p, const char *q) {
        for(const SeparationWitness &w : witnesses)
            if(w.p == term(p) && w.q == term(q))
                return true;
        return false;
    };
    if(!has_pair("T <| a |> a", "T <| a |> (F <| a |> F)"))
        o.fail("missing the free/rp pair");
    if(!has_pair("F <| a |> F", "F"))
        o.fail("missing the mem/static pair");
    o.summary = std::to_string(witnesses.size()) + " witnesses";
    return o;
}

Outcome static_is_propositional(const std::vector<Term> &pool) {
    Outcome o;
    const CongruenceKind kind = CongruenceKind::static_over(sigma_ab);
    std::vector<std::vector<bool>> tables;
    std::vector<EvalTree> trees;
    for(const Term &t : pool) {
        const PropFormula f = to_propositional(t);
        std::vector<bool> row;
        for(bool va : {true, false})
            for(bool vb : {true, false})
                row.push_back(evaluate_formula(f, {{ab[0], va}, {ab[1], vb}}));
        tables.push_back(std::move(row));
        trees.push_back(semantic_tree(t, kind));
    }
    std::size_t pairs = 0;
    for(std::size_t i = 0; i < pool.size(); ++i) {
        for(std::size_t j = i + 1; j < pool.size(); ++j) {
            ++pairs;
            if((trees[i] == trees[j]) != (tables[i] == tables[j]))
                o.fail(render_term(pool[i]) + " vs " + render_term(pool[j]));
        }
    }
    o.summary = std::to_string(pairs) + " pairs";
    return o;
}

Outcome law_suite() {
    Outcome o;
    const std::vector<Term> forms = basic_forms();
    std::vector<Term> terms = oracle::all_terms(ab, 3);
    for(const Term &t : oracle::random_pool(random_pool_seed, random_pool_size, random_pool_max_conds))
        terms.push_back(t);
    std::size_t checks = 0;
    const auto check = [&](bool ok, const std::string &what) {
        ++checks;
        if(!ok)
            o.fail(what);
    };

    for(const Term &p : forms) {
        const std::string s = render_term(p);
        check(rp_tree(se(p)) == se(rpf(p)), "rp commutation at " + s);
        check(cr_tree(se(p)) == se(cf(p)), "cr commutation at " + s);
        check(mem_tree(se(p)) == se(mf(p)), "mem commutation at " + s);
        for(const Atom &a : ab) {
            for(Side side : {Side::True, Side::False}) {
                check(depth(rp_aux(side, a, p)) <= depth(p), "rp depth at " + s);
                check(depth(cr_aux(side, a, p)) <= depth(p), "cr depth at " + s);
                check(depth(mem_aux(side, a, p)) <= depth(p), "mem depth at " + s);
                const Term f = rp_aux(side, a, p);
                for(Side again : {Side::True, Side::False}) {
                    check(rp_aux(again, a, f) == f, "rp absorption at " + s);
                    const EvalTree x = rp_tree_aux(side, a, se(p));
                    check(rp_tree_aux(again, a, x) == x, "rp tree absorption at " + s);
                }
            }
        }
        for(Side s1 : {Side::True, Side::False}) {
            for(Side s2 : {Side::True, Side::False}) {
                check(mem_aux(s1, ab[0], mem_aux(s2, ab[1], p)) ==
                          mem_aux(s2, ab[1], mem_aux(s1, ab[0], p)),
                      "mem aux commutation at " + s);
                check(mem_tree_aux(s1, ab[0], mem_tree_aux(s2, ab[1], se(p))) ==
                          mem_tree_aux(s2, ab[1], mem_tree_aux(s1, ab[0], se(p))),
                      "mem tree aux commutation at " + s);
            }
        }
    }

    for(const Term &t : terms) {
        const std::string s = render_term(t);
        const Term b = bf(t);
        check(is_basic_form(b) && bf(b) == b, "bf fixpoint at " + s);
        const Term r = rpbf(t);
        check(is_rp_basic_form(r) && rpbf(r) == r, "rpbf fixpoint at " + s);
        const Term c = cbf(t);
        check(is_cr_basic_form(c) && cbf(c) == c, "cbf fixpoint at " + s);
        const Term m = mbf(t);
        check(is_mem_basic_form(m) && mbf(m) == m, "mbf fixpoint at " + s);
        for(const Sigma &sigma : {sigma_ab, sigma_ba}) {
            const Term st = sbf(sigma, t);
            check(is_st_basic_form(st, sigma) && sbf(sigma, st) == st, "sbf fixpoint at " + s);
        }
    }
    o.summary = std::to_string(checks) + " checks";
    return o;
}

Outcome register_example() {
    Outcome o;
    const Term twice = desugar(parse_scl("(\"(n=n+1)\" && \"(n=n+1)\") && \"(n==2)\""));
    const Term once = desugar(parse_scl("\"(n=n+1)\" && \"(n==2)\""));
    const std::vector<std::tuple<std::int64_t, bool, bool>> expected{{0, true, false}, {1, false, true}};
    for(const auto &[n, twice_value, once_value] : expected) {
        const bool got_twice = evaluate_with_oracle(twice, make_register_oracle(RegisterState{{"n", n}}));
        const bool got_once = evaluate_with_oracle(once, make_register_oracle(RegisterState{{"n", n}}));
        if(got_twice != twice_value || got_once != once_value)
            o.fail("n=" + std::to_string(n) + " gave " + (got_twice ? "true" : "false") + "/" +
                   (got_once ? "true" : "false"));
    }

    const auto exprs = oracle::all_expressions(ab, 3);
    std::size_t runs = 0;
    for(const SclExpr &e : exprs) {
        const Term t = desugar(e);
        for(bool va : {true, false}) {
            for(bool vb : {true, false}) {
                ++runs;
                const std::vector<std::pair<Atom, bool>> values{{ab[0], va}, {ab[1], vb}};
                const bool got =
                    evaluate_with_oracle(t, [&](const Atom &x) { return x == ab[0] ? va : vb; });
                if(got != oracle::classical_value(e, values))
                    o.fail(render_scl(e));
            }
        }
    }
    o.summary = "register runs for n=0,1; " + std::to_string(exprs.size()) + " expressions, " +
                std::to_string(runs) + " stateless runs";
    return o;
}

// Whether static(ab) and static(ba) identify the same pairs of the pool.
std::string sigma_order_report(const std::vector<Term> &pool) {
    std::vector<EvalTree> by_ab;
    std::vector<EvalTree> by_ba;
    for(const Term &t : pool) {
        by_ab.push_back(sse(sigma_ab, t));
        by_ba.push_back(sse(sigma_ba, t));
    }
    std::size_t differ = 0;
    std::size_t pairs = 0;
    for(std::size_t i = 0; i < pool.size(); ++i) {
        for(std::size_t j = i + 1; j < pool.size(); ++j) {
            ++pairs;
            if((by_ab[i] == by_ab[j]) != (by_ba[i] == by_ba[j]))
                ++differ;
        }
    }
    return "static(ab) and static(ba) verdicts differ on " + std::to_string(differ) + " of " +
           std::to_string(pairs) + " pairs";
}

} // namespace

int main() {
    const std::vector<Term> pool = completeness_pool();
    const std::size_t basic_count = basic_forms().size();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden trees", golden_trees},
        {"golden tables", golden_tables},
        {"dual-realization completeness", [&] { return completeness(pool, basic_count); }},
        {"axiom soundness", soundness},
        {"proper inclusions", inclusions},
        {"static equals propositional", [&] { return static_is_propositional(pool); }},
        {"commutation, absorption, depth and fixpoint laws", law_suite},
        {"register example and stateless evaluation", register_example},
    };

    bool all = true;
    for(std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch(const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": "
                  << criteria[i].first << " (" << o.summary << ")\n";
        for(const std::string &p : o.problems)
            std::cout << "  " << p << '\n';
    }
    std::cout << "info: " << sigma_order_report(pool) << '\n';
    return all ? 0 : 1;
}
