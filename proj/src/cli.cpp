#include "condalg/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "condalg/axioms.hpp"
#include "condalg/congruence.hpp"
#include "condalg/normalizer.hpp"
#include "condalg/shortcircuit.hpp"
#include "condalg/syntax.hpp"
#include "condalg/tree_transform.hpp"

namespace condalg {

namespace {

struct Options {
    std::uint64_t max_nodes = NodeBudget::default_max_nodes;
    std::string out_path;

    std::string system;
    std::string semantics = "se";
    std::optional<std::string> sigma;
    std::string format = "text";
    bool paths = false;
    std::vector<std::string> operands;

    std::size_t pool_depth = 1;
    std::uint64_t instance_budget = AxiomCheckOptions{}.max_instances_per_axiom;
    std::size_t shown_failures = 3;

    std::string state;
    bool as_term = false;
};

class UsageError : public Error {
public:
    using Error::Error;
};

CongruenceKind congruence_from(const std::string &system, const std::optional<std::string> &sigma) {
    if(system == "static") {
        if(!sigma)
            throw UsageError("--sigma is required with --system static");
        return CongruenceKind::static_over(parse_sigma(*sigma));
    }
    if(sigma)
        throw UsageError("--sigma is only allowed with --system static");
    if(system == "free")
        return CongruenceKind::free();
    if(system == "rp")
        return CongruenceKind::rp();
    if(system == "cr")
        return CongruenceKind::cr();
    if(system == "mem")
        return CongruenceKind::mem();
    throw UsageError("unknown system '" + system + "'");
}

TreeFormat tree_format(const std::string &format) {
    if(format == "json")
        return TreeFormat::Json;
    if(format == "dot")
        return TreeFormat::Dot;
    return TreeFormat::Ascii;
}

int cmd_normalize(const Options &o, std::ostream &out) {
    const CongruenceKind kind = congruence_from(o.system, o.sigma);
    const Term t = parse_term(o.operands.at(0));
    out << render_term(normal_form(t, kind, NodeBudget{o.max_nodes})) << '\n';
    return exit_status::ok;
}

int cmd_tree(const Options &o, std::ostream &out) {
    const NodeBudget budget{o.max_nodes};
    const Term t = parse_term(o.operands.at(0));
    if(o.semantics != "sse" && o.sigma)
        throw UsageError("--sigma is only allowed with --semantics sse");
    EvalTree x = EvalTree::leaf_true();
    if(o.semantics == "se")
        x = se(t, budget);
    else if(o.semantics == "rpse")
        x = rpse(t, budget);
    else if(o.semantics == "cse")
        x = cse(t, budget);
    else if(o.semantics == "mse")
        x = mse(t, budget);
    else {
        if(!o.sigma)
            throw UsageError("--sigma is required with --semantics sse");
        x = sse(parse_sigma(*o.sigma), t, budget);
    }

    if(o.paths) {
        if(o.format != "text")
            throw UsageError("--paths supports only the text format");
        for(const Evaluation &e : evaluations(x))
            out << render_path(e.path) << " -> " << (e.result ? 'T' : 'F') << '\n';
        return exit_status::ok;
    }
    out << render_tree(x, tree_format(o.format));
    if(o.format != "dot")
        out << '\n';
    return exit_status::ok;
}

int cmd_equiv(const Options &o, std::ostream &out) {
    const CongruenceKind kind = congruence_from(o.system, o.sigma);
    const Term p = parse_term(o.operands.at(0));
    const Term q = parse_term(o.operands.at(1));
    const bool same = equivalent(p, q, kind, NodeBudget{o.max_nodes});
    out << (same ? "equivalent" : "not equivalent") << '\n';
    return same ? exit_status::ok : exit_status::negative;
}

int cmd_table(const Options &o, std::ostream &out) {
    if(o.format == "dot")
        throw UsageError("tables support the text and json formats");
    const Term t = parse_term(o.operands.at(0));
    const TruthTable table = truth_table(t, parse_sigma(o.sigma.value_or("")));
    if(o.format == "json")
        out << render_table_json(table) << '\n';
    else
        out << render_table_text(table, render_term(t));
    return exit_status::ok;
}

int cmd_desugar(const Options &o, std::ostream &out) {
    out << render_term(desugar(parse_scl(o.operands.at(0)))) << '\n';
    return exit_status::ok;
}

std::string render_substitution(const AxiomInstanceReport &r) {
    std::string out;
    for(const auto &[name, term] : r.substitution) {
        if(!out.empty())
            out += ", ";
        out += name + "=" + render_term(term);
    }
    return out;
}

int cmd_check_axioms(const Options &o, std::ostream &out) {
    const AxiomSystem system = parse_axiom_system(o.system);
    std::string semantics = o.semantics;
    if(semantics.empty()) {
        const CongruenceKind own = matching_congruence(system, Sigma());
        semantics = own.is_static() ? "static" : own.name();
    }
    const CongruenceKind kind = congruence_from(semantics, o.sigma);

    const std::vector<Atom> atoms{Atom("a"), Atom("b")};
    std::vector<Term> pool = enumerate_basic_forms(atoms, o.pool_depth);
    for(const Atom &a : atoms)
        pool.push_back(Term::make_atom(a));

    AxiomCheckOptions options;
    options.max_instances_per_axiom = o.instance_budget;
    options.node_budget = NodeBudget{o.max_nodes};
    const std::vector<AxiomInstanceReport> reports = check_axioms(system, pool, kind, options);

    out << axiom_system_name(system) << " under " << kind.name() << ", pool of " << pool.size()
        << " terms\n";
    std::uint64_t holds = 0;
    std::uint64_t fails = 0;
    std::uint64_t over = 0;
    for(const AxiomScheme &scheme : axiom_schemes(system)) {
        std::uint64_t n = 0;
        std::uint64_t ok = 0;
        std::uint64_t bad = 0;
        std::vector<std::string> lines;
        for(const AxiomInstanceReport &r : reports) {
            if(r.axiom_name != scheme.name)
                continue;
            switch(r.verdict) {
            case AxiomInstanceReport::Verdict::Holds:
                ++n;
                ++ok;
                break;
            case AxiomInstanceReport::Verdict::Fails:
                ++n;
                ++bad;
                if(lines.size() < o.shown_failures)
                    lines.push_back("  fails: " + render_substitution(r) + ": " +
                                    render_term(*r.lhs) + "  vs  " + render_term(*r.rhs));
                break;
            case AxiomInstanceReport::Verdict::BudgetExceeded:
                ++over;
                if(lines.size() < o.shown_failures)
                    lines.push_back("  over budget: " +
                                    (r.substitution.empty() ? r.detail
                                                            : render_substitution(r) + ": " + r.detail));
                break;
            }
        }
        holds += ok;
        fails += bad;
        out << scheme.name << ": " << n << " instances, " << ok << " hold, " << bad << " fail\n";
        for(const std::string &line : lines)
            out << line << '\n';
    }
    out << "total: " << holds << " hold, " << fails << " fail, " << over << " over budget\n";
    if(fails > 0)
        return exit_status::negative;
    return over > 0 ? exit_status::budget : exit_status::ok;
}

int cmd_eval(const Options &o, std::ostream &out) {
    const Term t = o.as_term ? parse_term(o.operands.at(0)) : desugar(parse_scl(o.operands.at(0)));
    auto state = std::make_shared<RegisterState>(parse_register_state(o.state));
    const bool result = evaluate_with_oracle(t, make_register_oracle(state));
    out << (result ? "true" : "false") << '\n';
    out << "state: " << render_register_state(*state) << '\n';
    return exit_status::ok;
}

int cmd_witnesses(std::ostream &out) {
    bool all = true;
    for(const SeparationWitness &w : separation_witnesses()) {
        out << w.finer.name() << " < " << w.coarser.name() << ": " << render_term(w.p) << "  vs  "
            << render_term(w.q) << ": " << (w.verified ? "verified" : "NOT verified") << '\n';
        all = all && w.verified;
    }
    return all ? exit_status::ok : exit_status::negative;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Conditional proposition algebra: normal forms, evaluation trees and congruences",
                 "condalg"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-nodes", o.max_nodes, "Node budget for intermediate terms and trees")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", o.out_path, "Write the output to this file");

    const std::vector<std::string> systems{"free", "rp", "cr", "mem", "static"};

    auto *normalize = app.add_subcommand("normalize", "Print the normal form of a term");
    normalize->add_option("--system", o.system, "Congruence")->required()->check(CLI::IsMember(systems));
    normalize->add_option("--sigma", o.sigma, "Atom sequence for the static congruence");
    normalize->add_option("term", o.operands, "Term")->required()->expected(1);

    auto *tree = app.add_subcommand("tree", "Print an evaluation tree");
    tree->add_option("--semantics", o.semantics, "Evaluation function")
        ->check(CLI::IsMember({"se", "rpse", "cse", "mse", "sse"}));
    tree->add_option("--sigma", o.sigma, "Atom sequence for sse");
    tree->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    tree->add_flag("--paths", o.paths, "List every evaluation instead of the tree");
    tree->add_option("term", o.operands, "Term")->required()->expected(1);

    auto *equiv = app.add_subcommand("equiv", "Decide whether two terms are congruent");
    equiv->add_option("--system", o.system, "Congruence")->required()->check(CLI::IsMember(systems));
    equiv->add_option("--sigma", o.sigma, "Atom sequence for the static congruence");
    equiv->add_option("terms", o.operands, "Two terms")->required()->expected(2);

    auto *table = app.add_subcommand("table", "Print the truth table of a term");
    table->add_option("--sigma", o.sigma, "Atom sequence")->required();
    table->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    table->add_option("term", o.operands, "Term")->required()->expected(1);

    auto *desugar_cmd = app.add_subcommand("desugar", "Translate a short-circuit expression");
    desugar_cmd->add_option("expr", o.operands, "Expression")->required()->expected(1);

    auto *axioms = app.add_subcommand("check-axioms", "Check axiom instances over a term pool");
    axioms->add_option("--system", o.system, "Axiom system")
        ->required()
        ->check(CLI::IsMember({"CP", "CPrp", "CPcr", "CPmem", "CPs", "CPst"}));
    axioms->add_option("--semantics", o.semantics, "Congruence (defaults to the system's own)")
        ->check(CLI::IsMember(systems));
    axioms->add_option("--sigma", o.sigma, "Atom sequence for a static semantics");
    axioms->add_option("--pool-depth", o.pool_depth,
                       "Pool is every basic form over a, b of at most this depth, plus a and b");
    axioms->add_option("--budget", o.instance_budget, "Maximum instances per axiom")
        ->check(CLI::PositiveNumber);
    axioms->add_option("--show-failures", o.shown_failures, "Failing instances printed per axiom");

    auto *eval = app.add_subcommand("eval", "Evaluate against the register machine");
    eval->add_option("--state", o.state, "Initial registers, e.g. n=0,m=3");
    eval->add_flag("--term", o.as_term, "Read the operand as a term instead of an expression");
    eval->add_option("expr", o.operands, "Expression")->required()->expected(1);

    auto *witnesses = app.add_subcommand("witnesses", "Verify the separating pairs of the chain");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch(const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_status::ok : exit_status::usage;
    }

    std::ostringstream buffer;
    int status = exit_status::ok;
    try {
        if(normalize->parsed())
            status = cmd_normalize(o, buffer);
        else if(tree->parsed())
            status = cmd_tree(o, buffer);
        else if(equiv->parsed())
            status = cmd_equiv(o, buffer);
        else if(table->parsed())
            status = cmd_table(o, buffer);
        else if(desugar_cmd->parsed())
            status = cmd_desugar(o, buffer);
        else if(axioms->parsed()) {
            if(axioms->count("--semantics") == 0)
                o.semantics.clear();
            status = cmd_check_axioms(o, buffer);
        } else if(eval->parsed())
            status = cmd_eval(o, buffer);
        else if(witnesses->parsed())
            status = cmd_witnesses(buffer);
    } catch(const BudgetExceeded &e) {
        err << "error: " << e.what() << '\n';
        return exit_status::budget;
    } catch(const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_status::usage;
    }

    if(o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path);
        file << buffer.str();
        if(!file) {
            err << "error: cannot write " << o.out_path << '\n';
            return exit_status::usage;
        }
    }
    return status;
}

} // namespace condalg
