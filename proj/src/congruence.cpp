#include "condalg/congruence.hpp"

#include <algorithm>
#include <optional>

#include <nlohmann/json.hpp>

#include "condalg/normalizer.hpp"
#include "condalg/syntax.hpp"
#include "condalg/tree_transform.hpp"

namespace condalg {

const Sigma &CongruenceKind::sigma() const {
    if(!is_static())
        throw Error("congruence " + name() + " has no atom sequence");
    return sigma_;
}

std::string CongruenceKind::name() const {
    switch(tag_) {
    case Tag::Free:
        return "free";
    case Tag::Rp:
        return "rp";
    case Tag::Cr:
        return "cr";
    case Tag::Mem:
        return "mem";
    case Tag::Static:
        return "static(" + render_sigma(sigma_) + ")";
    }
    return "?";
}

Term normal_form(const Term &t, const CongruenceKind &kind, const NodeBudget &budget) {
    switch(kind.tag()) {
    case CongruenceKind::Tag::Free:
        return bf(t, budget);
    case CongruenceKind::Tag::Rp:
        return rpbf(t, budget);
    case CongruenceKind::Tag::Cr:
        return cbf(t, budget);
    case CongruenceKind::Tag::Mem:
        return mbf(t, budget);
    case CongruenceKind::Tag::Static:
        return sbf(kind.sigma(), t, budget);
    }
    return t;
}

EvalTree semantic_tree(const Term &t, const CongruenceKind &kind, const NodeBudget &budget) {
    switch(kind.tag()) {
    case CongruenceKind::Tag::Free:
        return se(t, budget);
    case CongruenceKind::Tag::Rp:
        return rpse(t, budget);
    case CongruenceKind::Tag::Cr:
        return cse(t, budget);
    case CongruenceKind::Tag::Mem:
        return mse(t, budget);
    case CongruenceKind::Tag::Static:
        return sse(kind.sigma(), t, budget);
    }
    return se(t, budget);
}

bool equivalent(const Term &p, const Term &q, const CongruenceKind &kind,
                const NodeBudget &budget) {
    if(kind.is_static()) {
        require_covered(kind.sigma(), p);
        require_covered(kind.sigma(), q);
    }
    return semantic_tree(p, kind, budget) == semantic_tree(q, kind, budget);
}

// PropFormula

struct PropFormula::Node {
    Kind kind;
    std::optional<Atom> atom;
    std::vector<PropFormula> operands;
};

PropFormula PropFormula::make_true() {
    static const PropFormula f(std::make_shared<const Node>(Node{Kind::True, std::nullopt, {}}));
    return f;
}

PropFormula PropFormula::make_false() {
    static const PropFormula f(std::make_shared<const Node>(Node{Kind::False, std::nullopt, {}}));
    return f;
}

PropFormula PropFormula::make_atom(Atom a) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}}));
}

PropFormula PropFormula::make_not(PropFormula f) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(f)}}));
}

PropFormula PropFormula::make_and(PropFormula lhs, PropFormula rhs) {
    return PropFormula(std::make_shared<const Node>(
        Node{Kind::And, std::nullopt, {std::move(lhs), std::move(rhs)}}));
}

PropFormula PropFormula::make_or(PropFormula lhs, PropFormula rhs) {
    return PropFormula(std::make_shared<const Node>(
        Node{Kind::Or, std::nullopt, {std::move(lhs), std::move(rhs)}}));
}

PropFormula::Kind PropFormula::kind() const noexcept { return node_->kind; }

const Atom &PropFormula::atom() const {
    if(!node_->atom)
        throw Error("formula is not an atom");
    return *node_->atom;
}

const PropFormula &PropFormula::lhs() const {
    if(node_->operands.empty())
        throw Error("formula has no operands");
    return node_->operands[0];
}

const PropFormula &PropFormula::rhs() const {
    if(node_->operands.size() < 2)
        throw Error("formula has no right operand");
    return node_->operands[1];
}

bool operator==(const PropFormula &lhs, const PropFormula &rhs) {
    if(lhs.node_ == rhs.node_)
        return true;
    return lhs.node_->kind == rhs.node_->kind && lhs.node_->atom == rhs.node_->atom &&
           lhs.node_->operands == rhs.node_->operands;
}

PropFormula to_propositional(const Term &t) {
    switch(t.kind()) {
    case Term::Kind::True:
        return PropFormula::make_true();
    case Term::Kind::False:
        return PropFormula::make_false();
    case Term::Kind::Atom:
        return PropFormula::make_atom(t.atom());
    case Term::Kind::Cond: {
        const PropFormula cond = to_propositional(t.condition());
        return PropFormula::make_or(
            PropFormula::make_and(to_propositional(t.truth_branch()), cond),
            PropFormula::make_and(PropFormula::make_not(cond), to_propositional(t.false_branch())));
    }
    }
    return PropFormula::make_true();
}

namespace {

void render_formula_into(const PropFormula &f, std::string &out) {
    switch(f.kind()) {
    case PropFormula::Kind::True:
        out += "true";
        return;
    case PropFormula::Kind::False:
        out += "false";
        return;
    case PropFormula::Kind::Atom:
        out += render_atom(f.atom());
        return;
    case PropFormula::Kind::Not:
        out += '!';
        render_formula_into(f.lhs(), out);
        return;
    case PropFormula::Kind::And:
    case PropFormula::Kind::Or:
        out += '(';
        render_formula_into(f.lhs(), out);
        out += f.kind() == PropFormula::Kind::And ? " & " : " | ";
        render_formula_into(f.rhs(), out);
        out += ')';
        return;
    }
}

bool lookup(const std::vector<std::pair<Atom, bool>> &assignment, const Atom &a) {
    for(const auto &[atom, value] : assignment) {
        if(atom == a)
            return value;
    }
    throw AlphabetError("no value assigned to atom " + render_atom(a));
}

} // namespace

std::string render_formula(const PropFormula &f) {
    std::string out;
    render_formula_into(f, out);
    return out;
}

bool evaluate_formula(const PropFormula &f, const std::vector<std::pair<Atom, bool>> &assignment) {
    switch(f.kind()) {
    case PropFormula::Kind::True:
        return true;
    case PropFormula::Kind::False:
        return false;
    case PropFormula::Kind::Atom:
        return lookup(assignment, f.atom());
    case PropFormula::Kind::Not:
        return !evaluate_formula(f.lhs(), assignment);
    case PropFormula::Kind::And:
        return evaluate_formula(f.lhs(), assignment) && evaluate_formula(f.rhs(), assignment);
    case PropFormula::Kind::Or:
        return evaluate_formula(f.lhs(), assignment) || evaluate_formula(f.rhs(), assignment);
    }
    return false;
}

TruthTable truth_table(const Term &t, const Sigma &sigma) {
    if(sigma.size() > max_table_atoms)
        throw SigmaError("truth tables support at most " + std::to_string(max_table_atoms) +
                         " atoms, got " + std::to_string(sigma.size()));
    require_covered(sigma, t);
    const PropFormula formula = to_propositional(t);
    const std::size_t n = sigma.size();
    const std::size_t count = std::size_t{1} << n;

    TruthTable table{sigma, {}};
    table.rows.reserve(count);
    std::vector<std::pair<Atom, bool>> assignment;
    for(const Atom &a : sigma.atoms())
        assignment.emplace_back(a, true);
    for(std::size_t row = 0; row < count; ++row) {
        // Bit (n-1-i) of `row` set means atom i is false.
        TruthTable::Row r;
        for(std::size_t i = 0; i < n; ++i) {
            const bool value = ((row >> (n - 1 - i)) & 1U) == 0;
            assignment[i].second = value;
            r.assignment.push_back(value);
        }
        r.value = evaluate_formula(formula, assignment);
        table.rows.push_back(std::move(r));
    }
    return table;
}

std::string render_table_text(const TruthTable &table, const std::string &label) {
    std::vector<std::string> headers;
    for(const Atom &a : table.sigma.atoms())
        headers.push_back(render_atom(a));

    std::string out;
    auto pad = [&out](const std::string &cell, std::size_t width) {
        out += cell;
        out.append(width - cell.size(), ' ');
    };
    for(const std::string &h : headers) {
        out += h;
        out += ' ';
    }
    out += "| " + label + "\n";
    for(const TruthTable::Row &row : table.rows) {
        for(std::size_t i = 0; i < headers.size(); ++i) {
            pad(row.assignment[i] ? "T" : "F", headers[i].size());
            out += ' ';
        }
        out += "| ";
        out += row.value ? 'T' : 'F';
        out += '\n';
    }
    return out;
}

std::string render_table_json(const TruthTable &table) {
    nlohmann::ordered_json j;
    j["sigma"] = nlohmann::ordered_json::array();
    for(const Atom &a : table.sigma.atoms())
        j["sigma"].push_back(a.name());
    j["rows"] = nlohmann::ordered_json::array();
    for(const TruthTable::Row &row : table.rows) {
        nlohmann::ordered_json r;
        r["assignment"] = row.assignment;
        r["value"] = row.value;
        j["rows"].push_back(std::move(r));
    }
    return j.dump();
}

bool static_matches_tautology(const Term &p, const Term &q, const Sigma &sigma) {
    const bool by_trees = equivalent(p, q, CongruenceKind::static_over(sigma));
    const bool by_tables = truth_table(p, sigma).rows == truth_table(q, sigma).rows;
    return by_trees == by_tables;
}

std::vector<SeparationWitness> separation_witnesses() {
    const Term t = Term::make_true();
    const Term f = Term::make_false();
    const Term a = Term::make_atom("a");
    const Term b = Term::make_atom("b");
    auto cond = [](Term x, Term y, Term z) {
        return Term::make_cond(std::move(x), std::move(y), std::move(z));
    };

    std::vector<SeparationWitness> out{
        {cond(t, a, a), cond(t, a, cond(f, a, f)), CongruenceKind::free(), CongruenceKind::rp()},
        {cond(cond(t, a, f), a, f), cond(t, a, f), CongruenceKind::rp(), CongruenceKind::cr()},
        {cond(t, a, cond(f, b, cond(t, a, f))), cond(t, a, cond(f, b, f)), CongruenceKind::cr(),
         CongruenceKind::mem()},
        {cond(f, a, f), f, CongruenceKind::mem(),
         CongruenceKind::static_over(Sigma({Atom("a")}))},
    };
    for(SeparationWitness &w : out)
        w.verified = !equivalent(w.p, w.q, w.finer) && equivalent(w.p, w.q, w.coarser);
    return out;
}

} // namespace condalg
