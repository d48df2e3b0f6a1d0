#include "condalg/eval_tree.hpp"

#include <limits>
#include <optional>

#include <nlohmann/json.hpp>

#include "condalg/syntax.hpp"

namespace condalg {

struct EvalTree::Node {
    bool value = false; // leaves only
    std::optional<Atom> atom;
    std::vector<EvalTree> children; // empty for leaves, {left, right} otherwise
    std::uint64_t size = 1;
    std::size_t hash = 0;
};

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    const auto max = std::numeric_limits<std::uint64_t>::max();
    return a > max - b ? max : a + b;
}

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

EvalTree checked_node(const Atom &a, EvalTree left, EvalTree right, const NodeBudget &budget) {
    EvalTree x = EvalTree::node(a, std::move(left), std::move(right));
    if(x.size() > budget.max_nodes)
        throw BudgetExceeded("evaluation tree exceeds node budget of " +
                             std::to_string(budget.max_nodes));
    return x;
}

} // namespace

EvalTree EvalTree::leaf(bool value) {
    static const EvalTree t(std::make_shared<const Node>(Node{true, std::nullopt, {}, 1, 0x71}));
    static const EvalTree f(std::make_shared<const Node>(Node{false, std::nullopt, {}, 1, 0xf1}));
    return value ? t : f;
}

EvalTree EvalTree::node(Atom a, EvalTree left, EvalTree right) {
    const std::uint64_t size = saturating_add(saturating_add(1, left.size()), right.size());
    std::size_t h = mix(std::hash<std::string>{}(a.name()), left.hash());
    h = mix(h, right.hash());
    return EvalTree(std::make_shared<const Node>(
        Node{false, std::move(a), {std::move(left), std::move(right)}, size, h}));
}

bool EvalTree::is_leaf() const noexcept { return !node_->atom.has_value(); }

bool EvalTree::leaf_value() const {
    if(!is_leaf())
        throw Error("evaluation tree is not a leaf");
    return node_->value;
}

const Atom &EvalTree::atom() const {
    if(is_leaf())
        throw Error("evaluation tree is a leaf");
    return *node_->atom;
}

const EvalTree &EvalTree::left() const {
    if(is_leaf())
        throw Error("evaluation tree is a leaf");
    return node_->children[0];
}

const EvalTree &EvalTree::right() const {
    if(is_leaf())
        throw Error("evaluation tree is a leaf");
    return node_->children[1];
}

std::uint64_t EvalTree::size() const noexcept { return node_->size; }
std::size_t EvalTree::hash() const noexcept { return node_->hash; }

bool operator==(const EvalTree &lhs, const EvalTree &rhs) {
    if(lhs.node_ == rhs.node_)
        return true;
    const EvalTree::Node &a = *lhs.node_;
    const EvalTree::Node &b = *rhs.node_;
    if(a.hash != b.hash || a.size != b.size || a.atom.has_value() != b.atom.has_value())
        return false;
    if(!a.atom)
        return a.value == b.value;
    return *a.atom == *b.atom && a.children[0] == b.children[0] && a.children[1] == b.children[1];
}

EvalTree leaf_replace(const EvalTree &x, const EvalTree &for_true, const EvalTree &for_false,
                      const NodeBudget &budget) {
    if(x.is_leaf())
        return x.leaf_value() ? for_true : for_false;
    return checked_node(x.atom(), leaf_replace(x.left(), for_true, for_false, budget),
                        leaf_replace(x.right(), for_true, for_false, budget), budget);
}

EvalTree se(const Term &t, const NodeBudget &budget) {
    switch(t.kind()) {
    case Term::Kind::True:
        return EvalTree::leaf_true();
    case Term::Kind::False:
        return EvalTree::leaf_false();
    case Term::Kind::Atom:
        return EvalTree::node(t.atom(), EvalTree::leaf_true(), EvalTree::leaf_false());
    case Term::Kind::Cond:
        return leaf_replace(se(t.condition(), budget), se(t.truth_branch(), budget),
                            se(t.false_branch(), budget), budget);
    }
    return EvalTree::leaf_false();
}

namespace {

void collect_evaluations(const EvalTree &x, std::vector<std::pair<Atom, bool>> &prefix,
                         std::vector<Evaluation> &out) {
    if(x.is_leaf()) {
        out.push_back({prefix, x.leaf_value()});
        return;
    }
    prefix.emplace_back(x.atom(), true);
    collect_evaluations(x.left(), prefix, out);
    prefix.back().second = false;
    collect_evaluations(x.right(), prefix, out);
    prefix.pop_back();
}

void render_ascii(const EvalTree &x, std::string &out) {
    if(x.is_leaf()) {
        out += x.leaf_value() ? 'T' : 'F';
        return;
    }
    out += '(';
    render_ascii(x.left(), out);
    out += " <" + render_atom(x.atom()) + "> ";
    render_ascii(x.right(), out);
    out += ')';
}

nlohmann::ordered_json to_json(const EvalTree &x) {
    if(x.is_leaf())
        return x.leaf_value() ? "T" : "F";
    nlohmann::ordered_json j;
    j["atom"] = x.atom().name();
    j["t"] = to_json(x.left());
    j["f"] = to_json(x.right());
    return j;
}

std::string dot_escape(const std::string &s) {
    std::string out;
    for(char c : s) {
        if(c == '\\' || c == '"')
            out += '\\';
        out += c;
    }
    return out;
}

std::size_t render_dot(const EvalTree &x, std::size_t &next_id, std::string &out) {
    const std::size_t id = next_id++;
    if(x.is_leaf()) {
        out += "  n" + std::to_string(id) + " [label=\"" + (x.leaf_value() ? "T" : "F") +
               "\", shape=box];\n";
        return id;
    }
    out += "  n" + std::to_string(id) + " [label=\"" + dot_escape(x.atom().name()) + "\"];\n";
    const std::size_t left = render_dot(x.left(), next_id, out);
    const std::size_t right = render_dot(x.right(), next_id, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(left) + " [label=\"T\"];\n";
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(right) + " [label=\"F\"];\n";
    return id;
}

} // namespace

std::vector<Evaluation> evaluations(const EvalTree &x) {
    std::vector<Evaluation> out;
    std::vector<std::pair<Atom, bool>> prefix;
    collect_evaluations(x, prefix, out);
    return out;
}

Term tree_to_term(const EvalTree &x) {
    if(x.is_leaf())
        return Term::make_constant(x.leaf_value());
    return Term::make_cond(tree_to_term(x.left()), Term::make_atom(x.atom()),
                           tree_to_term(x.right()));
}

std::string render_tree(const EvalTree &x, TreeFormat format) {
    std::string out;
    switch(format) {
    case TreeFormat::Ascii:
        render_ascii(x, out);
        break;
    case TreeFormat::Json:
        out = to_json(x).dump();
        break;
    case TreeFormat::Dot: {
        out = "digraph evaluation_tree {\n";
        std::size_t next_id = 0;
        render_dot(x, next_id, out);
        out += "}\n";
        break;
    }
    }
    return out;
}

std::string render_path(const std::vector<std::pair<Atom, bool>> &path) {
    if(path.empty())
        return "-";
    std::string out;
    for(const auto &[atom, value] : path) {
        if(!out.empty())
            out += ' ';
        out += render_atom(atom);
        out += value ? 'T' : 'F';
    }
    return out;
}

bool evaluate_with_oracle(const Term &t, const AtomOracle &oracle) {
    // Iterative on the branch chain so long right spines do not recurse.
    const Term *current = &t;
    while(true) {
        switch(current->kind()) {
        case Term::Kind::True:
            return true;
        case Term::Kind::False:
            return false;
        case Term::Kind::Atom:
            return oracle(current->atom());
        case Term::Kind::Cond:
            current = evaluate_with_oracle(current->condition(), oracle) ? &current->truth_branch()
                                                                          : &current->false_branch();
            break;
        }
    }
}

} // namespace condalg
