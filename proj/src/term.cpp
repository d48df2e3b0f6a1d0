#include "condalg/term.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <optional>

#include "condalg/syntax.hpp"

namespace condalg {

Atom::Atom(std::string name) : name_(std::move(name)) {
    if(name_.empty())
        throw Error("atom name must be nonempty");
    if(name_.find('"') != std::string::npos)
        throw Error("atom name must not contain a double quote");
}

Sigma::Sigma(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    AtomSet seen;
    for(const Atom &a : atoms_) {
        if(!seen.insert(a).second)
            throw SigmaError("atom sequence repeats atom " + render_atom(a));
    }
}

bool Sigma::contains(const Atom &a) const {
    return std::find(atoms_.begin(), atoms_.end(), a) != atoms_.end();
}

AtomSet Sigma::alphabet() const { return AtomSet(atoms_.begin(), atoms_.end()); }

Sigma Sigma::prefix() const {
    Sigma rest;
    rest.atoms_.assign(atoms_.begin(), atoms_.end() - 1);
    return rest;
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    const auto max = std::numeric_limits<std::uint64_t>::max();
    return a > max - b ? max : a + b;
}

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

struct Term::Node {
    Node(Kind k, std::optional<Atom> a, std::size_t h)
        : kind(k), atom(std::move(a)), children{Term(Empty{}), Term(Empty{}), Term(Empty{})},
          hash(h) {}
    Node(Term t, Term c, Term f, std::uint64_t s, std::size_t h)
        : kind(Kind::Cond), children{std::move(t), std::move(c), std::move(f)}, size(s), hash(h) {}

    Kind kind;
    std::optional<Atom> atom;
    std::array<Term, 3> children; // truth branch, condition, false branch
    std::uint64_t size = 1;
    std::size_t hash = 0;
};

Term Term::make_true() {
    static const Term t(std::make_shared<const Node>(Kind::True, std::nullopt, 0x51));
    return t;
}

Term Term::make_false() {
    static const Term f(std::make_shared<const Node>(Kind::False, std::nullopt, 0xf0));
    return f;
}

Term Term::make_atom(Atom a) {
    const std::size_t h = mix(0xa7, std::hash<std::string>{}(a.name()));
    return Term(std::make_shared<const Node>(Kind::Atom, std::move(a), h));
}

Term Term::make_cond(Term truth_branch, Term condition, Term false_branch) {
    std::uint64_t size = saturating_add(1, truth_branch.size());
    size = saturating_add(size, condition.size());
    size = saturating_add(size, false_branch.size());
    std::size_t h = mix(0xc0, truth_branch.hash());
    h = mix(h, condition.hash());
    h = mix(h, false_branch.hash());
    return Term(std::make_shared<const Node>(std::move(truth_branch), std::move(condition),
                                             std::move(false_branch), size, h));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

const Atom &Term::atom() const {
    if(!is_atom())
        throw Error("term is not an atom");
    return *node_->atom;
}

const Term &Term::truth_branch() const {
    if(!is_cond())
        throw Error("term is not a conditional");
    return node_->children[0];
}

const Term &Term::condition() const {
    if(!is_cond())
        throw Error("term is not a conditional");
    return node_->children[1];
}

const Term &Term::false_branch() const {
    if(!is_cond())
        throw Error("term is not a conditional");
    return node_->children[2];
}

std::uint64_t Term::size() const noexcept { return node_->size; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term &lhs, const Term &rhs) {
    if(lhs.node_ == rhs.node_)
        return true;
    const Term::Node &a = *lhs.node_;
    const Term::Node &b = *rhs.node_;
    if(a.kind != b.kind || a.hash != b.hash || a.size != b.size)
        return false;
    switch(a.kind) {
    case Term::Kind::True:
    case Term::Kind::False:
        return true;
    case Term::Kind::Atom:
        return *a.atom == *b.atom;
    case Term::Kind::Cond:
        return a.children[1] == b.children[1] && a.children[0] == b.children[0] &&
               a.children[2] == b.children[2];
    }
    return false;
}

Term dual(const Term &t) {
    switch(t.kind()) {
    case Term::Kind::True:
        return Term::make_false();
    case Term::Kind::False:
        return Term::make_true();
    case Term::Kind::Atom:
        return t;
    case Term::Kind::Cond:
        return Term::make_cond(dual(t.false_branch()), dual(t.condition()), dual(t.truth_branch()));
    }
    return t;
}

namespace {

void collect_atoms(const Term &t, AtomSet &out) {
    if(t.is_atom()) {
        out.insert(t.atom());
    } else if(t.is_cond()) {
        collect_atoms(t.truth_branch(), out);
        collect_atoms(t.condition(), out);
        collect_atoms(t.false_branch(), out);
    }
}

bool contains_atom(const Term &t, const Atom &a) {
    if(t.is_atom())
        return t.atom() == a;
    if(t.is_cond())
        return contains_atom(t.condition(), a) || contains_atom(t.truth_branch(), a) ||
               contains_atom(t.false_branch(), a);
    return false;
}

bool has_root_atom(const Term &t, const Atom &a) {
    return t.is_cond() && t.condition().is_atom() && t.condition().atom() == a;
}

} // namespace

AtomSet alphabet(const Term &t) {
    AtomSet atoms;
    collect_atoms(t, atoms);
    return atoms;
}

std::size_t depth(const Term &t) {
    if(!t.is_cond())
        return 0;
    // Conditions of basic forms are atoms, which have depth 0.
    return 1 + std::max({depth(t.truth_branch()), depth(t.condition()), depth(t.false_branch())});
}

std::size_t cond_count(const Term &t) {
    if(!t.is_cond())
        return 0;
    return 1 + cond_count(t.truth_branch()) + cond_count(t.condition()) +
           cond_count(t.false_branch());
}

bool is_basic_form(const Term &t) {
    if(t.is_constant())
        return true;
    if(!t.is_cond() || !t.condition().is_atom())
        return false;
    return is_basic_form(t.truth_branch()) && is_basic_form(t.false_branch());
}

bool is_rp_basic_form(const Term &t) {
    if(t.is_constant())
        return true;
    if(!t.is_cond() || !t.condition().is_atom())
        return false;
    const Atom &a = t.condition().atom();
    for(const Term *child : {&t.truth_branch(), &t.false_branch()}) {
        if(!is_rp_basic_form(*child))
            return false;
        if(has_root_atom(*child, a) && !(child->truth_branch() == child->false_branch()))
            return false;
    }
    return true;
}

bool is_cr_basic_form(const Term &t) {
    if(t.is_constant())
        return true;
    if(!t.is_cond() || !t.condition().is_atom())
        return false;
    const Atom &a = t.condition().atom();
    for(const Term *child : {&t.truth_branch(), &t.false_branch()}) {
        if(has_root_atom(*child, a) || !is_cr_basic_form(*child))
            return false;
    }
    return true;
}

// A basic form is mem-basic over some atom set exactly when no node's atom
// reappears below that node.
bool is_mem_basic_form(const Term &t) {
    if(t.is_constant())
        return true;
    if(!t.is_cond() || !t.condition().is_atom())
        return false;
    const Atom &a = t.condition().atom();
    for(const Term *child : {&t.truth_branch(), &t.false_branch()}) {
        if(contains_atom(*child, a) || !is_mem_basic_form(*child))
            return false;
    }
    return true;
}

bool is_st_basic_form(const Term &t, const Sigma &sigma) {
    if(sigma.empty())
        return t.is_constant();
    if(!has_root_atom(t, sigma.last()))
        return false;
    const Sigma rest = sigma.prefix();
    return is_st_basic_form(t.truth_branch(), rest) && is_st_basic_form(t.false_branch(), rest);
}

namespace {

void sort_canonically(std::vector<Term> &terms, const std::function<std::size_t(const Term &)> &rank) {
    std::vector<std::pair<std::pair<std::size_t, std::string>, Term>> keyed;
    keyed.reserve(terms.size());
    for(Term &t : terms)
        keyed.push_back({{rank(t), render_term(t)}, std::move(t)});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto &x, const auto &y) { return x.first < y.first; });
    terms.clear();
    for(auto &entry : keyed)
        terms.push_back(std::move(entry.second));
}

} // namespace

std::vector<Term> enumerate_basic_forms(std::span<const Atom> alphabet, std::size_t max_depth) {
    if(AtomSet(alphabet.begin(), alphabet.end()).size() != alphabet.size())
        throw SigmaError("enumeration alphabet repeats an atom");

    std::vector<Term> layer{Term::make_true(), Term::make_false()};
    for(std::size_t d = 1; d <= max_depth; ++d) {
        std::vector<Term> next{Term::make_true(), Term::make_false()};
        next.reserve(2 + alphabet.size() * layer.size() * layer.size());
        for(const Atom &a : alphabet) {
            const Term cond = Term::make_atom(a);
            for(const Term &p : layer)
                for(const Term &q : layer)
                    next.push_back(Term::make_cond(p, cond, q));
        }
        layer = std::move(next);
    }
    sort_canonically(layer, [](const Term &t) { return depth(t); });
    return layer;
}

std::vector<Term> enumerate_terms(std::span<const Atom> alphabet, std::size_t max_conds) {
    // by_count[n] holds all terms with exactly n conditional nodes.
    std::vector<std::vector<Term>> by_count(max_conds + 1);
    by_count[0] = {Term::make_true(), Term::make_false()};
    for(const Atom &a : alphabet)
        by_count[0].push_back(Term::make_atom(a));

    for(std::size_t n = 1; n <= max_conds; ++n) {
        for(std::size_t i = 0; i < n; ++i) {
            for(std::size_t j = 0; i + j < n; ++j) {
                const std::size_t k = n - 1 - i - j;
                for(const Term &c : by_count[j])
                    for(const Term &p : by_count[i])
                        for(const Term &r : by_count[k])
                            by_count[n].push_back(Term::make_cond(p, c, r));
            }
        }
    }

    std::vector<Term> all;
    for(auto &bucket : by_count)
        all.insert(all.end(), bucket.begin(), bucket.end());
    sort_canonically(all, [](const Term &t) { return cond_count(t); });
    return all;
}

} // namespace condalg
