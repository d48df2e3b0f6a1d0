#pragma once

// Conditional statements: closed terms built from T, F, atoms and the ternary
// conditional `P <| Q |> R` ("if Q then P else R").

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "condalg/error.hpp"

namespace condalg {

class Atom {
public:
    /// Throws Error if `name` is empty or contains a double quote.
    explicit Atom(std::string name);

    const std::string &name() const noexcept { return name_; }

    friend bool operator==(const Atom &, const Atom &) = default;
    friend auto operator<=>(const Atom &, const Atom &) = default;

private:
    std::string name_;
};

using AtomSet = std::set<Atom>;

/// Duplicate-free ordered atom sequence. The last atom is the outermost layer
/// of static evaluation trees.
class Sigma {
public:
    Sigma() = default;
    /// Throws SigmaError on a repeated atom.
    explicit Sigma(std::vector<Atom> atoms);

    const std::vector<Atom> &atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    bool contains(const Atom &a) const;
    AtomSet alphabet() const;

    /// Sigma without its last atom. Requires !empty().
    Sigma prefix() const;
    const Atom &last() const { return atoms_.back(); }

    friend bool operator==(const Sigma &, const Sigma &) = default;

private:
    std::vector<Atom> atoms_;
};

/// Immutable term with shared structure. Copies are cheap; equality is
/// syntactic identity.
class Term {
public:
    enum class Kind : std::uint8_t { True, False, Atom, Cond };

    static Term make_true();
    static Term make_false();
    static Term make_constant(bool value) { return value ? make_true() : make_false(); }
    static Term make_atom(Atom a);
    static Term make_atom(std::string name) { return make_atom(Atom(std::move(name))); }
    /// `truth_branch <| condition |> false_branch`
    static Term make_cond(Term truth_branch, Term condition, Term false_branch);

    Term() : Term(make_true()) {}

    Kind kind() const noexcept;
    bool is_true() const noexcept { return kind() == Kind::True; }
    bool is_false() const noexcept { return kind() == Kind::False; }
    bool is_constant() const noexcept { return is_true() || is_false(); }
    bool is_atom() const noexcept { return kind() == Kind::Atom; }
    bool is_cond() const noexcept { return kind() == Kind::Cond; }

    /// Requires is_atom().
    const Atom &atom() const;
    /// The three accessors below require is_cond().
    const Term &truth_branch() const;
    const Term &condition() const;
    const Term &false_branch() const;

    /// Number of nodes of the (unshared) tree, saturating at UINT64_MAX.
    std::uint64_t size() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Term &lhs, const Term &rhs);

private:
    struct Node;
    struct Empty {};
    explicit Term(Empty) {}
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Swaps T and F and the two branches of every conditional.
Term dual(const Term &t);

AtomSet alphabet(const Term &t);

/// Depth of a basic form. On other terms the same recursion is applied to all
/// three children.
std::size_t depth(const Term &t);

/// Number of conditional nodes.
std::size_t cond_count(const Term &t);

bool is_basic_form(const Term &t);
bool is_rp_basic_form(const Term &t);
bool is_cr_basic_form(const Term &t);
bool is_mem_basic_form(const Term &t);
bool is_st_basic_form(const Term &t, const Sigma &sigma);

/// All basic forms over `alphabet` with depth <= max_depth, ordered by depth
/// and then by canonical rendering. `alphabet` must be duplicate-free.
std::vector<Term> enumerate_basic_forms(std::span<const Atom> alphabet, std::size_t max_depth);

/// All terms over T, F and `alphabet` with at most `max_conds` conditional
/// nodes (conditions may be arbitrary terms), ordered by node count and then
/// by canonical rendering.
std::vector<Term> enumerate_terms(std::span<const Atom> alphabet, std::size_t max_conds);

struct TermHash {
    std::size_t operator()(const Term &t) const noexcept { return t.hash(); }
};

} // namespace condalg
