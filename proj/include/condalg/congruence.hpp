#pragma once

// Deciding the five valuation congruences, the translation to propositional
// logic and truth tables for static congruence.
//
// The congruences form a chain: free ⊂ rp ⊂ cr ⊂ mem ⊂ static.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "condalg/budget.hpp"
#include "condalg/eval_tree.hpp"
#include "condalg/term.hpp"

namespace condalg {

class CongruenceKind {
public:
    enum class Tag : std::uint8_t { Free, Rp, Cr, Mem, Static };

    static CongruenceKind free() { return CongruenceKind(Tag::Free, {}); }
    static CongruenceKind rp() { return CongruenceKind(Tag::Rp, {}); }
    static CongruenceKind cr() { return CongruenceKind(Tag::Cr, {}); }
    static CongruenceKind mem() { return CongruenceKind(Tag::Mem, {}); }
    static CongruenceKind static_over(Sigma sigma) {
        return CongruenceKind(Tag::Static, std::move(sigma));
    }

    Tag tag() const noexcept { return tag_; }
    bool is_static() const noexcept { return tag_ == Tag::Static; }
    /// Requires is_static().
    const Sigma &sigma() const;
    /// Position in the chain, 0 for free up to 4 for static.
    int rank() const noexcept { return static_cast<int>(tag_); }
    /// `free`, `rp`, `cr`, `mem` or `static(ab)`.
    std::string name() const;

    friend bool operator==(const CongruenceKind &, const CongruenceKind &) = default;

private:
    CongruenceKind(Tag tag, Sigma sigma) : tag_(tag), sigma_(std::move(sigma)) {}

    Tag tag_;
    Sigma sigma_;
};

/// bf, rpbf, cbf, mbf or sbf according to `kind`.
Term normal_form(const Term &t, const CongruenceKind &kind, const NodeBudget &budget = {});

/// se, rpse, cse, mse or sse according to `kind`.
EvalTree semantic_tree(const Term &t, const CongruenceKind &kind, const NodeBudget &budget = {});

/// Decided by comparing semantic trees. For static kinds both alphabets must be
/// covered by sigma (AlphabetError otherwise).
bool equivalent(const Term &p, const Term &q, const CongruenceKind &kind,
                const NodeBudget &budget = {});

class PropFormula {
public:
    enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or };

    static PropFormula make_true();
    static PropFormula make_false();
    static PropFormula make_atom(Atom a);
    static PropFormula make_not(PropFormula f);
    static PropFormula make_and(PropFormula lhs, PropFormula rhs);
    static PropFormula make_or(PropFormula lhs, PropFormula rhs);

    Kind kind() const noexcept;
    /// Requires kind() == Atom.
    const Atom &atom() const;
    /// Operand of Not, or left operand of And/Or.
    const PropFormula &lhs() const;
    /// Right operand of And/Or.
    const PropFormula &rhs() const;

    friend bool operator==(const PropFormula &lhs, const PropFormula &rhs);

private:
    struct Node;
    explicit PropFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Structural translation without simplification:
/// `P <| Q |> R` becomes `(P & Q) | (!Q & R)`.
PropFormula to_propositional(const Term &t);

/// Fully parenthesized text using `!`, `&`, `|`, `true`, `false`.
std::string render_formula(const PropFormula &f);

/// Classical value under `assignment`, which must hold every atom of `f`.
bool evaluate_formula(const PropFormula &f, const std::vector<std::pair<Atom, bool>> &assignment);

struct TruthTable {
    struct Row {
        std::vector<bool> assignment; // aligned with sigma
        bool value = false;
        friend bool operator==(const Row &, const Row &) = default;
    };
    Sigma sigma;
    std::vector<Row> rows;
    friend bool operator==(const TruthTable &, const TruthTable &) = default;
};

inline constexpr std::size_t max_table_atoms = 16;

/// One row per assignment over sigma, starting from all-true, with the leftmost
/// atom varying slowest. Throws SigmaError if sigma has more than
/// max_table_atoms atoms and AlphabetError if it does not cover `t`.
TruthTable truth_table(const Term &t, const Sigma &sigma);

/// Header row of atoms followed by `| TERM`; cells are T or F.
std::string render_table_text(const TruthTable &table, const std::string &label);
/// `{"sigma":[...],"rows":[{"assignment":[...],"value":...}]}`
std::string render_table_json(const TruthTable &table);

/// Whether static equivalence over sigma agrees with equality of truth tables.
bool static_matches_tautology(const Term &p, const Term &q, const Sigma &sigma);

struct SeparationWitness {
    Term p;
    Term q;
    CongruenceKind finer;   // p and q differ here
    CongruenceKind coarser; // and coincide here
    bool verified = false;
};

/// One pair for each adjacent step of the chain, re-checked on every call.
std::vector<SeparationWitness> separation_witnesses();

} // namespace condalg
