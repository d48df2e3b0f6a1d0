#pragma once

// Evaluation trees: binary trees whose internal nodes are atoms and whose
// leaves are T or F. The left branch is taken when the atom yields true.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "condalg/budget.hpp"
#include "condalg/term.hpp"

namespace condalg {

class EvalTree {
public:
    static EvalTree leaf(bool value);
    static EvalTree leaf_true() { return leaf(true); }
    static EvalTree leaf_false() { return leaf(false); }
    /// `left <a> right`
    static EvalTree node(Atom a, EvalTree left, EvalTree right);

    bool is_leaf() const noexcept;
    /// Requires is_leaf().
    bool leaf_value() const;
    /// The three accessors below require !is_leaf().
    const Atom &atom() const;
    const EvalTree &left() const;
    const EvalTree &right() const;

    std::uint64_t size() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const EvalTree &lhs, const EvalTree &rhs);

private:
    struct Node;
    explicit EvalTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// One complete root-to-leaf walk: the atoms met with the branch taken at
/// each, and the leaf reached.
struct Evaluation {
    std::vector<std::pair<Atom, bool>> path;
    bool result = false;

    friend bool operator==(const Evaluation &, const Evaluation &) = default;
};

/// Replaces every T leaf of `x` by `for_true` and every F leaf by `for_false`.
EvalTree leaf_replace(const EvalTree &x, const EvalTree &for_true, const EvalTree &for_false,
                      const NodeBudget &budget = {});

/// Short-circuit evaluation tree of a term.
EvalTree se(const Term &t, const NodeBudget &budget = {});

/// All evaluations, true branches before false branches.
std::vector<Evaluation> evaluations(const EvalTree &x);

/// The basic form with the same shape as `x`.
Term tree_to_term(const EvalTree &x);

enum class TreeFormat { Ascii, Dot, Json };

/// Ascii renders inline as `(T <a> F)`; Json as nested
/// `{"atom":"a","t":...,"f":...}` objects with "T"/"F" leaves; Dot as a
/// digraph whose left edges are labeled T and right edges F.
std::string render_tree(const EvalTree &x, TreeFormat format);

/// `aT bF`; the empty path renders as `-`.
std::string render_path(const std::vector<std::pair<Atom, bool>> &path);

/// Answers an atom query. May carry state across calls and may throw
/// OracleError.
using AtomOracle = std::function<bool(const Atom &)>;

/// Evaluates `t` left to right with short-circuiting, consulting the oracle
/// once for every atom occurrence visited.
bool evaluate_with_oracle(const Term &t, const AtomOracle &oracle);

} // namespace condalg
