#pragma once

// Transformations on evaluation trees that mirror the normalizers, and the
// evaluators that compose them with `se`.

#include "condalg/budget.hpp"
#include "condalg/eval_tree.hpp"
#include "condalg/normalizer.hpp"

namespace condalg {

EvalTree rp_tree_aux(Side side, const Atom &a, const EvalTree &x, const NodeBudget &budget = {});
/// Repetition-proof transformation.
EvalTree rp_tree(const EvalTree &x, const NodeBudget &budget = {});
EvalTree rpse(const Term &t, const NodeBudget &budget = {});

EvalTree cr_tree_aux(Side side, const Atom &a, const EvalTree &x);
/// Contractive transformation.
EvalTree cr_tree(const EvalTree &x, const NodeBudget &budget = {});
EvalTree cse(const Term &t, const NodeBudget &budget = {});

EvalTree mem_tree_aux(Side side, const Atom &a, const EvalTree &x, const NodeBudget &budget = {});
/// Memorizing transformation: every atom keeps its first value along a path.
EvalTree mem_tree(const EvalTree &x, const NodeBudget &budget = {});
EvalTree mse(const Term &t, const NodeBudget &budget = {});

/// Static evaluation tree over sigma: a full binary tree with the last atom of
/// sigma at the root. Throws AlphabetError unless sigma covers `t`.
EvalTree sse(const Sigma &sigma, const Term &t, const NodeBudget &budget = {});

} // namespace condalg
