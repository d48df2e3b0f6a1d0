#pragma once

// Syntactic normal forms. Each congruence has a basic-form function that
// first computes the plain basic form and then prunes it with a pair of
// auxiliary maps, one for the true side and one for the false side of an atom.
//
// Functions documented as taking a basic form throw NotBasicFormError on
// anything else. All functions throw BudgetExceeded when an intermediate term
// grows past the budget.

#include "condalg/budget.hpp"
#include "condalg/term.hpp"

namespace condalg {

enum class Side { True, False };

/// Replaces the T leaves of basic form `p` by `for_true` and the F leaves by
/// `for_false`.
Term subst_tf(const Term &p, const Term &for_true, const Term &for_false,
              const NodeBudget &budget = {});

/// The unique basic form free-congruent to `t`.
Term bf(const Term &t, const NodeBudget &budget = {});

// Repetition-proof. On a node whose atom is `a`, the true side keeps the true
// branch in both positions and the false side keeps the false branch; other
// nodes are left alone.
Term rp_aux(Side side, const Atom &a, const Term &p, const NodeBudget &budget = {});
Term rpf(const Term &p, const NodeBudget &budget = {});
Term rpbf(const Term &t, const NodeBudget &budget = {});

// Contractive. On a node whose atom is `a`, the true side continues into the
// true branch and the false side into the false branch, dropping the node.
Term cr_aux(Side side, const Atom &a, const Term &p, const NodeBudget &budget = {});
Term cf(const Term &p, const NodeBudget &budget = {});
Term cbf(const Term &t, const NodeBudget &budget = {});

// Memorizing. Like the contractive maps, but applied at every depth rather
// than only along a chain of `a` nodes.
Term mem_aux(Side side, const Atom &a, const Term &p, const NodeBudget &budget = {});
Term mf(const Term &p, const NodeBudget &budget = {});
Term mbf(const Term &t, const NodeBudget &budget = {});

/// The layered all-F term over sigma: F for the empty sequence, otherwise
/// `E <| a |> E` with `a` the last atom and E built from the rest.
Term e_sigma(const Sigma &sigma);

/// Static basic form over sigma. Throws AlphabetError unless every atom of
/// `t` occurs in sigma.
Term sbf(const Sigma &sigma, const Term &t, const NodeBudget &budget = {});

/// Throws AlphabetError if `t` mentions an atom outside sigma.
void require_covered(const Sigma &sigma, const Term &t);

} // namespace condalg
