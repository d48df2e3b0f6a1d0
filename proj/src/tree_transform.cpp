#include "condalg/tree_transform.hpp"

namespace condalg {

namespace {

EvalTree checked_node(const Atom &a, EvalTree left, EvalTree right, const NodeBudget &budget) {
    EvalTree x = EvalTree::node(a, std::move(left), std::move(right));
    if(x.size() > budget.max_nodes)
        throw BudgetExceeded("evaluation tree exceeds node budget of " +
                             std::to_string(budget.max_nodes));
    return x;
}

const EvalTree &branch(Side side, const EvalTree &x) {
    return side == Side::True ? x.left() : x.right();
}

} // namespace

EvalTree rp_tree_aux(Side side, const Atom &a, const EvalTree &x, const NodeBudget &budget) {
    if(x.is_leaf() || x.atom() != a)
        return x;
    const EvalTree kept = rp_tree_aux(side, a, branch(side, x), budget);
    return checked_node(a, kept, kept, budget);
}

EvalTree rp_tree(const EvalTree &x, const NodeBudget &budget) {
    if(x.is_leaf())
        return x;
    const Atom &a = x.atom();
    return checked_node(a, rp_tree(rp_tree_aux(Side::True, a, x.left(), budget), budget),
                        rp_tree(rp_tree_aux(Side::False, a, x.right(), budget), budget), budget);
}

EvalTree rpse(const Term &t, const NodeBudget &budget) { return rp_tree(se(t, budget), budget); }

EvalTree cr_tree_aux(Side side, const Atom &a, const EvalTree &x) {
    const EvalTree *current = &x;
    while(!current->is_leaf() && current->atom() == a)
        current = &branch(side, *current);
    return *current;
}

EvalTree cr_tree(const EvalTree &x, const NodeBudget &budget) {
    if(x.is_leaf())
        return x;
    const Atom &a = x.atom();
    return checked_node(a, cr_tree(cr_tree_aux(Side::True, a, x.left()), budget),
                        cr_tree(cr_tree_aux(Side::False, a, x.right()), budget), budget);
}

EvalTree cse(const Term &t, const NodeBudget &budget) { return cr_tree(se(t, budget), budget); }

EvalTree mem_tree_aux(Side side, const Atom &a, const EvalTree &x, const NodeBudget &budget) {
    if(x.is_leaf())
        return x;
    if(x.atom() == a)
        return mem_tree_aux(side, a, branch(side, x), budget);
    return checked_node(x.atom(), mem_tree_aux(side, a, x.left(), budget),
                        mem_tree_aux(side, a, x.right(), budget), budget);
}

EvalTree mem_tree(const EvalTree &x, const NodeBudget &budget) {
    if(x.is_leaf())
        return x;
    const Atom &a = x.atom();
    return checked_node(a, mem_tree(mem_tree_aux(Side::True, a, x.left(), budget), budget),
                        mem_tree(mem_tree_aux(Side::False, a, x.right(), budget), budget), budget);
}

EvalTree mse(const Term &t, const NodeBudget &budget) { return mem_tree(se(t, budget), budget); }

EvalTree sse(const Sigma &sigma, const Term &t, const NodeBudget &budget) {
    require_covered(sigma, t);
    return mse(Term::make_cond(Term::make_true(), e_sigma(sigma), t), budget);
}

} // namespace condalg
