#include "condalg/normalizer.hpp"

#include "condalg/syntax.hpp"

namespace condalg {

namespace {

Term checked_cond(Term p, const Atom &a, Term q, const NodeBudget &budget) {
    Term t = Term::make_cond(std::move(p), Term::make_atom(a), std::move(q));
    if(t.size() > budget.max_nodes)
        throw BudgetExceeded("term exceeds node budget of " + std::to_string(budget.max_nodes));
    return t;
}

void require_basic(const Term &p, const char *function) {
    if(!is_basic_form(p))
        throw NotBasicFormError(std::string(function) + " requires a basic form, got " +
                                render_term(p));
}

bool root_is(const Term &p, const Atom &a) { return p.is_cond() && p.condition().atom() == a; }

// The *_unchecked helpers assume a basic-form argument.

Term subst_unchecked(const Term &p, const Term &for_true, const Term &for_false,
                     const NodeBudget &budget) {
    if(p.is_true())
        return for_true;
    if(p.is_false())
        return for_false;
    return checked_cond(subst_unchecked(p.truth_branch(), for_true, for_false, budget),
                        p.condition().atom(),
                        subst_unchecked(p.false_branch(), for_true, for_false, budget), budget);
}

Term rp_aux_unchecked(Side side, const Atom &a, const Term &p, const NodeBudget &budget) {
    if(!root_is(p, a))
        return p;
    const Term kept = rp_aux_unchecked(
        side, a, side == Side::True ? p.truth_branch() : p.false_branch(), budget);
    return checked_cond(kept, a, kept, budget);
}

Term rpf_unchecked(const Term &p, const NodeBudget &budget) {
    if(p.is_constant())
        return p;
    const Atom &a = p.condition().atom();
    return checked_cond(rpf_unchecked(rp_aux_unchecked(Side::True, a, p.truth_branch(), budget), budget),
                        a,
                        rpf_unchecked(rp_aux_unchecked(Side::False, a, p.false_branch(), budget), budget),
                        budget);
}

Term cr_aux_unchecked(Side side, const Atom &a, const Term &p) {
    const Term *current = &p;
    while(root_is(*current, a))
        current = side == Side::True ? &current->truth_branch() : &current->false_branch();
    return *current;
}

Term cf_unchecked(const Term &p, const NodeBudget &budget) {
    if(p.is_constant())
        return p;
    const Atom &a = p.condition().atom();
    return checked_cond(cf_unchecked(cr_aux_unchecked(Side::True, a, p.truth_branch()), budget), a,
                        cf_unchecked(cr_aux_unchecked(Side::False, a, p.false_branch()), budget),
                        budget);
}

Term mem_aux_unchecked(Side side, const Atom &a, const Term &p, const NodeBudget &budget) {
    if(p.is_constant())
        return p;
    if(root_is(p, a))
        return mem_aux_unchecked(side, a, side == Side::True ? p.truth_branch() : p.false_branch(),
                                 budget);
    return checked_cond(mem_aux_unchecked(side, a, p.truth_branch(), budget), p.condition().atom(),
                        mem_aux_unchecked(side, a, p.false_branch(), budget), budget);
}

Term mf_unchecked(const Term &p, const NodeBudget &budget) {
    if(p.is_constant())
        return p;
    const Atom &a = p.condition().atom();
    return checked_cond(mf_unchecked(mem_aux_unchecked(Side::True, a, p.truth_branch(), budget), budget),
                        a,
                        mf_unchecked(mem_aux_unchecked(Side::False, a, p.false_branch(), budget), budget),
                        budget);
}

} // namespace

Term subst_tf(const Term &p, const Term &for_true, const Term &for_false,
              const NodeBudget &budget) {
    require_basic(p, "subst_tf");
    require_basic(for_true, "subst_tf");
    require_basic(for_false, "subst_tf");
    return subst_unchecked(p, for_true, for_false, budget);
}

Term bf(const Term &t, const NodeBudget &budget) {
    switch(t.kind()) {
    case Term::Kind::True:
    case Term::Kind::False:
        return t;
    case Term::Kind::Atom:
        return checked_cond(Term::make_true(), t.atom(), Term::make_false(), budget);
    case Term::Kind::Cond:
        return subst_unchecked(bf(t.condition(), budget), bf(t.truth_branch(), budget),
                               bf(t.false_branch(), budget), budget);
    }
    return t;
}

Term rp_aux(Side side, const Atom &a, const Term &p, const NodeBudget &budget) {
    require_basic(p, "rp_aux");
    return rp_aux_unchecked(side, a, p, budget);
}

Term rpf(const Term &p, const NodeBudget &budget) {
    require_basic(p, "rpf");
    return rpf_unchecked(p, budget);
}

Term rpbf(const Term &t, const NodeBudget &budget) { return rpf_unchecked(bf(t, budget), budget); }

Term cr_aux(Side side, const Atom &a, const Term &p, const NodeBudget &) {
    require_basic(p, "cr_aux");
    return cr_aux_unchecked(side, a, p);
}

Term cf(const Term &p, const NodeBudget &budget) {
    require_basic(p, "cf");
    return cf_unchecked(p, budget);
}

Term cbf(const Term &t, const NodeBudget &budget) { return cf_unchecked(bf(t, budget), budget); }

Term mem_aux(Side side, const Atom &a, const Term &p, const NodeBudget &budget) {
    require_basic(p, "mem_aux");
    return mem_aux_unchecked(side, a, p, budget);
}

Term mf(const Term &p, const NodeBudget &budget) {
    require_basic(p, "mf");
    return mf_unchecked(p, budget);
}

Term mbf(const Term &t, const NodeBudget &budget) { return mf_unchecked(bf(t, budget), budget); }

Term e_sigma(const Sigma &sigma) {
    Term e = Term::make_false();
    for(const Atom &a : sigma.atoms())
        e = Term::make_cond(e, Term::make_atom(a), e);
    return e;
}

void require_covered(const Sigma &sigma, const Term &t) {
    for(const Atom &a : alphabet(t)) {
        if(!sigma.contains(a))
            throw AlphabetError("atom " + render_atom(a) + " is missing from the atom sequence '" +
                                render_sigma(sigma) + "'");
    }
}

Term sbf(const Sigma &sigma, const Term &t, const NodeBudget &budget) {
    require_covered(sigma, t);
    return mbf(Term::make_cond(Term::make_true(), e_sigma(sigma), t), budget);
}

} // namespace condalg
