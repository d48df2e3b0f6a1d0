#pragma once

#include <string>
#include <vector>

#include "condalg/eval_tree.hpp"
#include "condalg/syntax.hpp"
#include "condalg/term.hpp"

namespace fixtures {

inline condalg::Term term(const std::string &text) { return condalg::parse_term(text); }

inline condalg::EvalTree leaf(bool v) { return condalg::EvalTree::leaf(v); }
inline const condalg::EvalTree LT = condalg::EvalTree::leaf_true();
inline const condalg::EvalTree LF = condalg::EvalTree::leaf_false();

inline condalg::EvalTree node(const std::string &atom, const condalg::EvalTree &l,
                              const condalg::EvalTree &r) {
    return condalg::EvalTree::node(condalg::Atom(atom), l, r);
}

inline const std::vector<condalg::Atom> &ab() {
    static const std::vector<condalg::Atom> atoms{condalg::Atom("a"), condalg::Atom("b")};
    return atoms;
}

/// Basic forms over {a, b} of depth at most 2.
inline const std::vector<condalg::Term> &basic_forms_ab2() {
    static const std::vector<condalg::Term> forms = condalg::enumerate_basic_forms(ab(), 2);
    return forms;
}

/// Every evaluation tree over {a, b} of depth at most `depth`.
inline std::vector<condalg::EvalTree> trees_ab(std::size_t depth) {
    std::vector<condalg::EvalTree> layer{LT, LF};
    for(std::size_t d = 0; d < depth; ++d) {
        std::vector<condalg::EvalTree> next{LT, LF};
        for(const auto &a : ab())
            for(const auto &l : layer)
                for(const auto &r : layer)
                    next.push_back(condalg::EvalTree::node(a, l, r));
        layer = std::move(next);
    }
    return layer;
}

} // namespace fixtures
