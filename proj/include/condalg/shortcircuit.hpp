#pragma once

// Short-circuit connectives and their translation to conditional terms, plus a
// register-machine oracle whose atoms may assign to registers.
//
// Concrete syntax:
//
//   expr    := or
//   or      := and ('||' and)*
//   and     := unary ('&&' unary)*
//   unary   := '!' unary | primary
//   primary := 'true' | 'false' | atom | '(' expr ')'

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "condalg/eval_tree.hpp"
#include "condalg/term.hpp"

namespace condalg {

class SclExpr {
public:
    enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or };

    static SclExpr make_true();
    static SclExpr make_false();
    static SclExpr make_atom(Atom a);
    static SclExpr make_not(SclExpr e);
    static SclExpr make_and(SclExpr lhs, SclExpr rhs);
    static SclExpr make_or(SclExpr lhs, SclExpr rhs);

    Kind kind() const noexcept;
    /// Requires kind() == Atom.
    const Atom &atom() const;
    /// Operand of Not, or left operand of And/Or.
    const SclExpr &lhs() const;
    /// Right operand of And/Or.
    const SclExpr &rhs() const;

private:
    struct Node;
    explicit SclExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Throws ParseError.
SclExpr parse_scl(std::string_view text);
/// Minimal parentheses; `!` binds tightest, then `&&`, then `||`.
std::string render_scl(const SclExpr &e);

/// `P && Q` becomes `Q <| P |> F`, `!P` becomes `F <| P |> T` and `P || Q`
/// becomes `T <| P |> Q`.
Term desugar(const SclExpr &e);

using RegisterState = std::map<std::string, std::int64_t>;

/// Parses `n=0,m=-3`. Empty text is the empty state. Throws ParseError.
RegisterState parse_register_state(std::string_view text);
/// Comma-separated `name=value` in name order.
std::string render_register_state(const RegisterState &state);

/// Oracle over atoms of the form `(r=expr)`, which stores the value of expr in
/// register r and yields true, and `(expr==expr)`, which yields whether both
/// sides have the same value. Expressions use integer literals, registers,
/// binary + and - and parentheses; whitespace is ignored. Queries read and
/// update `*state`. Throws OracleError on any other atom, on unknown registers
/// and on overflow.
AtomOracle make_register_oracle(std::shared_ptr<RegisterState> state);
/// Same, over a private copy of `initial`.
AtomOracle make_register_oracle(RegisterState initial);

} // namespace condalg
