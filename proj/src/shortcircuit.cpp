#include "condalg/shortcircuit.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "condalg/syntax.hpp"

namespace condalg {

struct SclExpr::Node {
    Kind kind;
    std::optional<Atom> atom;
    std::vector<SclExpr> operands;
};

SclExpr SclExpr::make_true() {
    static const SclExpr e(std::make_shared<const Node>(Node{Kind::True, std::nullopt, {}}));
    return e;
}

SclExpr SclExpr::make_false() {
    static const SclExpr e(std::make_shared<const Node>(Node{Kind::False, std::nullopt, {}}));
    return e;
}

SclExpr SclExpr::make_atom(Atom a) {
    return SclExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}}));
}

SclExpr SclExpr::make_not(SclExpr e) {
    return SclExpr(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(e)}}));
}

SclExpr SclExpr::make_and(SclExpr lhs, SclExpr rhs) {
    return SclExpr(std::make_shared<const Node>(
        Node{Kind::And, std::nullopt, {std::move(lhs), std::move(rhs)}}));
}

SclExpr SclExpr::make_or(SclExpr lhs, SclExpr rhs) {
    return SclExpr(std::make_shared<const Node>(
        Node{Kind::Or, std::nullopt, {std::move(lhs), std::move(rhs)}}));
}

SclExpr::Kind SclExpr::kind() const noexcept { return node_->kind; }

const Atom &SclExpr::atom() const {
    if(!node_->atom)
        throw Error("expression is not an atom");
    return *node_->atom;
}

const SclExpr &SclExpr::lhs() const {
    if(node_->operands.empty())
        throw Error("expression has no operands");
    return node_->operands[0];
}

const SclExpr &SclExpr::rhs() const {
    if(node_->operands.size() < 2)
        throw Error("expression has no right operand");
    return node_->operands[1];
}

namespace {

constexpr std::size_t max_nesting = 10000;

enum class Tok { True, False, Atom, Not, And, Or, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

class SclParser {
public:
    explicit SclParser(std::string_view text) : text_(text) { advance(); }

    SclExpr parse() {
        if(current_.kind == Tok::End)
            throw ParseError("empty expression", current_.pos);
        SclExpr e = parse_or();
        if(current_.kind != Tok::End)
            throw ParseError("unexpected trailing input", current_.pos);
        return e;
    }

private:
    SclExpr parse_or() {
        SclExpr e = parse_and();
        while(current_.kind == Tok::Or) {
            advance();
            e = SclExpr::make_or(e, parse_and());
        }
        return e;
    }

    SclExpr parse_and() {
        SclExpr e = parse_unary();
        while(current_.kind == Tok::And) {
            advance();
            e = SclExpr::make_and(e, parse_unary());
        }
        return e;
    }

    SclExpr parse_unary() {
        if(current_.kind == Tok::Not) {
            enter(current_.pos);
            advance();
            SclExpr e = SclExpr::make_not(parse_unary());
            --depth_;
            return e;
        }
        return parse_primary();
    }

    SclExpr parse_primary() {
        const Token tok = current_;
        switch(tok.kind) {
        case Tok::True:
            advance();
            return SclExpr::make_true();
        case Tok::False:
            advance();
            return SclExpr::make_false();
        case Tok::Atom:
            advance();
            return SclExpr::make_atom(Atom(tok.text));
        case Tok::LParen: {
            enter(tok.pos);
            advance();
            SclExpr e = parse_or();
            if(current_.kind != Tok::RParen)
                throw ParseError("expected ')'", current_.pos);
            advance();
            --depth_;
            return e;
        }
        case Tok::End:
            throw ParseError("unexpected end of input", tok.pos);
        default:
            throw ParseError("expected an operand", tok.pos);
        }
    }

    void enter(std::size_t pos) {
        if(++depth_ > max_nesting)
            throw ParseError("nesting too deep", pos);
    }

    void advance() { current_ = lex(); }

    Token lex() {
        while(pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if(pos_ >= text_.size())
            return {Tok::End, start, {}};
        const char c = text_[pos_];
        auto two = [&](char second) {
            return pos_ + 1 < text_.size() && text_[pos_ + 1] == second;
        };
        switch(c) {
        case '(':
            ++pos_;
            return {Tok::LParen, start, {}};
        case ')':
            ++pos_;
            return {Tok::RParen, start, {}};
        case '!':
            ++pos_;
            return {Tok::Not, start, {}};
        case '&':
            if(!two('&'))
                throw ParseError("expected '&&'", start);
            pos_ += 2;
            return {Tok::And, start, {}};
        case '|':
            if(!two('|'))
                throw ParseError("expected '||'", start);
            pos_ += 2;
            return {Tok::Or, start, {}};
        case '"': {
            const std::size_t close = text_.find('"', pos_ + 1);
            if(close == std::string_view::npos)
                throw ParseError("unterminated quoted atom", start);
            if(close == pos_ + 1)
                throw ParseError("empty quoted atom", start);
            std::string name(text_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return {Tok::Atom, start, std::move(name)};
        }
        default:
            break;
        }
        if(std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while(end < text_.size() &&
                  (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if(word == "true")
                return {Tok::True, start, {}};
            if(word == "false")
                return {Tok::False, start, {}};
            if(!is_plain_identifier(word))
                throw ParseError("invalid atom '" + word + "'", start);
            return {Tok::Atom, start, std::move(word)};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
    Token current_{Tok::End, 0, {}};
};

int precedence(const SclExpr &e) {
    switch(e.kind()) {
    case SclExpr::Kind::Or:
        return 1;
    case SclExpr::Kind::And:
        return 2;
    case SclExpr::Kind::Not:
        return 3;
    default:
        return 4;
    }
}

void render_scl_into(const SclExpr &e, std::string &out);

void render_operand(const SclExpr &e, int min_precedence, std::string &out) {
    const bool parens = precedence(e) < min_precedence;
    if(parens)
        out += '(';
    render_scl_into(e, out);
    if(parens)
        out += ')';
}

void render_scl_into(const SclExpr &e, std::string &out) {
    switch(e.kind()) {
    case SclExpr::Kind::True:
        out += "true";
        return;
    case SclExpr::Kind::False:
        out += "false";
        return;
    case SclExpr::Kind::Atom: {
        const std::string &name = e.atom().name();
        out += name == "true" || name == "false" ? "\"" + name + "\"" : render_atom(e.atom());
        return;
    }
    case SclExpr::Kind::Not:
        out += '!';
        render_operand(e.lhs(), 3, out);
        return;
    case SclExpr::Kind::And:
    case SclExpr::Kind::Or: {
        const int p = precedence(e);
        render_operand(e.lhs(), p, out);
        out += p == 2 ? " && " : " || ";
        render_operand(e.rhs(), p + 1, out);
        return;
    }
    }
}

} // namespace

SclExpr parse_scl(std::string_view text) { return SclParser(text).parse(); }

std::string render_scl(const SclExpr &e) {
    std::string out;
    render_scl_into(e, out);
    return out;
}

Term desugar(const SclExpr &e) {
    switch(e.kind()) {
    case SclExpr::Kind::True:
        return Term::make_true();
    case SclExpr::Kind::False:
        return Term::make_false();
    case SclExpr::Kind::Atom:
        return Term::make_atom(e.atom());
    case SclExpr::Kind::Not:
        return Term::make_cond(Term::make_false(), desugar(e.lhs()), Term::make_true());
    case SclExpr::Kind::And:
        return Term::make_cond(desugar(e.rhs()), desugar(e.lhs()), Term::make_false());
    case SclExpr::Kind::Or:
        return Term::make_cond(Term::make_true(), desugar(e.lhs()), desugar(e.rhs()));
    }
    return Term::make_true();
}

// Register machine

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for(char c : text) {
        if(!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    }
    return out;
}

bool is_register_name(std::string_view s) { return is_plain_identifier(s); }

std::int64_t parse_int(std::string_view digits, const std::string &context) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if(ec != std::errc() || ptr != digits.data() + digits.size())
        throw OracleError("bad integer '" + std::string(digits) + "' in " + context);
    return value;
}

// Recursive descent over whitespace-free text:
//   sum := term (('+' | '-') term)*
//   term := integer | register | '(' sum ')'
class RegisterExpr {
public:
    RegisterExpr(std::string_view text, const RegisterState &state, const std::string &context)
        : text_(text), state_(state), context_(context) {}

    std::int64_t evaluate() {
        if(text_.empty())
            fail("empty expression");
        const std::int64_t v = sum();
        if(pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    std::int64_t sum() {
        std::int64_t v = term();
        while(pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            const char op = text_[pos_++];
            const std::int64_t rhs = term();
            const bool overflow = op == '+' ? __builtin_add_overflow(v, rhs, &v)
                                            : __builtin_sub_overflow(v, rhs, &v);
            if(overflow)
                fail("integer overflow");
        }
        return v;
    }

    std::int64_t term() {
        if(pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if(c == '(') {
            if(++depth_ > max_nesting)
                fail("nesting too deep");
            ++pos_;
            const std::int64_t v = sum();
            if(pos_ >= text_.size() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            --depth_;
            return v;
        }
        if(std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return parse_int(text_.substr(start, pos_ - start), context_);
        }
        if(c >= 'a' && c <= 'z') {
            const std::size_t start = pos_;
            while(pos_ < text_.size() &&
                  (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = state_.find(name);
            if(it == state_.end())
                fail("unknown register '" + name + "'");
            return it->second;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw OracleError(what + " in atom " + context_);
    }

    std::string_view text_;
    const RegisterState &state_;
    const std::string &context_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

// Position of `needle` outside any parentheses, or npos.
std::size_t find_top_level(std::string_view s, std::string_view needle) {
    int depth = 0;
    for(std::size_t i = 0; i < s.size(); ++i) {
        if(s[i] == '(')
            ++depth;
        else if(s[i] == ')')
            --depth;
        else if(depth == 0 && s.substr(i, needle.size()) == needle)
            return i;
    }
    return std::string_view::npos;
}

// Index of the parenthesis closing the one at position 0, or npos.
std::size_t matching_paren(std::string_view s) {
    int depth = 0;
    for(std::size_t i = 0; i < s.size(); ++i) {
        if(s[i] == '(')
            ++depth;
        else if(s[i] == ')' && --depth == 0)
            return i;
    }
    return std::string_view::npos;
}

bool query(RegisterState &state, const Atom &atom) {
    const std::string context = "\"" + atom.name() + "\"";
    const std::string text = strip_spaces(atom.name());
    if(text.size() < 2 || text.front() != '(' || matching_paren(text) != text.size() - 1)
        throw OracleError("atom " + context + " is neither (r=expr) nor (expr==expr)");
    const std::string_view inner = std::string_view(text).substr(1, text.size() - 2);

    if(const std::size_t eq = find_top_level(inner, "=="); eq != std::string_view::npos) {
        const std::int64_t lhs = RegisterExpr(inner.substr(0, eq), state, context).evaluate();
        const std::int64_t rhs = RegisterExpr(inner.substr(eq + 2), state, context).evaluate();
        return lhs == rhs;
    }
    if(const std::size_t eq = find_top_level(inner, "="); eq != std::string_view::npos) {
        const std::string_view target = inner.substr(0, eq);
        if(!is_register_name(target))
            throw OracleError("bad assignment target in atom " + context);
        if(state.find(std::string(target)) == state.end())
            throw OracleError("unknown register '" + std::string(target) + "' in atom " + context);
        state[std::string(target)] = RegisterExpr(inner.substr(eq + 1), state, context).evaluate();
        return true;
    }
    throw OracleError("atom " + context + " is neither (r=expr) nor (expr==expr)");
}

} // namespace

RegisterState parse_register_state(std::string_view text) {
    RegisterState state;
    std::size_t pos = 0;
    if(strip_spaces(text).empty())
        return state;
    while(pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if(comma == std::string_view::npos)
            comma = text.size();
        const std::string item = strip_spaces(text.substr(pos, comma - pos));
        const std::size_t eq = item.find('=');
        if(eq == std::string::npos)
            throw ParseError("expected name=value", pos);
        const std::string name = item.substr(0, eq);
        const std::string digits = item.substr(eq + 1);
        if(!is_register_name(name))
            throw ParseError("invalid register name '" + name + "'", pos);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if(digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("invalid value '" + digits + "' for register " + name, pos);
        if(!state.emplace(name, value).second)
            throw ParseError("register " + name + " assigned twice", pos);
        pos = comma + 1;
    }
    return state;
}

std::string render_register_state(const RegisterState &state) {
    std::string out;
    for(const auto &[name, value] : state) {
        if(!out.empty())
            out += ',';
        out += name + "=" + std::to_string(value);
    }
    return out;
}

AtomOracle make_register_oracle(std::shared_ptr<RegisterState> state) {
    if(!state)
        throw Error("register oracle needs a state");
    return [state](const Atom &atom) { return query(*state, atom); };
}

AtomOracle make_register_oracle(RegisterState initial) {
    return make_register_oracle(std::make_shared<RegisterState>(std::move(initial)));
}

} // namespace condalg
