#include "condalg/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace condalg {

namespace {

bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_'; }

enum class Tok { True, False, Atom, LTri, RTri, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text; // atom name for Tok::Atom
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        const std::size_t start = pos_;
        if(pos_ >= text_.size())
            return {Tok::End, start, {}};
        const char c = text_[pos_];
        if(c == '(') {
            ++pos_;
            return {Tok::LParen, start, {}};
        }
        if(c == ')') {
            ++pos_;
            return {Tok::RParen, start, {}};
        }
        if(c == '<') {
            if(pos_ + 1 < text_.size() && text_[pos_ + 1] == '|') {
                pos_ += 2;
                return {Tok::LTri, start, {}};
            }
            throw ParseError("expected '<|'", start);
        }
        if(c == '|') {
            if(pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                return {Tok::RTri, start, {}};
            }
            throw ParseError("expected '|>'", start);
        }
        if(c == '"') {
            const std::size_t close = text_.find('"', pos_ + 1);
            if(close == std::string_view::npos)
                throw ParseError("unterminated quoted atom", start);
            if(close == pos_ + 1)
                throw ParseError("empty quoted atom", start);
            std::string name(text_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return {Tok::Atom, start, std::move(name)};
        }
        if(c == 'T' || c == 'F' || is_ident_start(c)) {
            std::size_t end = pos_ + 1;
            while(end < text_.size() && (is_ident_char(text_[end]) || std::isupper(static_cast<unsigned char>(text_[end]))))
                ++end;
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if(word == "T")
                return {Tok::True, start, {}};
            if(word == "F")
                return {Tok::False, start, {}};
            if(!is_plain_identifier(word))
                throw ParseError("invalid atom '" + word + "'", start);
            return {Tok::Atom, start, std::move(word)};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

private:
    void skip_space() {
        while(pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Term parse() {
        if(current_.kind == Tok::End)
            throw ParseError("empty term", current_.pos);
        Term first = operand();
        Term result = current_.kind == Tok::LTri ? cond_tail(std::move(first)) : std::move(first);
        if(current_.kind != Tok::End)
            throw ParseError("unexpected trailing input", current_.pos);
        return result;
    }

private:
    static constexpr std::size_t max_nesting = 10000;

    void advance() { current_ = lexer_.next(); }

    void expect(Tok kind, const char *what) {
        if(current_.kind != kind)
            throw ParseError(std::string("expected ") + what, current_.pos);
        advance();
    }

    // Parses `'<|' operand '|>' operand` after the truth branch.
    Term cond_tail(Term truth_branch) {
        expect(Tok::LTri, "'<|'");
        Term condition = operand();
        expect(Tok::RTri, "'|>'");
        Term false_branch = operand();
        return Term::make_cond(std::move(truth_branch), std::move(condition), std::move(false_branch));
    }

    Term operand() {
        const Token tok = current_;
        switch(tok.kind) {
        case Tok::True:
            advance();
            return Term::make_true();
        case Tok::False:
            advance();
            return Term::make_false();
        case Tok::Atom:
            advance();
            return Term::make_atom(Atom(tok.text));
        case Tok::LParen: {
            if(++nesting_ > max_nesting)
                throw ParseError("nesting too deep", tok.pos);
            advance();
            Term inner = operand();
            if(current_.kind != Tok::LTri)
                throw ParseError("parentheses must enclose a conditional", tok.pos);
            Term result = cond_tail(std::move(inner));
            expect(Tok::RParen, "')'");
            --nesting_;
            return result;
        }
        case Tok::End:
            throw ParseError("unexpected end of input", tok.pos);
        default:
            throw ParseError("expected T, F, an atom or '('", tok.pos);
        }
    }

    Lexer lexer_;
    Token current_{Tok::End, 0, {}};
    std::size_t nesting_ = 0;
};

void render_operand(const Term &t, std::string &out);

void render_cond(const Term &t, std::string &out) {
    render_operand(t.truth_branch(), out);
    out += " <| ";
    render_operand(t.condition(), out);
    out += " |> ";
    render_operand(t.false_branch(), out);
}

void render_operand(const Term &t, std::string &out) {
    switch(t.kind()) {
    case Term::Kind::True:
        out += 'T';
        break;
    case Term::Kind::False:
        out += 'F';
        break;
    case Term::Kind::Atom:
        out += render_atom(t.atom());
        break;
    case Term::Kind::Cond:
        out += '(';
        render_cond(t, out);
        out += ')';
        break;
    }
}

} // namespace

bool is_plain_identifier(std::string_view name) {
    if(name.empty() || !is_ident_start(name.front()))
        return false;
    for(char c : name)
        if(!is_ident_char(c))
            return false;
    return true;
}

std::string render_atom(const Atom &a) {
    if(is_plain_identifier(a.name()))
        return a.name();
    return '"' + a.name() + '"';
}

Term parse_term(std::string_view text) { return Parser(text).parse(); }

std::string render_term(const Term &t) {
    std::string out;
    if(t.is_cond())
        render_cond(t, out);
    else
        render_operand(t, out);
    return out;
}

Sigma parse_sigma(std::string_view text) {
    std::vector<Atom> atoms;
    if(text.find(',') == std::string_view::npos && text.find('"') == std::string_view::npos) {
        for(std::size_t i = 0; i < text.size(); ++i) {
            if(!is_ident_start(text[i]))
                throw ParseError("atom sequence letters must be lowercase a-z", i);
            atoms.emplace_back(std::string(1, text[i]));
        }
        return Sigma(std::move(atoms));
    }

    std::size_t pos = 0;
    while(true) {
        while(pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        const std::size_t start = pos;
        if(pos < text.size() && text[pos] == '"') {
            const std::size_t close = text.find('"', pos + 1);
            if(close == std::string_view::npos)
                throw ParseError("unterminated quoted atom", start);
            if(close == pos + 1)
                throw ParseError("empty quoted atom", start);
            atoms.emplace_back(std::string(text.substr(pos + 1, close - pos - 1)));
            pos = close + 1;
        } else {
            std::size_t end = pos;
            while(end < text.size() && is_ident_char(text[end]))
                ++end;
            if(!is_plain_identifier(text.substr(pos, end - pos)))
                throw ParseError("expected an atom", start);
            atoms.emplace_back(std::string(text.substr(pos, end - pos)));
            pos = end;
        }
        while(pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if(pos == text.size())
            break;
        if(text[pos] != ',')
            throw ParseError("expected ','", pos);
        ++pos;
    }
    return Sigma(std::move(atoms));
}

std::string render_sigma(const Sigma &sigma) {
    bool single_letters = true;
    for(const Atom &a : sigma.atoms())
        single_letters = single_letters && a.name().size() == 1 && is_ident_start(a.name()[0]);
    std::string out;
    for(std::size_t i = 0; i < sigma.size(); ++i) {
        if(single_letters) {
            out += sigma.atoms()[i].name();
        } else {
            if(i > 0)
                out += ',';
            out += '"' + sigma.atoms()[i].name() + '"';
        }
    }
    return out;
}

} // namespace condalg
