#include "lambda1/parser.hpp"

#include <cctype>
#include <vector>

namespace pars::lambda1 {

namespace {

enum class Tok { Ident, Backslash, Bang, Dot, LParen, RParen, Choice, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        switch (c) {
            case '\\': out.push_back({Tok::Backslash, "\\", i}); ++i; continue;
            case '!': out.push_back({Tok::Bang, "!", i}); ++i; continue;
            case '.': out.push_back({Tok::Dot, ".", i}); ++i; continue;
            case '(': out.push_back({Tok::LParen, "(", i}); ++i; continue;
            case ')': out.push_back({Tok::RParen, ")", i}); ++i; continue;
            case '+': {
                if (i + 1 >= s.size() || s[i + 1] != '{') throw ParseError("expected '{' after '+'", i);
                auto close = s.find('}', i + 2);
                if (close == std::string_view::npos) throw ParseError("unterminated probability", i);
                std::string_view inner = s.substr(i + 2, close - i - 2);
                while (!inner.empty() && std::isspace(static_cast<unsigned char>(inner.front()))) inner.remove_prefix(1);
                while (!inner.empty() && std::isspace(static_cast<unsigned char>(inner.back()))) inner.remove_suffix(1);
                out.push_back({Tok::Choice, std::string(inner), i});
                i = close + 1;
                continue;
            }
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Term parse_all() {
        Term t = term();
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return t;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }

    Token expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        return next();
    }

    Term term() {
        Term left = application();
        if (peek().kind != Tok::Choice) return left;
        Token t = next();
        Weight p;
        try {
            p = Weight::parse(t.text);
        } catch (const WeightError&) {
            throw ParseError("malformed probability '" + t.text + "'", t.pos);
        }
        if (!p.is_positive() || p >= Weight(1)) throw ParseError("probability " + t.text + " is not in (0,1)", t.pos);
        return Term::choice(p, left, term());
    }

    bool starts_atom() const {
        auto k = peek().kind;
        return k == Tok::Ident || k == Tok::LParen || k == Tok::Bang || k == Tok::Backslash;
    }

    Term application() {
        if (!starts_atom()) throw ParseError("expected a term", peek().pos);
        Term t = atom();
        while (starts_atom()) t = Term::app(t, atom());
        return t;
    }

    Term atom() {
        Token t = next();
        switch (t.kind) {
            case Tok::Ident: return Term::var(t.text);
            case Tok::LParen: {
                Term inner = term();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Bang:
                if (!starts_atom()) throw ParseError("expected a term after '!'", peek().pos);
                return Term::bang(atom());
            case Tok::Backslash: {
                bool banged = peek().kind == Tok::Bang;
                if (banged) next();
                Token x = expect(Tok::Ident, "a binder name");
                expect(Tok::Dot, "'.'");
                Term body = term();
                return banged ? Term::bang_lam(x.text, body) : Term::lam(x.text, body);
            }
            default: throw ParseError("expected a term", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

enum class Ctx { Top, ChoiceLeft, AppFun, AppArg, Atom };

void emit(const Term& m, Ctx ctx, std::string& out) {
    auto wrap = [&](bool parens, auto&& body) {
        if (parens) out += '(';
        body();
        if (parens) out += ')';
    };
    switch (m.kind()) {
        case Kind::Var: out += m.name(); return;
        case Kind::Bang:
            out += '!';
            emit(m.body(), Ctx::Atom, out);
            return;
        case Kind::Lam:
        case Kind::BangLam:
            wrap(ctx != Ctx::Top, [&] {
                out += m.kind() == Kind::Lam ? "\\" : "\\!";
                out += m.name();
                out += ". ";
                emit(m.body(), Ctx::Top, out);
            });
            return;
        case Kind::Choice:
            wrap(ctx != Ctx::Top, [&] {
                emit(m.left(), Ctx::ChoiceLeft, out);
                out += " +{" + m.prob().str() + "} ";
                emit(m.right(), Ctx::Top, out);
            });
            return;
        case Kind::App:
            wrap(ctx == Ctx::AppArg || ctx == Ctx::Atom, [&] {
                emit(m.left(), Ctx::AppFun, out);
                out += ' ';
                emit(m.right(), Ctx::AppArg, out);
            });
            return;
    }
}

}  // namespace

Term parse(std::string_view src) { return Parser(tokenize(src)).parse_all(); }

std::string print(const Term& m) {
    std::string out;
    emit(m, Ctx::Top, out);
    return out;
}

}  // namespace pars::lambda1
