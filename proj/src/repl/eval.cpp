/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
// The expression language: application by juxtaposition, `[a; b]` lists,
// `(a, b)` argument groups, "quotations", 'labels' and infix combinators.
#include <cctype>
#include "builtins.hpp"
#include "convkit/repl/session.hpp"

namespace convkit {

namespace {

struct Tok {
    enum Kind { Ident, Quote, Label, Num, Sym, End } kind;
    std::string text;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Tok> lex(std::string const & src) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '"' || c == '\'') {
            std::size_t j = src.find(c, i + 1);
            if (j == std::string::npos) throw CommandError("unterminated quotation");
            out.push_back({c == '"' ? Tok::Quote : Tok::Label, src.substr(i + 1, j - i - 1)});
            i = j + 1;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Num, src.substr(i, j - i)});
            i = j;
        } else if (ident_char(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i)});
            i = j;
        } else if (std::string("()[];,").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c)});
            ++i;
        } else {
            throw CommandError(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, ""});
    return out;
}

class Evaluator {
public:
    Evaluator(Session & s, std::string const & src) : m_s(s), m_toks(lex(src)) {}

    Value run() {
        Value v = expr();
        if (peek().kind != Tok::End) throw CommandError("unexpected '" + peek().text + "'");
        return v;
    }

private:
    Tok const & peek() const { return m_toks[m_pos]; }
    bool is_sym(char const * s) const { return peek().kind == Tok::Sym && peek().text == s; }
    void expect(char const * s) {
        if (!is_sym(s)) throw CommandError(std::string("expected '") + s + "'");
        ++m_pos;
    }
    bool infix_next() const { return peek().kind == Tok::Ident && repl::is_infix(peek().text); }
    bool atom_start() const {
        Tok const & t = peek();
        if (t.kind == Tok::End) return false;
        if (t.kind == Tok::Sym) return t.text == "(" || t.text == "[";
        return !infix_next();
    }

    Value expr() {
        Value v = app(true);
        while (infix_next()) {
            Value op = resolve(m_toks[m_pos++].text);
            Value rhs = app(false);
            v = repl::apply(m_s, repl::apply(m_s, op, v), rhs);
        }
        return v;
    }

    // The head of an application may be an infix name used as a function,
    // as in `then(T1, T2)`.
    Value app(bool head_may_be_op) {
        Value v;
        if (head_may_be_op && infix_next())
            v = resolve(m_toks[m_pos++].text);
        else
            v = atom();
        while (atom_start()) v = repl::apply(m_s, v, atom());
        return v;
    }

    Value atom() {
        Tok t = peek();
        switch (t.kind) {
        case Tok::Ident: ++m_pos; return resolve(t.text);
        case Tok::Quote: ++m_pos; return quotation(t.text);
        case Tok::Label: ++m_pos; return Label{t.text};
        case Tok::Num: ++m_pos; return std::stol(t.text);
        case Tok::Sym:
            if (t.text == "(") {
                ++m_pos;
                if (is_sym(")")) {
                    ++m_pos;
                    return Value();
                }
                std::vector<Value> items{expr()};
                while (is_sym(",")) {
                    ++m_pos;
                    items.push_back(expr());
                }
                expect(")");
                if (items.size() == 1) return items.front();
                return Tuple{std::move(items)};
            }
            if (t.text == "[") {
                ++m_pos;
                List items;
                if (!is_sym("]")) {
                    items.push_back(expr());
                    while (is_sym(";")) {
                        ++m_pos;
                        items.push_back(expr());
                    }
                }
                expect("]");
                return items;
            }
            break;
        case Tok::End: throw CommandError("unexpected end of input");
        }
        throw CommandError("unexpected '" + t.text + "'");
    }

    Value resolve(std::string const & name) {
        if (auto v = m_s.binding(name)) return *v;
        if (auto v = repl::builtin(name)) return *v;
        try {
            return m_s.current()->theorem(name);
        } catch (Failure const &) {
        }
        throw CommandError("unbound identifier " + name);
    }

    Value quotation(std::string const & text) {
        if (!text.empty() && text.front() == ':') return parse_type(std::string_view(text).substr(1));
        ParseOptions opts;
        opts.antiquote = [this](std::string const & n) -> std::optional<Antiquote> {
            auto v = m_s.binding(n);
            if (v && v->is<Term>()) return v->as<Term>();
            if (v && v->is<Formula>()) return v->as<Formula>();
            return std::nullopt;
        };
        auto q = parse_quotation(text, *m_s.current(), opts);
        if (auto t = std::get_if<Term>(&q)) return *t;
        return std::get<Formula>(q);
    }

    Session & m_s;
    std::vector<Tok> m_toks;
    std::size_t m_pos = 0;
};

} // namespace

Value Session::evaluate(std::string const & expr) { return Evaluator(*this, expr).run(); }

} // namespace convkit
