/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/syntax/parse.hpp"
#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace convkit {

namespace {
std::string describe(std::size_t line, std::size_t column, std::string const & message,
                     std::vector<std::string> const & expected) {
    std::ostringstream os;
    os << line << ":" << column << ": " << message;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
        os << ")";
    }
    return os.str();
}
} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected)
    : Failure("parse", describe(line, column, message, expected)), m_line(line), m_column(column),
      m_expected(std::move(expected)) {}

namespace {

// ===== lexer ===============================================================

enum class Tok { Ident, TyVar, Sym, Anti, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, column;
};

bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || c == '\''; }

std::vector<Token> lex(std::string_view src) {
    static char const * const symbols[] = {"==>", "<=>", "==", "=>", "<<", "\\/", "/\\", "->", "()", "\\", ".",
                                           ",",   "(",   ")",  "|",  "^",  "~",   "!",   "?",  ":",  "#",  "="};
    static std::pair<char const *, char const *> const unicode[] = {
        {"\xE2\x88\xA8", "\\/"}, {"\xE2\x88\xA7", "/\\"}, {"\xCE\xBB", "\\"},
        {"\xC2\xAC", "~"},       {"\xE2\x87\x94", "<=>"}, {"\xE2\x9F\xB9", "==>"}};
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') { ++line; col = 1; }
            else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) ++col;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
        std::size_t l = line, cl = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (c == '*') {
            std::size_t j = i;
            while (j < src.size() && src[j] == '*') ++j;
            while (j < src.size() && ident_char(src[j])) ++j;
            out.push_back({Tok::TyVar, std::string(src.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (c == '^' && i + 1 < src.size() && ident_start(src[i + 1])) {
            char prev = i == 0 ? ' ' : src[i - 1];
            if (std::isspace(static_cast<unsigned char>(prev)) || prev == '(' || prev == ',' || prev == '|' ||
                prev == '>' || prev == '.') {
                std::size_t j = i + 1;
                while (j < src.size() && ident_char(src[j])) ++j;
                out.push_back({Tok::Anti, std::string(src.substr(i + 1, j - i - 1)), l, cl});
                advance(j - i);
                continue;
            }
        }
        bool matched = false;
        for (auto const & [u, s] : unicode) {
            std::string_view us(u);
            if (src.substr(i, us.size()) == us) {
                out.push_back({Tok::Sym, s, l, cl});
                advance(us.size());
                matched = true;
                break;
            }
        }
        if (matched) continue;
        for (char const * s : symbols) {
            std::string_view sv(s);
            if (src.substr(i, sv.size()) == sv) {
                out.push_back({Tok::Sym, std::string(sv), l, cl});
                advance(sv.size());
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// ===== raw syntax ==========================================================

struct Binder {
    std::string name;
    std::optional<Type> type;
};

struct RTerm;
using RT = std::shared_ptr<RTerm const>;
struct RTerm {
    enum K { Ident, Abs, App, Cond, Pair, Infix, Unit, Anti, Annot } kind;
    std::string name;
    std::vector<Binder> binders;
    RT a, b, c;
    std::optional<Term> anti;
    std::optional<Type> annot;
    std::size_t line = 0, column = 0;
};

struct RForm;
using RF = std::shared_ptr<RForm const>;
struct RForm {
    enum K { Forall, Exists, Conj, Disj, Imp, Iff, Neg, Equiv, Inequiv, Pred, Anti } kind;
    std::string name;
    std::vector<Binder> binders;
    RF a, b;
    RT ta, tb;
    std::optional<Formula> anti;
    std::size_t line = 0, column = 0;
};

// ===== parser ==============================================================

class Parser {
public:
    Parser(std::vector<Token> toks, Signature const * sig, AntiquoteFn const * anti)
        : m_toks(std::move(toks)), m_sig(sig), m_anti(anti) {}

    Type type() {
        Type l = type_prod();
        if (accept_sym("->")) return Type::fun(l, type());
        return l;
    }

    RT term() {
        RT l = cond_term();
        if (accept_sym(",")) {
            RT r = term();
            return make_term(RTerm::Pair, l, r);
        }
        return l;
    }

    RF form() {
        RF l = imp();
        if (accept_sym("<=>")) return make_form(RForm::Iff, l, imp());
        return l;
    }

    bool at_end() const { return peek().kind == Tok::End; }
    void expect_end() {
        if (!at_end()) error("unexpected '" + peek().text + "'", {"end of input"});
    }
    std::size_t mark() const { return m_pos; }
    void reset(std::size_t p) { m_pos = p; }

private:
    // ----- tokens -----
    Token const & peek(std::size_t k = 0) const { return m_toks[std::min(m_pos + k, m_toks.size() - 1)]; }
    bool is_sym(char const * s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
    bool accept_sym(char const * s) {
        if (!is_sym(s)) return false;
        ++m_pos;
        return true;
    }
    void expect_sym(char const * s) {
        if (!accept_sym(s)) error("unexpected '" + peek().text + "'", {std::string("'") + s + "'"});
    }
    [[noreturn]] void error(std::string const & msg, std::vector<std::string> expected = {}) const {
        Token const & t = peek();
        throw ParseError(t.line, t.column, t.kind == Tok::End ? "unexpected end of input" : msg, std::move(expected));
    }

    bool is_pred(std::string const & name) const {
        if (name == "TRUTH" || name == "FALSITY") return true;
        return m_sig && m_sig->predicate(name).has_value();
    }
    bool is_infix_name(Token const & t) const {
        if (t.kind == Tok::Ident || (t.kind == Tok::Sym && t.text == "=")) {
            if (!m_sig) return false;
            auto c = m_sig->constant(t.text);
            return c && c->infix;
        }
        return false;
    }
    std::optional<Antiquote> lookup_anti(std::string const & name) const {
        if (!m_anti || !*m_anti) return std::nullopt;
        return (*m_anti)(name);
    }

    RT make_term(RTerm::K k, RT a = nullptr, RT b = nullptr, RT c = nullptr) {
        auto t = std::make_shared<RTerm>();
        t->kind = k;
        t->a = std::move(a);
        t->b = std::move(b);
        t->c = std::move(c);
        t->line = peek().line;
        t->column = peek().column;
        return t;
    }
    RF make_form(RForm::K k, RF a = nullptr, RF b = nullptr) {
        auto f = std::make_shared<RForm>();
        f->kind = k;
        f->a = std::move(a);
        f->b = std::move(b);
        f->line = peek().line;
        f->column = peek().column;
        return f;
    }

    // ----- types -----
    Type type_prod() {
        Type l = type_atom();
        if (accept_sym("#")) return Type::prod(l, type_prod());
        return l;
    }
    Type type_atom() {
        Token const & t = peek();
        if (t.kind == Tok::TyVar) { ++m_pos; return Type::var(t.text); }
        if (t.kind == Tok::Ident) { ++m_pos; return Type::atom(t.text); }
        if (accept_sym("(")) {
            Type ty = type();
            expect_sym(")");
            return ty;
        }
        error("bad type", {"type"});
    }

    std::vector<Binder> binders() {
        std::vector<Binder> bs;
        while (peek().kind == Tok::Ident) {
            Binder b{peek().text, std::nullopt};
            ++m_pos;
            if (accept_sym(":")) b.type = type();
            bs.push_back(std::move(b));
        }
        if (bs.empty()) error("missing bound variable", {"identifier"});
        expect_sym(".");
        return bs;
    }

    // ----- terms -----
    RT cond_term() {
        if (is_sym("\\")) {
            auto line = peek().line, column = peek().column;
            ++m_pos;
            auto bs = binders();
            RT body = term();
            auto t = std::make_shared<RTerm>();
            t->kind = RTerm::Abs;
            t->binders = std::move(bs);
            t->a = body;
            t->line = line;
            t->column = column;
            return t;
        }
        RT p = infix();
        if (accept_sym("=>")) {
            RT then_ = cond_term();
            expect_sym("|");
            RT else_ = cond_term();
            return make_term(RTerm::Cond, p, then_, else_);
        }
        return p;
    }

    RT infix() {
        RT l = app();
        if (is_infix_name(peek())) {
            auto t = std::make_shared<RTerm>();
            t->kind = RTerm::Infix;
            t->name = peek().text;
            t->line = peek().line;
            t->column = peek().column;
            ++m_pos;
            t->a = l;
            t->b = infix();
            return t;
        }
        return l;
    }

    bool atom_start() const {
        Token const & t = peek();
        switch (t.kind) {
        case Tok::Ident: return !is_pred(t.text) && !is_infix_name(t);
        case Tok::Anti: {
            auto a = lookup_anti(t.text);
            return !a || std::holds_alternative<Term>(*a);
        }
        case Tok::Sym: return t.text == "(" || t.text == "()";
        default: return false;
        }
    }

    RT app() {
        if (!atom_start()) error("unexpected '" + peek().text + "'", {"term"});
        RT f = atom();
        while (atom_start()) {
            RT x = atom();
            f = make_term(RTerm::App, f, x);
        }
        return f;
    }

    RT atom() {
        Token const & t = peek();
        if (t.kind == Tok::Ident) {
            auto r = make_term(RTerm::Ident);
            std::const_pointer_cast<RTerm>(r)->name = t.text;
            ++m_pos;
            return r;
        }
        if (t.kind == Tok::Anti) {
            auto a = lookup_anti(t.text);
            if (!a) error("unbound antiquotation ^" + t.text);
            auto r = std::make_shared<RTerm>();
            r->kind = RTerm::Anti;
            r->anti = std::get<Term>(*a);
            r->line = t.line;
            r->column = t.column;
            ++m_pos;
            return r;
        }
        if (accept_sym("()")) return make_term(RTerm::Unit);
        expect_sym("(");
        RT inner = term();
        if (accept_sym(":")) {
            auto r = std::make_shared<RTerm>();
            r->kind = RTerm::Annot;
            r->a = inner;
            r->annot = type();
            r->line = inner->line;
            r->column = inner->column;
            inner = r;
        }
        expect_sym(")");
        return inner;
    }

    // ----- formulas -----
    RF imp() {
        RF l = disj();
        if (accept_sym("==>")) return make_form(RForm::Imp, l, imp());
        return l;
    }
    RF disj() {
        RF l = conj();
        if (accept_sym("\\/")) return make_form(RForm::Disj, l, disj());
        return l;
    }
    RF conj() {
        RF l = unary();
        if (accept_sym("/\\") || accept_sym("^")) return make_form(RForm::Conj, l, conj());
        return l;
    }
    RF unary() {
        if (accept_sym("~")) return make_form(RForm::Neg, unary());
        if (is_sym("!") || is_sym("?")) {
            auto f = std::make_shared<RForm>();
            f->kind = is_sym("!") ? RForm::Forall : RForm::Exists;
            f->line = peek().line;
            f->column = peek().column;
            ++m_pos;
            f->binders = binders();
            f->a = form();
            return f;
        }
        return atomic();
    }
    RF atomic() {
        Token const & t = peek();
        if (t.kind == Tok::Anti) {
            auto a = lookup_anti(t.text);
            if (a && std::holds_alternative<Formula>(*a)) {
                auto f = std::make_shared<RForm>();
                f->kind = RForm::Anti;
                f->anti = std::get<Formula>(*a);
                ++m_pos;
                return f;
            }
        }
        if (t.kind == Tok::Ident && is_pred(t.text)) {
            auto f = std::make_shared<RForm>();
            f->kind = RForm::Pred;
            f->name = t.text;
            f->line = t.line;
            f->column = t.column;
            ++m_pos;
            f->ta = app();
            return f;
        }
        std::size_t start = m_pos;
        try {
            return relation();
        } catch (ParseError const & e1) {
            if (m_toks[start].kind != Tok::Sym || m_toks[start].text != "(") throw;
            std::size_t far1 = m_pos;
            m_pos = start;
            try {
                expect_sym("(");
                RF f = form();
                expect_sym(")");
                return f;
            } catch (ParseError const &) {
                // report whichever alternative got further
                if (far1 >= m_pos) throw e1;
                throw;
            }
        }
    }
    RF relation() {
        std::size_t line = peek().line, column = peek().column;
        RT l = term();
        RForm::K k;
        if (accept_sym("==")) k = RForm::Equiv;
        else if (accept_sym("<<")) k = RForm::Inequiv;
        else error("unexpected '" + peek().text + "'", {"'=='", "'<<'"});
        RT r = term();
        auto f = std::make_shared<RForm>();
        f->kind = k;
        f->ta = l;
        f->tb = r;
        f->line = line;
        f->column = column;
        return f;
    }

    std::vector<Token> m_toks;
    std::size_t m_pos = 0;
    Signature const * m_sig;
    AntiquoteFn const * m_anti;
};

// ===== elaboration =========================================================

struct ITy;
using IT = std::shared_ptr<ITy const>;
struct ITy {
    enum K { Meta, Rigid, Atom, Fun, Prod } kind;
    int id = -1;
    std::string name;
    IT l, r;
};

struct ETerm;
using ET = std::shared_ptr<ETerm const>;
struct ETerm {
    enum K { Var, Const, Abs, Comb, Splice } kind;
    std::string name;
    IT ty;
    bool infix = false;
    ET a, b;
    std::optional<Term> splice;
};

struct EForm;
using EF = std::shared_ptr<EForm const>;
struct EForm {
    Formula::Kind kind;
    std::string name;
    ET var; // bound variable or predicate argument
    EF a, b;
    std::optional<Formula> splice;
};

class Elaborator {
public:
    explicit Elaborator(Signature const * sig) : m_sig(sig) {}

    ET term(RT const & r) {
        switch (r->kind) {
        case RTerm::Ident: return ident(*r);
        case RTerm::Unit: return mk_const("()", atom("void"));
        case RTerm::Anti: {
            m_rigid_from(r->anti->type());
            return std::make_shared<ETerm>(ETerm{ETerm::Splice, {}, from_type(r->anti->type(), nullptr), false,
                                                 nullptr, nullptr, r->anti});
        }
        case RTerm::Annot: {
            ET t = term(r->a);
            m_rigid_from(*r->annot);
            unify(t->ty, from_type(*r->annot, nullptr), *r);
            return t;
        }
        case RTerm::Abs: {
            std::vector<ET> vars;
            for (auto const & b : r->binders) {
                IT ty = b.type ? (m_rigid_from(*b.type), from_type(*b.type, nullptr)) : fresh();
                vars.push_back(mk_var(b.name, ty));
                m_bound.push_back(vars.back());
            }
            ET body = term(r->a);
            m_bound.resize(m_bound.size() - vars.size());
            for (auto it = vars.rbegin(); it != vars.rend(); ++it)
                body = std::make_shared<ETerm>(ETerm{ETerm::Abs, {}, fun((*it)->ty, body->ty), false, *it, body, {}});
            return body;
        }
        case RTerm::App: return apply(term(r->a), term(r->b), *r);
        case RTerm::Cond: {
            IT a = fresh();
            ET cond = mk_const("COND", fun(atom("tr"), fun(a, fun(a, a))));
            ET p = term(r->a), t = term(r->b), u = term(r->c);
            return apply(apply(apply(cond, p, *r), t, *r), u, *r);
        }
        case RTerm::Pair: {
            IT a = fresh(), b = fresh();
            ET pair = mk_const("PAIR", fun(a, fun(b, prod(a, b))));
            ET l = term(r->a), rr = term(r->b);
            return apply(apply(pair, l, *r), rr, *r);
        }
        case RTerm::Infix: {
            auto info = m_sig->constant(r->name);
            ET op = mk_const(r->name, from_type(info->type, &m_inst_scratch()), true);
            ET l = term(r->a), rr = term(r->b);
            return apply(apply(op, l, *r), rr, *r);
        }
        }
        return nullptr;
    }

    EF form(RF const & r) {
        switch (r->kind) {
        case RForm::Anti: {
            std::vector<Type> tvs;
            type_vars(*r->anti, tvs);
            for (auto const & tv : tvs) m_rigid.insert(tv.name());
            return std::make_shared<EForm>(EForm{Formula::Kind::Pred, {}, nullptr, nullptr, nullptr, r->anti});
        }
        case RForm::Forall:
        case RForm::Exists: {
            std::vector<ET> vars;
            for (auto const & b : r->binders) {
                IT ty = b.type ? (m_rigid_from(*b.type), from_type(*b.type, nullptr)) : fresh();
                vars.push_back(mk_var(b.name, ty));
                m_bound.push_back(vars.back());
            }
            EF body = form(r->a);
            m_bound.resize(m_bound.size() - vars.size());
            auto k = r->kind == RForm::Forall ? Formula::Kind::Forall : Formula::Kind::Exists;
            for (auto it = vars.rbegin(); it != vars.rend(); ++it)
                body = std::make_shared<EForm>(EForm{k, {}, *it, body, nullptr, {}});
            return body;
        }
        case RForm::Conj: return bin(Formula::Kind::Conj, r);
        case RForm::Disj: return bin(Formula::Kind::Disj, r);
        case RForm::Imp: return bin(Formula::Kind::Imp, r);
        case RForm::Iff: return bin(Formula::Kind::Iff, r);
        case RForm::Neg: {
            EF a = form(r->a);
            return std::make_shared<EForm>(EForm{Formula::Kind::Imp, {}, nullptr, a, pred("FALSITY", mk_const("()", atom("void"))), {}});
        }
        case RForm::Equiv:
        case RForm::Inequiv: {
            ET l = term(r->ta), rr = term(r->tb);
            RTerm pos;
            pos.line = r->line;
            pos.column = r->column;
            unify(l->ty, rr->ty, pos);
            ET pair = mk_const("PAIR", fun(l->ty, fun(rr->ty, prod(l->ty, rr->ty))));
            ET arg = apply(apply(pair, l, pos), rr, pos);
            return pred(r->kind == RForm::Equiv ? "equiv" : "inequiv", arg);
        }
        case RForm::Pred: {
            ET arg = term(r->ta);
            std::optional<Type> pty = m_sig ? m_sig->predicate(r->name) : std::nullopt;
            if (!pty && (r->name == "TRUTH" || r->name == "FALSITY")) pty = void_type();
            RTerm pos;
            pos.line = r->line;
            pos.column = r->column;
            unify(arg->ty, from_type(*pty, &m_inst_scratch()), pos);
            return pred(r->name, arg);
        }
        }
        return nullptr;
    }

    // ----- zonking -----
    Term zonk(ET const & e) {
        switch (e->kind) {
        case ETerm::Splice: return *e->splice;
        case ETerm::Var: return Term::mk_var(e->name, zonk(e->ty));
        case ETerm::Const: return Term::mk_const(e->name, zonk(e->ty), e->infix);
        case ETerm::Abs: {
            Term v = zonk(e->a);
            return Term::mk_abs(v, zonk(e->b));
        }
        case ETerm::Comb: {
            Term f = zonk(e->a);
            return Term::mk_comb(f, zonk(e->b));
        }
        }
        fail("zonk");
    }

    Formula zonk(EF const & e) {
        if (e->splice) return *e->splice;
        switch (e->kind) {
        case Formula::Kind::Forall: {
            Term v = zonk(e->var);
            return Formula::mk_forall(v, zonk(e->a));
        }
        case Formula::Kind::Exists: {
            Term v = zonk(e->var);
            return Formula::mk_exists(v, zonk(e->a));
        }
        case Formula::Kind::Pred: return Formula::mk_pred(e->name, zonk(e->var));
        default: {
            Formula l = zonk(e->a);
            Formula r = zonk(e->b);
            switch (e->kind) {
            case Formula::Kind::Conj: return Formula::mk_conj(l, r);
            case Formula::Kind::Disj: return Formula::mk_disj(l, r);
            case Formula::Kind::Imp: return Formula::mk_imp(l, r);
            default: return Formula::mk_iff(l, r);
            }
        }
        }
    }

private:
    using InstMap = std::map<std::string, IT>;

    InstMap & m_inst_scratch() {
        m_scratch.clear();
        return m_scratch;
    }

    IT fresh() {
        m_bind.emplace_back(nullptr);
        return std::make_shared<ITy>(ITy{ITy::Meta, static_cast<int>(m_bind.size()) - 1, {}, nullptr, nullptr});
    }
    static IT atom(std::string n) { return std::make_shared<ITy>(ITy{ITy::Atom, -1, std::move(n), nullptr, nullptr}); }
    static IT fun(IT a, IT b) { return std::make_shared<ITy>(ITy{ITy::Fun, -1, {}, std::move(a), std::move(b)}); }
    static IT prod(IT a, IT b) { return std::make_shared<ITy>(ITy{ITy::Prod, -1, {}, std::move(a), std::move(b)}); }

    void m_rigid_from(Type const & ty) {
        std::vector<Type> tvs;
        type_vars(ty, tvs);
        for (auto const & tv : tvs) m_rigid.insert(tv.name());
    }

    // inst == nullptr: type variables stay rigid; otherwise each gets a fresh meta.
    IT from_type(Type const & ty, InstMap * inst) {
        switch (ty.kind()) {
        case Type::Kind::Var:
            if (!inst) return std::make_shared<ITy>(ITy{ITy::Rigid, -1, ty.name(), nullptr, nullptr});
            if (auto it = inst->find(ty.name()); it != inst->end()) return it->second;
            return (*inst)[ty.name()] = fresh();
        case Type::Kind::Atom: return atom(ty.name());
        case Type::Kind::Fun: return fun(from_type(ty.left(), inst), from_type(ty.right(), inst));
        case Type::Kind::Prod: return prod(from_type(ty.left(), inst), from_type(ty.right(), inst));
        }
        return nullptr;
    }

    IT resolve(IT t) const {
        while (t->kind == ITy::Meta && m_bind[t->id]) t = m_bind[t->id];
        return t;
    }

    bool occurs(int id, IT t) const {
        t = resolve(t);
        switch (t->kind) {
        case ITy::Meta: return t->id == id;
        case ITy::Fun:
        case ITy::Prod: return occurs(id, t->l) || occurs(id, t->r);
        default: return false;
        }
    }

    bool unify_rec(IT a, IT b) {
        a = resolve(a);
        b = resolve(b);
        if (a->kind == ITy::Meta && b->kind == ITy::Meta && a->id == b->id) return true;
        if (a->kind == ITy::Meta) {
            if (occurs(a->id, b)) return false;
            m_bind[a->id] = b;
            return true;
        }
        if (b->kind == ITy::Meta) return unify_rec(b, a);
        if (a->kind != b->kind) return false;
        switch (a->kind) {
        case ITy::Rigid:
        case ITy::Atom: return a->name == b->name;
        default: return unify_rec(a->l, b->l) && unify_rec(a->r, b->r);
        }
    }

    void unify(IT a, IT b, RTerm const & where) {
        if (!unify_rec(a, b)) throw ParseError(where.line, where.column, "type error");
    }

    Type zonk(IT t) {
        t = resolve(t);
        switch (t->kind) {
        case ITy::Meta: {
            Type v = Type::var(next_name());
            m_bind[t->id] = std::make_shared<ITy>(ITy{ITy::Rigid, -1, v.name(), nullptr, nullptr});
            return v;
        }
        case ITy::Rigid: return Type::var(t->name);
        case ITy::Atom: return Type::atom(t->name);
        case ITy::Fun: {
            Type l = zonk(t->l);
            return Type::fun(l, zonk(t->r));
        }
        case ITy::Prod: {
            Type l = zonk(t->l);
            return Type::prod(l, zonk(t->r));
        }
        }
        return Type::atom("?");
    }

    std::string next_name() {
        for (;;) {
            std::string n(++m_named, '*');
            if (!m_rigid.count(n)) return n;
        }
    }

    ET mk_var(std::string const & name, IT ty) {
        return std::make_shared<ETerm>(ETerm{ETerm::Var, name, std::move(ty), false, nullptr, nullptr, {}});
    }
    ET mk_const(std::string const & name, IT ty, bool infix = false) {
        return std::make_shared<ETerm>(ETerm{ETerm::Const, name, std::move(ty), infix, nullptr, nullptr, {}});
    }

    ET ident(RTerm const & r) {
        for (auto it = m_bound.rbegin(); it != m_bound.rend(); ++it)
            if ((*it)->name == r.name) return *it;
        if (m_sig) {
            if (auto c = m_sig->constant(r.name)) {
                if (c->infix) throw ParseError(r.line, r.column, "infix constant '" + r.name + "' used as an operand");
                return mk_const(r.name, from_type(c->type, &m_inst_scratch()));
            }
        }
        if (auto it = m_free.find(r.name); it != m_free.end()) return it->second;
        return m_free[r.name] = mk_var(r.name, fresh());
    }

    ET apply(ET f, ET x, RTerm const & where) {
        IT res = fresh();
        unify(f->ty, fun(x->ty, res), where);
        return std::make_shared<ETerm>(ETerm{ETerm::Comb, {}, res, false, std::move(f), std::move(x), {}});
    }

    EF bin(Formula::Kind k, RF const & r) {
        EF a = form(r->a);
        EF b = form(r->b);
        return std::make_shared<EForm>(EForm{k, {}, nullptr, a, b, {}});
    }

    EF pred(std::string const & name, ET arg) {
        return std::make_shared<EForm>(EForm{Formula::Kind::Pred, name, std::move(arg), nullptr, nullptr, {}});
    }

    Signature const * m_sig;
    std::vector<IT> m_bind;
    std::vector<ET> m_bound;
    std::map<std::string, ET> m_free;
    std::set<std::string> m_rigid;
    InstMap m_scratch;
    int m_named = 0;
};

} // namespace

Type parse_type(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    if (!text.empty() && text.front() == ':') text.remove_prefix(1);
    Parser p(lex(text), nullptr, nullptr);
    Type ty = p.type();
    p.expect_end();
    return ty;
}

Term parse_term(std::string_view text, Signature const & sig, ParseOptions const & opts) {
    Parser p(lex(text), &sig, &opts.antiquote);
    RT r = p.term();
    p.expect_end();
    Elaborator e(&sig);
    ET et = e.term(r);
    return e.zonk(et);
}

std::vector<Formula> parse_forms(std::vector<std::string> const & texts, Signature const & sig,
                                 ParseOptions const & opts) {
    Elaborator e(&sig);
    std::vector<EF> efs;
    for (auto const & text : texts) {
        Parser p(lex(text), &sig, &opts.antiquote);
        RF r = p.form();
        p.expect_end();
        efs.push_back(e.form(r));
    }
    std::vector<Formula> out;
    for (auto const & ef : efs) out.push_back(e.zonk(ef));
    return out;
}

Formula parse_form(std::string_view text, Signature const & sig, ParseOptions const & opts) {
    return parse_forms({std::string(text)}, sig, opts).front();
}

std::variant<Term, Formula> parse_quotation(std::string_view text, Signature const & sig, ParseOptions const & opts) {
    try {
        return parse_term(text, sig, opts);
    } catch (ParseError const &) {
        return parse_form(text, sig, opts);
    }
}

} // namespace convkit

namespace convkit {

namespace {
class BuiltinSignature : public Signature {
public:
    std::optional<ConstInfo> constant(std::string const & name) const override {
        Type a = Type::var("*"), b = Type::var("**"), tr = tr_type();
        if (name == "UU") return ConstInfo{a};
        if (name == "TT" || name == "FF") return ConstInfo{tr};
        if (name == "()") return ConstInfo{void_type()};
        if (name == "FST") return ConstInfo{Type::fun(Type::prod(a, b), a)};
        if (name == "SND") return ConstInfo{Type::fun(Type::prod(a, b), b)};
        if (name == "COND") return ConstInfo{Type::fun(tr, Type::fun(a, Type::fun(a, a)))};
        if (name == "PAIR") return ConstInfo{Type::fun(a, Type::fun(b, Type::prod(a, b)))};
        return std::nullopt;
    }
    std::optional<Type> predicate(std::string const & name) const override {
        Type a = Type::var("*");
        if (name == "TRUTH" || name == "FALSITY") return void_type();
        if (name == "equiv" || name == "inequiv") return Type::prod(a, a);
        return std::nullopt;
    }
};
} // namespace

Signature const & builtin_signature() {
    static BuiltinSignature const sig;
    return sig;
}

} // namespace convkit
