/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/syntax/print.hpp"
#include <cctype>

namespace convkit {

std::string print_type(Type const & ty) {
    switch (ty.kind()) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return ty.name();
    case Type::Kind::Fun: {
        std::string l = print_type(ty.left());
        if (ty.left().is_fun()) l = "(" + l + ")";
        return l + " -> " + print_type(ty.right());
    }
    case Type::Kind::Prod: {
        std::string l = print_type(ty.left());
        std::string r = print_type(ty.right());
        if (ty.left().is_fun() || ty.left().is_prod()) l = "(" + l + ")";
        if (ty.right().is_fun()) r = "(" + r + ")";
        return l + " # " + r;
    }
    }
    return {};
}

namespace {

// Printing positions, from loosest to tightest.
enum class Ctx {
    Top,       // anything goes
    EqLeft,    // left operand of == / <<: pairs need parentheses
    PairLeft,  // left component of a pair
    CondPart,  // condition or branch of a conditional
    Operand,   // operand of an infix constant
    AppFun,    // function position of a combination or predicate argument
    AppArg,    // argument position of a combination
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string paren(std::string const & s) { return "(" + s + ")"; }

std::string term_str(Term const & t, Ctx ctx);

// Juxtaposition only needs a space between two identifier characters:
// `FST(TT,FF)`, `MAP(MAP VARS_OF)l`, `f x`.
std::string juxtapose(std::string const & f, std::string const & x) {
    if (!f.empty() && !x.empty() && ident_char(f.back()) && ident_char(x.front())) return f + " " + x;
    return f + x;
}

std::string term_str(Term const & t, Ctx ctx) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: return t.name();
    case Term::Kind::Abs: {
        std::string s = "\\" + t.bound().name() + "." + term_str(t.body(), Ctx::Top);
        return (ctx == Ctx::Top || ctx == Ctx::EqLeft) ? s : paren(s);
    }
    case Term::Kind::Comb: break;
    }
    if (is_cond(t)) {
        Cond c = dest_cond(t);
        return "(" + term_str(c.cond, Ctx::CondPart) + " => " + term_str(c.then_, Ctx::CondPart) + " | " +
               term_str(c.else_, Ctx::CondPart) + ")";
    }
    if (is_pair(t)) {
        auto [l, r] = dest_pair(t);
        std::string s = term_str(l, Ctx::PairLeft) + "," + term_str(r, Ctx::Top);
        return ctx == Ctx::Top ? s : paren(s);
    }
    if (is_infix_app(t)) {
        std::string s = term_str(t.fun().arg(), Ctx::Operand) + " " + t.fun().fun().name() + " " +
                        term_str(t.arg(), Ctx::Operand);
        bool bare = ctx == Ctx::Top || ctx == Ctx::EqLeft || ctx == Ctx::PairLeft || ctx == Ctx::CondPart;
        return bare ? s : paren(s);
    }
    std::string s = juxtapose(term_str(t.fun(), Ctx::AppFun), term_str(t.arg(), Ctx::AppArg));
    return (ctx == Ctx::AppArg || ctx == Ctx::Operand) ? paren(s) : s;
}

enum Prec { Quant = 0, IffP = 1, ImpP = 2, DisjP = 3, ConjP = 4, NegP = 5, AtomP = 6 };

int prec_of(Formula const & f) {
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return Quant;
    case Formula::Kind::Iff: return IffP;
    case Formula::Kind::Imp: return is_neg(f) ? NegP : ImpP;
    case Formula::Kind::Disj: return DisjP;
    case Formula::Kind::Conj: return ConjP;
    case Formula::Kind::Pred: return AtomP;
    }
    return AtomP;
}

std::string form_str(Formula const & f, int min_prec);

std::string form_body(Formula const & f) {
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        std::string s = f.is_forall() ? "!" : "?";
        s += f.bound().name();
        Formula body = f.body();
        while (body.kind() == f.kind()) {
            s += " " + body.bound().name();
            body = body.body();
        }
        return s + ". " + form_str(body, Quant);
    }
    case Formula::Kind::Iff: return form_str(f.left(), ImpP) + " <=> " + form_str(f.right(), ImpP);
    case Formula::Kind::Imp:
        if (is_neg(f)) return "~ " + form_str(f.left(), NegP);
        return form_str(f.left(), DisjP) + " ==> " + form_str(f.right(), ImpP);
    case Formula::Kind::Disj: return form_str(f.left(), ConjP) + " \\/ " + form_str(f.right(), DisjP);
    case Formula::Kind::Conj: return form_str(f.left(), NegP) + " ^ " + form_str(f.right(), ConjP);
    case Formula::Kind::Pred: break;
    }
    if (is_equiv(f) || is_inequiv(f)) {
        auto [l, r] = dest_pair(f.arg());
        return term_str(l, Ctx::EqLeft) + (is_equiv(f) ? " == " : " << ") + term_str(r, Ctx::Top);
    }
    return f.pred_name() + " " + term_str(f.arg(), Ctx::AppFun);
}

std::string form_str(Formula const & f, int min_prec) {
    std::string s = form_body(f);
    return prec_of(f) < min_prec ? paren(s) : s;
}

} // namespace

std::string print_term(Term const & t) { return term_str(t, Ctx::Top); }
std::string print_form(Formula const & f) { return form_str(f, Quant); }

} // namespace convkit
