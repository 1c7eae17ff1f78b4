/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/syntax/syntax.hpp"
#include <algorithm>

namespace convkit {

// ----- types ---------------------------------------------------------------

Type Type::var(std::string name) {
    return Type(std::make_shared<Node const>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}
Type Type::atom(std::string name) {
    return Type(std::make_shared<Node const>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}
Type Type::fun(Type dom, Type cod) {
    return Type(std::make_shared<Node const>(Node{Kind::Fun, {}, dom.m_node, cod.m_node}));
}
Type Type::prod(Type left, Type right) {
    return Type(std::make_shared<Node const>(Node{Kind::Prod, {}, left.m_node, right.m_node}));
}

bool operator==(Type const & a, Type const & b) {
    if (a.m_node == b.m_node) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Type::Kind::Var:
    case Type::Kind::Atom: return a.name() == b.name();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

Type tr_type() { static Type const t = Type::atom("tr"); return t; }
Type void_type() { static Type const t = Type::atom("void"); return t; }

Type inst_type(Type const & ty, TypeSubst const & theta) {
    if (theta.empty()) return ty;
    switch (ty.kind()) {
    case Type::Kind::Var:
        for (auto const & [rep, v] : theta)
            if (v == ty) return rep;
        return ty;
    case Type::Kind::Atom: return ty;
    case Type::Kind::Fun: return Type::fun(inst_type(ty.left(), theta), inst_type(ty.right(), theta));
    case Type::Kind::Prod: return Type::prod(inst_type(ty.left(), theta), inst_type(ty.right(), theta));
    }
    return ty;
}

void type_vars(Type const & ty, std::vector<Type> & out) {
    switch (ty.kind()) {
    case Type::Kind::Var:
        if (std::find(out.begin(), out.end(), ty) == out.end()) out.push_back(ty);
        return;
    case Type::Kind::Atom: return;
    default:
        type_vars(ty.left(), out);
        type_vars(ty.right(), out);
    }
}

// ----- terms ---------------------------------------------------------------

Term Term::mk_var(std::string name, Type ty) {
    return Term(std::make_shared<Node const>(Node{Kind::Var, std::move(name), std::move(ty), false, nullptr, nullptr}));
}

Term Term::mk_const(std::string name, Type ty, bool infix) {
    return Term(std::make_shared<Node const>(Node{Kind::Const, std::move(name), std::move(ty), infix, nullptr, nullptr}));
}

Term Term::mk_abs(Term const & var, Term const & body) {
    if (!var.is_var()) fail("mk_abs");
    return Term(std::make_shared<Node const>(
        Node{Kind::Abs, {}, Type::fun(var.type(), body.type()), false, var.m_node, body.m_node}));
}

Term Term::mk_comb(Term const & fun, Term const & arg) {
    Type const & fty = fun.type();
    if (!fty.is_fun() || fty.left() != arg.type()) fail("mk_comb");
    return Term(std::make_shared<Node const>(Node{Kind::Comb, {}, fty.right(), false, fun.m_node, arg.m_node}));
}

bool operator==(Term const & a, Term const & b) {
    if (a.m_node == b.m_node) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var: return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::Abs: return a.bound() == b.bound() && a.body() == b.body();
    case Term::Kind::Comb: return a.fun() == b.fun() && a.arg() == b.arg();
    }
    return false;
}

// ----- formulas ------------------------------------------------------------

Formula Formula::mk_forall(Term const & var, Formula const & body) {
    if (!var.is_var()) fail("mk_forall");
    return Formula(std::make_shared<Node const>(Node{Kind::Forall, {}, var, body.m_node, nullptr}));
}
Formula Formula::mk_exists(Term const & var, Formula const & body) {
    if (!var.is_var()) fail("mk_exists");
    return Formula(std::make_shared<Node const>(Node{Kind::Exists, {}, var, body.m_node, nullptr}));
}
Formula Formula::mk_conj(Formula const & a, Formula const & b) {
    return Formula(std::make_shared<Node const>(Node{Kind::Conj, {}, std::nullopt, a.m_node, b.m_node}));
}
Formula Formula::mk_disj(Formula const & a, Formula const & b) {
    return Formula(std::make_shared<Node const>(Node{Kind::Disj, {}, std::nullopt, a.m_node, b.m_node}));
}
Formula Formula::mk_imp(Formula const & a, Formula const & b) {
    return Formula(std::make_shared<Node const>(Node{Kind::Imp, {}, std::nullopt, a.m_node, b.m_node}));
}
Formula Formula::mk_iff(Formula const & a, Formula const & b) {
    return Formula(std::make_shared<Node const>(Node{Kind::Iff, {}, std::nullopt, a.m_node, b.m_node}));
}
Formula Formula::mk_pred(std::string name, Term const & arg) {
    return Formula(std::make_shared<Node const>(Node{Kind::Pred, std::move(name), arg, nullptr, nullptr}));
}

bool operator==(Formula const & a, Formula const & b) {
    if (a.m_node == b.m_node) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return a.bound() == b.bound() && a.body() == b.body();
    case Formula::Kind::Pred: return a.pred_name() == b.pred_name() && a.arg() == b.arg();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

// ----- builtin sugar -------------------------------------------------------

Term mk_unit() {
    static Term const u = Term::mk_const("()", void_type());
    return u;
}

Term mk_cond(Term const & p, Term const & t, Term const & u) {
    Type const & ty = t.type();
    Term cond = Term::mk_const("COND", Type::fun(tr_type(), Type::fun(ty, Type::fun(ty, ty))));
    return Term::mk_comb(Term::mk_comb(Term::mk_comb(cond, p), t), u);
}

Term mk_pair(Term const & t, Term const & u) {
    Type ty = Type::fun(t.type(), Type::fun(u.type(), Type::prod(t.type(), u.type())));
    return Term::mk_comb(Term::mk_comb(Term::mk_const("PAIR", ty), t), u);
}

Formula mk_equiv(Term const & t, Term const & u) {
    if (t.type() != u.type()) fail("mk_equiv");
    return Formula::mk_pred("equiv", mk_pair(t, u));
}
Formula mk_inequiv(Term const & t, Term const & u) {
    if (t.type() != u.type()) fail("mk_inequiv");
    return Formula::mk_pred("inequiv", mk_pair(t, u));
}
Formula mk_truth() { static Formula const f = Formula::mk_pred("TRUTH", mk_unit()); return f; }
Formula mk_falsity() { static Formula const f = Formula::mk_pred("FALSITY", mk_unit()); return f; }
Formula mk_neg(Formula const & a) { return Formula::mk_imp(a, mk_falsity()); }

namespace {
// Head constant and arguments of a curried application.
std::pair<Term, std::vector<Term>> strip_comb(Term t) {
    std::vector<Term> args;
    while (t.is_comb()) {
        args.push_back(t.arg());
        t = t.fun();
    }
    std::reverse(args.begin(), args.end());
    return {t, args};
}
bool is_app_of(Term const & t, char const * name, std::size_t n) {
    auto [head, args] = strip_comb(t);
    return head.is_const() && head.name() == name && args.size() == n;
}
} // namespace

bool is_cond(Term const & t) { return is_app_of(t, "COND", 3); }
bool is_pair(Term const & t) { return is_app_of(t, "PAIR", 2); }
bool is_infix_app(Term const & t) {
    return t.is_comb() && t.fun().is_comb() && t.fun().fun().is_const() && t.fun().fun().is_infix();
}
bool is_unit(Term const & t) { return t.is_const() && t.name() == "()"; }
bool is_equiv(Formula const & f) { return f.is_pred() && f.pred_name() == "equiv" && is_pair(f.arg()); }
bool is_inequiv(Formula const & f) { return f.is_pred() && f.pred_name() == "inequiv" && is_pair(f.arg()); }
bool is_truth(Formula const & f) { return f.is_pred() && f.pred_name() == "TRUTH" && is_unit(f.arg()); }
bool is_falsity(Formula const & f) { return f.is_pred() && f.pred_name() == "FALSITY" && is_unit(f.arg()); }
bool is_neg(Formula const & f) { return f.is_imp() && is_falsity(f.right()); }

// ----- destructors ---------------------------------------------------------

std::pair<Term, Term> dest_comb(Term const & t) {
    if (!t.is_comb()) fail("dest_comb");
    return {t.fun(), t.arg()};
}
std::pair<Term, Term> dest_abs(Term const & t) {
    if (!t.is_abs()) fail("dest_abs");
    return {t.bound(), t.body()};
}
std::pair<std::string, Type> dest_const(Term const & t) {
    if (!t.is_const()) fail("dest_const");
    return {t.name(), t.type()};
}
std::pair<std::string, Type> dest_var(Term const & t) {
    if (!t.is_var()) fail("dest_var");
    return {t.name(), t.type()};
}
Cond dest_cond(Term const & t) {
    if (!is_cond(t)) fail("dest_cond");
    return {t.fun().fun().arg(), t.fun().arg(), t.arg()};
}
std::pair<Term, Term> dest_pair(Term const & t) {
    if (!is_pair(t)) fail("dest_pair");
    return {t.fun().arg(), t.arg()};
}
std::pair<Term, Term> dest_equiv(Formula const & f) {
    if (!is_equiv(f)) fail("dest_equiv");
    return dest_pair(f.arg());
}
std::pair<Term, Term> dest_inequiv(Formula const & f) {
    if (!is_inequiv(f)) fail("dest_inequiv");
    return dest_pair(f.arg());
}
std::pair<Formula, Formula> dest_conj(Formula const & f) {
    if (!f.is_conj()) fail("dest_conj");
    return {f.left(), f.right()};
}
std::pair<Formula, Formula> dest_disj(Formula const & f) {
    if (!f.is_disj()) fail("dest_disj");
    return {f.left(), f.right()};
}
std::pair<Formula, Formula> dest_imp(Formula const & f) {
    if (!f.is_imp()) fail("dest_imp");
    return {f.left(), f.right()};
}
std::pair<Formula, Formula> dest_iff(Formula const & f) {
    if (!f.is_iff()) fail("dest_iff");
    return {f.left(), f.right()};
}
std::pair<Term, Formula> dest_forall(Formula const & f) {
    if (!f.is_forall()) fail("dest_forall");
    return {f.bound(), f.body()};
}
std::pair<Term, Formula> dest_exists(Formula const & f) {
    if (!f.is_exists()) fail("dest_exists");
    return {f.bound(), f.body()};
}
std::pair<std::string, Term> dest_pred(Formula const & f) {
    if (!f.is_pred()) fail("dest_pred");
    return {f.pred_name(), f.arg()};
}
Formula dest_neg(Formula const & f) {
    if (!is_neg(f)) fail("dest_neg");
    return f.left();
}

Formula strip_forall(Formula const & f) {
    Formula g = f;
    while (g.is_forall()) g = g.body();
    return g;
}

std::pair<std::vector<Formula>, Formula> strip_imp(Formula const & f) {
    std::vector<Formula> ants;
    Formula g = f;
    while (g.is_imp() && !is_neg(g)) {
        ants.push_back(g.left());
        g = g.right();
    }
    return {ants, g};
}

Type pred_arg_type(Formula const & f) { return f.arg().type(); }

// ----- free variables ------------------------------------------------------

namespace {

void add_unique(std::vector<Term> & out, Term const & v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

void collect_free(Term const & t, std::vector<Term> & bound, std::vector<Term> & out) {
    switch (t.kind()) {
    case Term::Kind::Var:
        if (std::find(bound.begin(), bound.end(), t) == bound.end()) add_unique(out, t);
        return;
    case Term::Kind::Const: return;
    case Term::Kind::Abs:
        bound.push_back(t.bound());
        collect_free(t.body(), bound, out);
        bound.pop_back();
        return;
    case Term::Kind::Comb:
        collect_free(t.fun(), bound, out);
        collect_free(t.arg(), bound, out);
        return;
    }
}

void collect_free(Formula const & f, std::vector<Term> & bound, std::vector<Term> & out) {
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
        bound.push_back(f.bound());
        collect_free(f.body(), bound, out);
        bound.pop_back();
        return;
    case Formula::Kind::Pred: collect_free(f.arg(), bound, out); return;
    default:
        collect_free(f.left(), bound, out);
        collect_free(f.right(), bound, out);
    }
}

bool occurs_free(Term const & v, Term const & t) {
    switch (t.kind()) {
    case Term::Kind::Var: return t == v;
    case Term::Kind::Const: return false;
    case Term::Kind::Abs: return t.bound() != v && occurs_free(v, t.body());
    case Term::Kind::Comb: return occurs_free(v, t.fun()) || occurs_free(v, t.arg());
    }
    return false;
}

bool occurs_free(Term const & v, Formula const & f) {
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return f.bound() != v && occurs_free(v, f.body());
    case Formula::Kind::Pred: return occurs_free(v, f.arg());
    default: return occurs_free(v, f.left()) || occurs_free(v, f.right());
    }
}

} // namespace

std::vector<Term> free_vars(Term const & t) {
    std::vector<Term> bound, out;
    collect_free(t, bound, out);
    return out;
}
std::vector<Term> free_vars(Formula const & f) {
    std::vector<Term> bound, out;
    collect_free(f, bound, out);
    return out;
}
bool free_in(Term const & var, Term const & t) { return occurs_free(var, t); }
bool free_in(Term const & var, Formula const & f) { return occurs_free(var, f); }

Term variant(Term const & var, std::vector<Term> const & avoid) {
    std::string name = var.name();
    auto taken = [&](std::string const & n) {
        return std::any_of(avoid.begin(), avoid.end(), [&](Term const & a) { return a.name() == n; });
    };
    while (taken(name)) name += '\'';
    return Term::mk_var(name, var.type());
}

// ----- substitution --------------------------------------------------------

namespace {

TermSubst without(TermSubst const & theta, Term const & v) {
    TermSubst out;
    for (auto const & p : theta)
        if (p.second != v) out.push_back(p);
    return out;
}

// Does binding `v` need renaming before pushing theta under it?
bool captures(Term const & v, TermSubst const & theta, auto const & body) {
    for (auto const & [rep, x] : theta)
        if (occurs_free(x, body) && occurs_free(v, rep)) return true;
    return false;
}

template <class Body>
std::vector<Term> rename_avoid(Body const & body, TermSubst const & theta) {
    std::vector<Term> avoid = free_vars(body);
    for (auto const & [rep, x] : theta)
        for (auto const & fv : free_vars(rep)) add_unique(avoid, fv);
    return avoid;
}

Term subst_rec(Term const & t, TermSubst const & theta) {
    if (theta.empty()) return t;
    switch (t.kind()) {
    case Term::Kind::Var:
        for (auto const & [rep, v] : theta)
            if (v == t) return rep;
        return t;
    case Term::Kind::Const: return t;
    case Term::Kind::Comb: {
        Term f = subst_rec(t.fun(), theta);
        Term a = subst_rec(t.arg(), theta);
        if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
        return Term::mk_comb(f, a);
    }
    case Term::Kind::Abs: {
        Term v = t.bound();
        Term body = t.body();
        TermSubst inner = without(theta, v);
        if (inner.empty()) return t;
        if (captures(v, inner, body)) {
            Term v2 = variant(v, rename_avoid(body, inner));
            inner.emplace_back(v2, v);
            return Term::mk_abs(v2, subst_rec(body, inner));
        }
        Term b = subst_rec(body, inner);
        if (b.same_node(body)) return t;
        return Term::mk_abs(v, b);
    }
    }
    return t;
}

Formula subst_rec(Formula const & f, TermSubst const & theta) {
    if (theta.empty()) return f;
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        Term v = f.bound();
        Formula body = f.body();
        TermSubst inner = without(theta, v);
        if (inner.empty()) return f;
        Term nv = v;
        if (captures(v, inner, body)) {
            nv = variant(v, rename_avoid(body, inner));
            inner.emplace_back(nv, v);
        }
        Formula b = subst_rec(body, inner);
        if (nv.same_node(v) && b.same_node(body)) return f;
        return f.is_forall() ? Formula::mk_forall(nv, b) : Formula::mk_exists(nv, b);
    }
    case Formula::Kind::Pred: {
        Term a = subst_rec(f.arg(), theta);
        if (a.same_node(f.arg())) return f;
        return Formula::mk_pred(f.pred_name(), a);
    }
    default: {
        Formula l = subst_rec(f.left(), theta);
        Formula r = subst_rec(f.right(), theta);
        if (l.same_node(f.left()) && r.same_node(f.right())) return f;
        switch (f.kind()) {
        case Formula::Kind::Conj: return Formula::mk_conj(l, r);
        case Formula::Kind::Disj: return Formula::mk_disj(l, r);
        case Formula::Kind::Imp: return Formula::mk_imp(l, r);
        default: return Formula::mk_iff(l, r);
        }
    }
    }
}

void check_subst(TermSubst const & theta) {
    for (auto const & [rep, v] : theta) {
        if (!v.is_var()) fail("subst");
        if (rep.type() != v.type()) fail("TypeMismatch");
    }
}

} // namespace

Term subst(Term const & t, TermSubst const & theta) {
    check_subst(theta);
    return subst_rec(t, theta);
}
Formula subst(Formula const & f, TermSubst const & theta) {
    check_subst(theta);
    return subst_rec(f, theta);
}

// ----- type instantiation --------------------------------------------------

namespace {

Term inst_var(Term const & v, TypeSubst const & theta) {
    Type ty = inst_type(v.type(), theta);
    if (ty == v.type()) return v;
    return Term::mk_var(v.name(), ty);
}

// A bound variable `v` must be renamed when some other free variable of the
// body becomes identical to it after instantiation.
template <class Body>
bool inst_clash(Term const & v, Body const & body, TypeSubst const & theta) {
    Term nv = inst_var(v, theta);
    for (auto const & w : free_vars(body))
        if (w != v && inst_var(w, theta) == nv) return true;
    return false;
}

template <class Body>
Term inst_fresh(Term const & v, Body const & body, TypeSubst const & theta) {
    std::vector<Term> avoid;
    for (auto const & w : free_vars(body)) avoid.push_back(inst_var(w, theta));
    return variant(v, avoid);
}

Term inst_rec(Term const & t, TypeSubst const & theta) {
    switch (t.kind()) {
    case Term::Kind::Var: return inst_var(t, theta);
    case Term::Kind::Const: {
        Type ty = inst_type(t.type(), theta);
        if (ty == t.type()) return t;
        return Term::mk_const(t.name(), ty, t.is_infix());
    }
    case Term::Kind::Comb: {
        Term f = inst_rec(t.fun(), theta);
        Term a = inst_rec(t.arg(), theta);
        if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
        return Term::mk_comb(f, a);
    }
    case Term::Kind::Abs: {
        Term v = t.bound();
        Term body = t.body();
        if (inst_clash(v, body, theta)) {
            Term v2 = inst_fresh(v, body, theta);
            body = subst_rec(body, {{v2, v}});
            v = v2;
        }
        return Term::mk_abs(inst_var(v, theta), inst_rec(body, theta));
    }
    }
    return t;
}

Formula inst_rec(Formula const & f, TypeSubst const & theta) {
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        Term v = f.bound();
        Formula body = f.body();
        if (inst_clash(v, body, theta)) {
            Term v2 = inst_fresh(v, body, theta);
            body = subst_rec(body, {{v2, v}});
            v = v2;
        }
        Term nv = inst_var(v, theta);
        Formula b = inst_rec(body, theta);
        return f.is_forall() ? Formula::mk_forall(nv, b) : Formula::mk_exists(nv, b);
    }
    case Formula::Kind::Pred: return Formula::mk_pred(f.pred_name(), inst_rec(f.arg(), theta));
    default: {
        Formula l = inst_rec(f.left(), theta);
        Formula r = inst_rec(f.right(), theta);
        switch (f.kind()) {
        case Formula::Kind::Conj: return Formula::mk_conj(l, r);
        case Formula::Kind::Disj: return Formula::mk_disj(l, r);
        case Formula::Kind::Imp: return Formula::mk_imp(l, r);
        default: return Formula::mk_iff(l, r);
        }
    }
    }
}

} // namespace

Term inst_type(Term const & t, TypeSubst const & theta) {
    if (theta.empty()) return t;
    return inst_rec(t, theta);
}
Formula inst_type(Formula const & f, TypeSubst const & theta) {
    if (theta.empty()) return f;
    return inst_rec(f, theta);
}

void type_vars(Term const & t, std::vector<Type> & out) {
    switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: type_vars(t.type(), out); return;
    case Term::Kind::Abs: type_vars(t.bound(), out); type_vars(t.body(), out); return;
    case Term::Kind::Comb: type_vars(t.fun(), out); type_vars(t.arg(), out); return;
    }
}

void type_vars(Formula const & f, std::vector<Type> & out) {
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: type_vars(f.bound(), out); type_vars(f.body(), out); return;
    case Formula::Kind::Pred: type_vars(f.arg(), out); return;
    default: type_vars(f.left(), out); type_vars(f.right(), out);
    }
}

// ----- alpha-equivalence ---------------------------------------------------

namespace {

using BoundPairs = std::vector<std::pair<Term, Term>>;

bool alpha_var(Term const & a, Term const & b, BoundPairs const & env) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool ha = it->first == a, hb = it->second == b;
        if (ha || hb) return ha && hb;
    }
    return a == b;
}

bool alpha_rec(Term const & a, Term const & b, BoundPairs & env) {
    if (env.empty() && a.same_node(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Term::Kind::Var: return alpha_var(a, b, env);
    case Term::Kind::Const: return a == b;
    case Term::Kind::Comb: return alpha_rec(a.fun(), b.fun(), env) && alpha_rec(a.arg(), b.arg(), env);
    case Term::Kind::Abs: {
        if (a.bound().type() != b.bound().type()) return false;
        env.emplace_back(a.bound(), b.bound());
        bool r = alpha_rec(a.body(), b.body(), env);
        env.pop_back();
        return r;
    }
    }
    return false;
}

bool alpha_rec(Formula const & a, Formula const & b, BoundPairs & env) {
    if (env.empty() && a.same_node(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        if (a.bound().type() != b.bound().type()) return false;
        env.emplace_back(a.bound(), b.bound());
        bool r = alpha_rec(a.body(), b.body(), env);
        env.pop_back();
        return r;
    }
    case Formula::Kind::Pred: return a.pred_name() == b.pred_name() && alpha_rec(a.arg(), b.arg(), env);
    default: return alpha_rec(a.left(), b.left(), env) && alpha_rec(a.right(), b.right(), env);
    }
}

} // namespace

bool alpha_eq(Term const & a, Term const & b) {
    BoundPairs env;
    return alpha_rec(a, b, env);
}
bool alpha_eq(Formula const & a, Formula const & b) {
    BoundPairs env;
    return alpha_rec(a, b, env);
}

} // namespace convkit
