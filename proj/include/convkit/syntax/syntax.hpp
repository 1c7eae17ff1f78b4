/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>
#include "convkit/failure.hpp"

namespace convkit {

// ---------------------------------------------------------------------------
// Types: type variables (`*`, `**`, `*a`), atoms (`tr`, `void`, ...),
// function space `a -> b` and product `a # b`.

class Type {
public:
    enum class Kind { Var, Atom, Fun, Prod };

    static Type var(std::string name);
    static Type atom(std::string name);
    static Type fun(Type dom, Type cod);
    static Type prod(Type left, Type right);

    Kind kind() const { return m_node->kind; }
    bool is_var() const { return kind() == Kind::Var; }
    bool is_atom() const { return kind() == Kind::Atom; }
    bool is_fun() const { return kind() == Kind::Fun; }
    bool is_prod() const { return kind() == Kind::Prod; }

    /// Name of a type variable or atom.
    std::string const & name() const { return m_node->name; }
    /// Domain / left component of a function or product type.
    Type left() const { return Type(m_node->left); }
    /// Codomain / right component of a function or product type.
    Type right() const { return Type(m_node->right); }

    friend bool operator==(Type const & a, Type const & b);
    friend bool operator!=(Type const & a, Type const & b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<Node const> left, right;
    };
    explicit Type(std::shared_ptr<Node const> n) : m_node(std::move(n)) {}
    std::shared_ptr<Node const> m_node;
};

Type tr_type();
Type void_type();

using TypeSubst = std::vector<std::pair<Type, Type>>; // (replacement, type variable)

Type inst_type(Type const & ty, TypeSubst const & theta);
/// Appends the type variables of `ty` not already in `out`.
void type_vars(Type const & ty, std::vector<Type> & out);

// ---------------------------------------------------------------------------
// Terms: constants, variables, abstractions and combinations. Every term is
// well-typed by construction; `mk_comb` rejects ill-typed applications.

class Term {
public:
    enum class Kind { Const, Var, Abs, Comb };

    static Term mk_var(std::string name, Type ty);
    /// `infix` is printing metadata only; it never affects equality.
    static Term mk_const(std::string name, Type ty, bool infix = false);
    static Term mk_abs(Term const & var, Term const & body);
    static Term mk_comb(Term const & fun, Term const & arg);

    Kind kind() const { return m_node->kind; }
    bool is_const() const { return kind() == Kind::Const; }
    bool is_var() const { return kind() == Kind::Var; }
    bool is_abs() const { return kind() == Kind::Abs; }
    bool is_comb() const { return kind() == Kind::Comb; }

    std::string const & name() const { return m_node->name; }
    bool is_infix() const { return m_node->infix; }
    Type const & type() const { return m_node->type; }

    Term bound() const { return Term(m_node->a); }
    Term body() const { return Term(m_node->b); }
    Term fun() const { return Term(m_node->a); }
    Term arg() const { return Term(m_node->b); }

    bool same_node(Term const & o) const { return m_node == o.m_node; }

    /// Syntactic equality (bound-variable names matter; see alpha_eq).
    friend bool operator==(Term const & a, Term const & b);
    friend bool operator!=(Term const & a, Term const & b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        std::string name;
        Type type;
        bool infix = false;
        std::shared_ptr<Node const> a, b;
    };
    explicit Term(std::shared_ptr<Node const> n) : m_node(std::move(n)) {}
    std::shared_ptr<Node const> m_node;
};

using TermSubst = std::vector<std::pair<Term, Term>>; // (replacement, variable)

// ---------------------------------------------------------------------------
// Formulas: seven classes. `t == u`, `t << u` and `~A` are sugar over Pred/Imp.

class Formula {
public:
    enum class Kind { Forall, Exists, Conj, Disj, Imp, Iff, Pred };

    static Formula mk_forall(Term const & var, Formula const & body);
    static Formula mk_exists(Term const & var, Formula const & body);
    static Formula mk_conj(Formula const & a, Formula const & b);
    static Formula mk_disj(Formula const & a, Formula const & b);
    static Formula mk_imp(Formula const & a, Formula const & b);
    static Formula mk_iff(Formula const & a, Formula const & b);
    static Formula mk_pred(std::string name, Term const & arg);

    Kind kind() const { return m_node->kind; }
    bool is_forall() const { return kind() == Kind::Forall; }
    bool is_exists() const { return kind() == Kind::Exists; }
    bool is_quant() const { return is_forall() || is_exists(); }
    bool is_conj() const { return kind() == Kind::Conj; }
    bool is_disj() const { return kind() == Kind::Disj; }
    bool is_imp() const { return kind() == Kind::Imp; }
    bool is_iff() const { return kind() == Kind::Iff; }
    bool is_pred() const { return kind() == Kind::Pred; }

    Term bound() const { return *m_node->var; }
    Formula body() const { return Formula(m_node->left); }
    Formula left() const { return Formula(m_node->left); }
    Formula right() const { return Formula(m_node->right); }
    std::string const & pred_name() const { return m_node->name; }
    Term arg() const { return *m_node->var; }

    bool same_node(Formula const & o) const { return m_node == o.m_node; }

    friend bool operator==(Formula const & a, Formula const & b);
    friend bool operator!=(Formula const & a, Formula const & b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::optional<Term> var; // bound variable or predicate argument
        std::shared_ptr<Node const> left, right;
    };
    explicit Formula(std::shared_ptr<Node const> n) : m_node(std::move(n)) {}
    std::shared_ptr<Node const> m_node;
};

// ---------------------------------------------------------------------------
// Builtin constants and sugar.

Term mk_unit();                                  // `()` : void
Term mk_cond(Term const & p, Term const & t, Term const & u);
Term mk_pair(Term const & t, Term const & u);
Formula mk_equiv(Term const & t, Term const & u);
Formula mk_inequiv(Term const & t, Term const & u);
Formula mk_truth();
Formula mk_falsity();
Formula mk_neg(Formula const & a);

bool is_cond(Term const & t);
bool is_pair(Term const & t);
/// `a OP b` where OP is a constant declared infix.
bool is_infix_app(Term const & t);
bool is_unit(Term const & t);
bool is_equiv(Formula const & f);
bool is_inequiv(Formula const & f);
bool is_truth(Formula const & f);
bool is_falsity(Formula const & f);
/// `A ==> FALSITY()`.
bool is_neg(Formula const & f);

// Destructors fail with their own name as token.
std::pair<Term, Term> dest_comb(Term const & t);
std::pair<Term, Term> dest_abs(Term const & t);
std::pair<std::string, Type> dest_const(Term const & t);
std::pair<std::string, Type> dest_var(Term const & t);
struct Cond { Term cond, then_, else_; };
Cond dest_cond(Term const & t);
std::pair<Term, Term> dest_pair(Term const & t);
std::pair<Term, Term> dest_equiv(Formula const & f);
std::pair<Term, Term> dest_inequiv(Formula const & f);
std::pair<Formula, Formula> dest_conj(Formula const & f);
std::pair<Formula, Formula> dest_disj(Formula const & f);
std::pair<Formula, Formula> dest_imp(Formula const & f);
std::pair<Formula, Formula> dest_iff(Formula const & f);
std::pair<Term, Formula> dest_forall(Formula const & f);
std::pair<Term, Formula> dest_exists(Formula const & f);
std::pair<std::string, Term> dest_pred(Formula const & f);
Formula dest_neg(Formula const & f);

/// Removes all outer universal quantifiers.
Formula strip_forall(Formula const & f);
/// Splits A1 ==> ... ==> An ==> B into ([A1..An], B). A negation `~A` is
/// treated as an atomic consequent, not as `A ==> FALSITY()`.
std::pair<std::vector<Formula>, Formula> strip_imp(Formula const & f);

// ---------------------------------------------------------------------------
// Variables, substitution, alpha-equivalence.

/// Free variables in order of first occurrence.
std::vector<Term> free_vars(Term const & t);
std::vector<Term> free_vars(Formula const & f);
bool free_in(Term const & var, Term const & t);
bool free_in(Term const & var, Formula const & f);

/// Appends primes to `var`'s name until it avoids every name in `avoid`.
Term variant(Term const & var, std::vector<Term> const & avoid);

/// Simultaneous capture-avoiding substitution; throws Failure("TypeMismatch")
/// when a replacement's type differs from its variable's.
Term subst(Term const & t, TermSubst const & theta);
Formula subst(Formula const & f, TermSubst const & theta);

/// Type instantiation; bound variables are renamed if instantiation would
/// make them capture a free variable.
Term inst_type(Term const & t, TypeSubst const & theta);
Formula inst_type(Formula const & f, TypeSubst const & theta);

bool alpha_eq(Term const & a, Term const & b);
bool alpha_eq(Formula const & a, Formula const & b);

void type_vars(Term const & t, std::vector<Type> & out);
void type_vars(Formula const & f, std::vector<Type> & out);

/// Type of the argument a predicate symbol is applied to.
Type pred_arg_type(Formula const & f);

} // namespace convkit
