/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <functional>
#include <mutex>
#include "access.hpp"
#include "convkit/kernel/theory.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit {

namespace {

bool type_instance(Type const & pat, Type const & ty, std::map<std::string, Type> & env) {
    switch (pat.kind()) {
    case Type::Kind::Var: {
        auto [it, fresh] = env.emplace(pat.name(), ty);
        return fresh || it->second == ty;
    }
    case Type::Kind::Atom: return ty.is_atom() && ty.name() == pat.name();
    case Type::Kind::Fun:
    case Type::Kind::Prod:
        return ty.kind() == pat.kind() && type_instance(pat.left(), ty.left(), env) &&
               type_instance(pat.right(), ty.right(), env);
    }
    return false;
}

// The builtin axioms, in the order they are listed.
char const * const root_axioms[][2] = {
    {"MINIMAL", "!x. UU << x"},
    {"EQ_REFL", "!x. x == x"},
    {"COND_UU", "(UU => x | y) == UU"},
    {"COND_TT", "(TT => x | y) == x"},
    {"COND_FF", "(FF => x | y) == y"},
    {"MIN_COMB", "UU x == UU"},
    {"MIN_ABS", "\\x.UU == UU"},
    {"MK_PAIR", "(FST x, SND x) == x"},
    {"FST_PAIR", "FST(x,y) == x"},
    {"SND_PAIR", "SND(x,y) == y"},
    {"TRUTH_INTRO", "TRUTH ()"},
    {"FORALL_TRUTH", "(!x. TRUTH ()) <=> TRUTH ()"},
    {"FORALL_FALSITY", "(!x. FALSITY ()) <=> FALSITY ()"},
    {"EXISTS_TRUTH", "(?x. TRUTH ()) <=> TRUTH ()"},
    {"EXISTS_FALSITY", "(?x. FALSITY ()) <=> FALSITY ()"},
    {"DIST_TT_UU", "TT == UU <=> FALSITY ()"},
    {"DIST_UU_TT", "UU == TT <=> FALSITY ()"},
    {"DIST_FF_UU", "FF == UU <=> FALSITY ()"},
    {"DIST_UU_FF", "UU == FF <=> FALSITY ()"},
    {"DIST_TT_FF", "TT == FF <=> FALSITY ()"},
    {"DIST_FF_TT", "FF == TT <=> FALSITY ()"},
};

template <class V>
V const * lookup(std::vector<std::pair<std::string, V>> const & xs, std::string const & key) {
    for (auto const & [k, v] : xs)
        if (k == key) return &v;
    return nullptr;
}

} // namespace

bool type_instance(Type const & pattern, Type const & ty) {
    std::map<std::string, Type> env;
    return type_instance(pattern, ty, env);
}

Theory::Theory(std::string name, std::vector<Ptr> parents) : m_name(std::move(name)), m_parents(std::move(parents)) {}

Theory::Ptr Theory::pplambda() {
    static Ptr const root = [] {
        Ptr t(new Theory("PPLAMBDA"));
        Signature const & b = builtin_signature();
        for (char const * c : {"UU", "TT", "FF", "FST", "SND", "COND", "PAIR", "()"})
            t->m_constants.emplace_back(c, *b.constant(c));
        for (char const * p : {"TRUTH", "FALSITY", "equiv", "inequiv"})
            t->m_predicates.emplace_back(p, *b.predicate(p));
        for (auto const & [label, text] : root_axioms)
            t->m_axioms.emplace_back(label, make_axiom(label, parse_form(text, b)));
        return t;
    }();
    return root;
}

bool Theory::declared(std::string const & name) const {
    return constant(name).has_value() || predicate(name).has_value();
}

std::optional<ConstInfo> Theory::constant(std::string const & name) const {
    {
        std::shared_lock lock(m_mutex);
        if (auto c = lookup(m_constants, name)) return *c;
    }
    for (auto const & p : m_parents)
        if (auto c = p->constant(name)) return c;
    return std::nullopt;
}

std::optional<Type> Theory::predicate(std::string const & name) const {
    {
        std::shared_lock lock(m_mutex);
        if (auto c = lookup(m_predicates, name)) return *c;
    }
    for (auto const & p : m_parents)
        if (auto c = p->predicate(name)) return c;
    return std::nullopt;
}

void Theory::new_constant(std::string const & name, Type const & ty, bool infix) {
    if (declared(name)) throw KernelError("new_constant", ErrorKind::DuplicateLabel, name);
    std::unique_lock lock(m_mutex);
    m_constants.emplace_back(name, ConstInfo{ty, infix});
}

void Theory::new_predicate(std::string const & name, Type const & ty) {
    if (declared(name)) throw KernelError("new_predicate", ErrorKind::DuplicateLabel, name);
    std::unique_lock lock(m_mutex);
    m_predicates.emplace_back(name, ty);
}

// Every constant and predicate must be declared, at an instance of its
// declared type.
void Theory::check_signature(Formula const & a) const {
    std::function<void(Term const &)> term = [&](Term const & t) {
        switch (t.kind()) {
        case Term::Kind::Var: return;
        case Term::Kind::Const: {
            auto c = constant(t.name());
            if (!c) throw KernelError("new_axiom", ErrorKind::IllTyped, "undeclared constant " + t.name());
            if (!type_instance(c->type, t.type()))
                throw KernelError("new_axiom", ErrorKind::IllTyped, t.name() + " at " + print_type(t.type()));
            return;
        }
        case Term::Kind::Abs: term(t.body()); return;
        case Term::Kind::Comb: term(t.fun()); term(t.arg()); return;
        }
    };
    std::function<void(Formula const &)> form = [&](Formula const & f) {
        switch (f.kind()) {
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: form(f.body()); return;
        case Formula::Kind::Pred: {
            auto p = predicate(f.pred_name());
            if (!p) throw KernelError("new_axiom", ErrorKind::UnknownPredicate, f.pred_name());
            if (!type_instance(*p, f.arg().type()))
                throw KernelError("new_axiom", ErrorKind::IllTyped, f.pred_name() + " at " + print_type(f.arg().type()));
            term(f.arg());
            return;
        }
        default: form(f.left()); form(f.right()); return;
        }
    };
    form(a);
}

Theorem Theory::new_axiom(std::string const & label, Formula const & a) {
    if (find_axiom(label) || find_theorem(label)) throw KernelError("new_axiom", ErrorKind::DuplicateLabel, label);
    check_signature(a);
    Theorem th = make_axiom(label, a);
    std::unique_lock lock(m_mutex);
    m_axioms.emplace_back(label, th);
    return th;
}

void Theory::save_theorem(std::string const & label, Theorem const & th) {
    if (!th.hyps().empty()) throw KernelError("save_theorem", ErrorKind::OpenHypotheses, label);
    if (find_axiom(label) || find_theorem(label)) throw KernelError("save_theorem", ErrorKind::DuplicateLabel, label);
    std::unique_lock lock(m_mutex);
    m_theorems.emplace_back(label, th);
}

Theorem Theory::assert_theorem(std::string const & label, Formula const & a) {
    if (find_axiom(label) || find_theorem(label)) throw KernelError("assert_theorem", ErrorKind::DuplicateLabel, label);
    check_signature(a);
    Theorem th = make_axiom(label, a);
    std::unique_lock lock(m_mutex);
    m_theorems.emplace_back(label, th);
    return th;
}

std::optional<Theorem> Theory::find_axiom(std::string const & label) const {
    {
        std::shared_lock lock(m_mutex);
        if (auto th = lookup(m_axioms, label)) return *th;
    }
    for (auto const & p : m_parents)
        if (auto th = p->find_axiom(label)) return th;
    return std::nullopt;
}

std::optional<Theorem> Theory::find_theorem(std::string const & label) const {
    {
        std::shared_lock lock(m_mutex);
        if (auto th = lookup(m_theorems, label)) return *th;
    }
    for (auto const & p : m_parents)
        if (auto th = p->find_theorem(label)) return th;
    return std::nullopt;
}

Theorem Theory::axiom(std::string const & label) const {
    if (auto th = find_axiom(label)) return *th;
    throw KernelError("axiom", ErrorKind::UnknownLabel, label);
}

Theorem Theory::theorem(std::string const & label) const {
    if (auto th = find_theorem(label)) return *th;
    if (auto th = find_axiom(label)) return *th;
    throw KernelError("theorem", ErrorKind::UnknownLabel, label);
}

Theory::Ptr Theory::find_theory(std::string const & name) const {
    for (auto const & p : m_parents) {
        if (p->name() == name) return p;
        if (auto q = p->find_theory(name)) return q;
    }
    return nullptr;
}

std::vector<std::pair<std::string, ConstInfo>> Theory::local_constants() const {
    std::shared_lock lock(m_mutex);
    return m_constants;
}
std::vector<std::pair<std::string, Type>> Theory::local_predicates() const {
    std::shared_lock lock(m_mutex);
    return m_predicates;
}
std::vector<std::pair<std::string, Theorem>> Theory::local_axioms() const {
    std::shared_lock lock(m_mutex);
    return m_axioms;
}
std::vector<std::pair<std::string, Theorem>> Theory::local_theorems() const {
    std::shared_lock lock(m_mutex);
    return m_theorems;
}

} // namespace convkit
