/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/matching/match.hpp"
#include <algorithm>

namespace convkit {

namespace {

// Each step reports failure by returning false; the public entry points
// turn that into a single Failure (unwinding through the recursion is
// what makes failed rewrites expensive).
class Matcher {
public:
    bool type(Type const & p, Type const & o) {
        switch (p.kind()) {
        case Type::Kind::Var:
            for (auto const & [ty, tv] : m_types)
                if (tv == p) return ty == o;
            m_types.emplace_back(o, p);
            return true;
        case Type::Kind::Atom: return o.is_atom() && o.name() == p.name();
        case Type::Kind::Fun:
        case Type::Kind::Prod: return o.kind() == p.kind() && type(p.left(), o.left()) && type(p.right(), o.right());
        }
        return false;
    }

    bool term(Term const & p, Term const & o) {
        switch (p.kind()) {
        case Term::Kind::Var: return var(p, o);
        case Term::Kind::Const: return o.is_const() && o.name() == p.name() && type(p.type(), o.type());
        case Term::Kind::Abs: {
            if (!o.is_abs() || !type(p.bound().type(), o.bound().type())) return false;
            m_env.emplace_back(p.bound(), o.bound());
            bool ok = term(p.body(), o.body());
            m_env.pop_back();
            return ok;
        }
        case Term::Kind::Comb: return o.is_comb() && term(p.fun(), o.fun()) && term(p.arg(), o.arg());
        }
        return false;
    }

    bool form(Formula const & p, Formula const & o) {
        if (p.kind() != o.kind()) return false;
        switch (p.kind()) {
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (!type(p.bound().type(), o.bound().type())) return false;
            m_env.emplace_back(p.bound(), o.bound());
            bool ok = form(p.body(), o.body());
            m_env.pop_back();
            return ok;
        }
        case Formula::Kind::Pred: return p.pred_name() == o.pred_name() && term(p.arg(), o.arg());
        default: return form(p.left(), o.left()) && form(p.right(), o.right());
        }
    }

    MatchResult result() const {
        MatchResult r;
        for (auto it = m_types.rbegin(); it != m_types.rend(); ++it)
            if (it->first != it->second) r.types.push_back(*it);
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it)
            if (inst_type(it->second, m_types) != it->first) r.terms.push_back(*it);
        return r;
    }

private:
    bool var(Term const & p, Term const & o) {
        for (auto it = m_env.rbegin(); it != m_env.rend(); ++it) {
            if (it->first == p) return o == it->second;
            if (o == it->second) return false; // object bound var met a different pattern var
        }
        for (auto const & [pv, ov] : m_env)
            if (free_in(ov, o)) return false;
        if (!type(p.type(), o.type())) return false;
        for (auto const & [t, v] : m_terms)
            if (v == p) return alpha_eq(t, o);
        m_terms.emplace_back(o, p);
        return true;
    }

    std::vector<std::pair<Term, Term>> m_env; // (pattern bound, object bound)
    TermSubst m_terms;
    TypeSubst m_types;
};

// Variables of `th`'s hypotheses.
std::vector<Term> hyp_vars(Theorem const & th) {
    std::vector<Term> out;
    for (auto const & h : th.hyps())
        for (auto const & v : free_vars(h)) out.push_back(v);
    return out;
}

} // namespace

MatchResult term_match(Term const & pattern, Term const & object) {
    Matcher m;
    if (!m.term(pattern, object)) fail("term_match");
    return m.result();
}

MatchResult form_match(Formula const & pattern, Formula const & object) {
    Matcher m;
    if (!m.form(pattern, object)) fail("form_match");
    return m.result();
}

Term instantiate(Term const & pattern, MatchResult const & m) {
    TermSubst theta;
    for (auto const & [t, v] : m.terms) theta.emplace_back(t, inst_type(v, m.types));
    return subst(inst_type(pattern, m.types), theta);
}

Formula instantiate(Formula const & pattern, MatchResult const & m) {
    TermSubst theta;
    for (auto const & [t, v] : m.terms) theta.emplace_back(t, inst_type(v, m.types));
    return subst(inst_type(pattern, m.types), theta);
}

Theorem SPEC_ALL(Theorem const & th) {
    Theorem out = th;
    std::vector<Term> avoid = hyp_vars(th);
    while (out.concl().is_forall()) {
        Term v = out.concl().bound();
        if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) v = variant(v, avoid);
        out = SPEC(v, out);
    }
    return out;
}

std::function<Theorem(Term const &)> PART_TMATCH(TermPart const & part, Theorem const & th) {
    Theorem stripped = SPEC_ALL(th);
    Term pattern = part(stripped.concl());
    return [stripped, pattern](Term const & t) {
        MatchResult m = term_match(pattern, t);
        return INST(m.terms, m.types, stripped);
    };
}

std::function<Theorem(Formula const &)> PART_FMATCH(FormPart const & part, Theorem const & th) {
    Theorem stripped = SPEC_ALL(th);
    Formula pattern = part(stripped.concl());
    return [stripped, pattern](Formula const & f) {
        MatchResult m = form_match(pattern, f);
        return INST(m.terms, m.types, stripped);
    };
}

std::function<Theorem(Theorem const &)> MATCH_MP(Theorem const & impth) {
    auto match = PART_FMATCH([](Formula const & f) { return dest_imp(f).first; }, impth);
    return [match](Theorem const & th) { return MP(match(th.concl()), th); };
}

} // namespace convkit
