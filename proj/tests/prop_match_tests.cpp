// Randomised properties of term and formula matching.
#include "doctest.h"
#include "convkit/matching/match.hpp"
#include "convkit/syntax/print.hpp"
#include "gen.hpp"

using namespace convkit;
using convkit::test::Gen;

namespace {

constexpr int N = 1000;

bool mentions(Term const & t, std::vector<Term> const & bound) {
    for (auto const & v : free_vars(t))
        if (std::find(bound.begin(), bound.end(), v) != bound.end()) return true;
    return false;
}

// Replaces random closed-off subterms by fresh pattern variables.
struct Abstracter {
    Gen & g;
    int n = 0;

    Term term(Term const & t, std::vector<Term> bound) {
        if (!mentions(t, bound) && g.chance(15)) return Term::mk_var("M" + std::to_string(++n), t.type());
        switch (t.kind()) {
        case Term::Kind::Comb: return Term::mk_comb(term(t.fun(), bound), term(t.arg(), bound));
        case Term::Kind::Abs: bound.push_back(t.bound()); return Term::mk_abs(t.bound(), term(t.body(), bound));
        default: return t;
        }
    }

    Formula form(Formula const & f, std::vector<Term> bound) {
        switch (f.kind()) {
        case Formula::Kind::Pred: return Formula::mk_pred(f.pred_name(), term(f.arg(), bound));
        case Formula::Kind::Conj: return Formula::mk_conj(form(f.left(), bound), form(f.right(), bound));
        case Formula::Kind::Disj: return Formula::mk_disj(form(f.left(), bound), form(f.right(), bound));
        case Formula::Kind::Imp: return Formula::mk_imp(form(f.left(), bound), form(f.right(), bound));
        case Formula::Kind::Iff: return Formula::mk_iff(form(f.left(), bound), form(f.right(), bound));
        default: break;
        }
        bound.push_back(f.bound());
        Formula body = form(f.body(), bound);
        return f.is_forall() ? Formula::mk_forall(f.bound(), body) : Formula::mk_exists(f.bound(), body);
    }
};

// Every free occurrence of `x` becomes the same pattern variable.
template <class T>
T generalise_var(T const & t, Term const & x) {
    return subst(t, TermSubst{{Term::mk_var("X", x.type()), x}});
}

void check_bindings(MatchResult const & m, std::vector<Term> const & pattern_vars) {
    for (auto const & [obj, v] : m.terms) {
        CHECK(v.is_var());
        bool found = false;
        for (auto const & p : pattern_vars) found = found || p.name() == v.name();
        CHECK(found);
    }
}

// A random instance: terms of the right type for some free variables.
template <class T>
T random_instance(Gen & g, T const & p) {
    TermSubst theta;
    for (auto const & v : free_vars(p))
        if (g.chance(60)) theta.emplace_back(g.term(v.type(), 2), v);
    return subst(p, theta);
}

} // namespace

TEST_CASE("matching recovers the subterms abstracted out of a term") {
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(i));
        Term t = g.term(g.type(), 4);
        Term p = Abstracter{g}.term(t, {});
        if (g.chance(50)) p = generalise_var(p, g.var(g.type()));
        INFO(print_term(t), " / ", print_term(p));
        MatchResult m = term_match(p, t);
        CHECK(alpha_eq(instantiate(p, m), t));
        check_bindings(m, free_vars(p));
    }
}

TEST_CASE("matching recovers the subterms abstracted out of a formula") {
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(9000 + i));
        Formula f = g.form(3);
        Gen h(static_cast<std::uint32_t>(i));
        Formula p = Abstracter{h}.form(f, {});
        if (g.chance(50)) p = generalise_var(p, g.var(g.type()));
        INFO(print_form(f), " / ", print_form(p));
        MatchResult m = form_match(p, f);
        CHECK(alpha_eq(instantiate(p, m), f));
        check_bindings(m, free_vars(p));
    }
}

TEST_CASE("a successful match always describes the object") {
    int matched = 0;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(17000 + i));
        Term p = g.term(g.type(), 2);
        Term o = g.chance(50) ? random_instance(g, p) : g.term(g.chance(50) ? p.type() : g.type(), 3);
        INFO(print_term(p), " / ", print_term(o));
        try {
            MatchResult m = term_match(p, o);
            ++matched;
            CHECK(alpha_eq(instantiate(p, m), o));
            check_bindings(m, free_vars(p));
        } catch (Failure const & e) {
            CHECK(e.token() == "term_match");
        }
    }
    CHECK(matched > N / 4);
}

TEST_CASE("a successful formula match always describes the object") {
    int matched = 0;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(25000 + i));
        Formula p = g.form(1);
        Formula o = g.chance(50) ? random_instance(g, p) : g.form(2);
        try {
            MatchResult m = form_match(p, o);
            ++matched;
            CHECK(alpha_eq(instantiate(p, m), o));
        } catch (Failure const & e) {
            CHECK(e.token() == "form_match");
        }
    }
    CHECK(matched > N / 4);
}

TEST_CASE("type variables in patterns are instantiated consistently") {
    int polymorphic = 0;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(33000 + i));
        Term p = g.term(g.type(), 4);
        Type ty = g.chance(50) ? Gen::pair() : Gen::fn();
        Term o = inst_type(p, TypeSubst{{ty, Gen::poly()}});
        std::vector<Type> tvs;
        type_vars(p, tvs);
        polymorphic += !tvs.empty();
        INFO(print_term(p));
        MatchResult m = term_match(p, o);
        CHECK(alpha_eq(instantiate(p, m), o));
        for (auto const & [t, v] : m.types) CHECK((v == Gen::poly() && t == ty));
    }
    CHECK(polymorphic > 100);
}
