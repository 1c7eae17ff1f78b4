/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <algorithm>
#include <atomic>
#include "access.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit {

char const * to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::RuleMismatch: return "RuleMismatch";
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::VarFreeInHyps: return "VarFreeInHyps";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::OpenHypotheses: return "OpenHypotheses";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    }
    return "?";
}

KernelError::KernelError(std::string rule, ErrorKind kind, std::string const & detail)
    : Failure(std::move(rule), std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)), m_kind(kind) {}

char const * to_string(Rule r) {
    static char const * const names[] = {
        "ASSUME", "REFL", "TRANS", "SYM", "MK_COMB", "ABS_RULE", "BETA_PRIM", "MP", "DISCH", "GEN", "SPEC",
        "CONJ", "CONJUNCT1", "CONJUNCT2", "DISJ1", "DISJ2", "DISJ_CASES", "EXISTS_INTRO", "EXISTS_ELIM",
        "IFF_INTRO", "IFF_MP", "IFF_MP_REV", "CONTR", "ALPHA", "PRED_CONG", "INST", "AXIOM"};
    return names[static_cast<int>(r)];
}

namespace {

std::atomic<bool> g_audit{false};
std::atomic<unsigned long> g_rules{0};

#ifdef CONVKIT_KERNEL_MUTATIONS
std::atomic<Mutation> g_mutation{Mutation::None};
bool mutant(Mutation m) { return g_mutation.load() == m; }
#else
enum class Mutation { AbsFreeness, TransMiddle, MpAntecedent, GenFreeness, InstHyps };
constexpr bool mutant(Mutation) { return false; }
#endif

bool contains(std::vector<Formula> const & fs, Formula const & f) {
    return std::any_of(fs.begin(), fs.end(), [&](Formula const & g) { return alpha_eq(f, g); });
}

std::vector<Formula> dedup(std::vector<Formula> const & fs) {
    std::vector<Formula> out;
    for (auto const & f : fs)
        if (!contains(out, f)) out.push_back(f);
    return out;
}

std::vector<Formula> merge(std::vector<Formula> a, std::vector<Formula> const & b) {
    for (auto const & f : b)
        if (!contains(a, f)) a.push_back(f);
    return a;
}

std::vector<Formula> remove(std::vector<Formula> const & fs, Formula const & f) {
    std::vector<Formula> out;
    for (auto const & g : fs)
        if (!alpha_eq(f, g)) out.push_back(g);
    return out;
}

bool free_in_any(Term const & v, std::vector<Formula> const & fs) {
    return std::any_of(fs.begin(), fs.end(), [&](Formula const & f) { return free_in(v, f); });
}

[[noreturn]] void error(Rule r, ErrorKind k, std::string const & detail = {}) {
    throw KernelError(to_string(r), k, detail);
}

std::pair<Term, Term> equation(Rule r, Theorem const & th) {
    if (!is_equiv(th.concl())) error(r, ErrorKind::RuleMismatch, "not an equivalence: " + print_form(th.concl()));
    return dest_equiv(th.concl());
}

// Builds the result; the proof node is only materialised when auditing.
template <class F>
Theorem make(std::vector<Formula> hyps, Formula concl, F && node) {
    ++g_rules;
    std::shared_ptr<ProofNode const> proof;
    if (g_audit.load(std::memory_order_relaxed)) proof = std::make_shared<ProofNode const>(node());
    return KernelAccess::make(std::move(hyps), std::move(concl), std::move(proof));
}

ProofNode node(Rule r, std::vector<Theorem> premises = {}, std::vector<Term> terms = {},
               std::vector<Formula> forms = {}) {
    return ProofNode{r, std::move(premises), std::move(terms), std::move(forms), {}, {}, {}};
}

} // namespace

void check_well_typed(char const * rule, Formula const & f) {
    switch (f.kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: check_well_typed(rule, f.body()); return;
    case Formula::Kind::Pred: break;
    default:
        check_well_typed(rule, f.left());
        check_well_typed(rule, f.right());
        return;
    }
    std::string const & p = f.pred_name();
    Type const ty = f.arg().type();
    if (p == "TRUTH" || p == "FALSITY") {
        if (ty != void_type()) throw KernelError(rule, ErrorKind::IllTyped, p + " applied at " + print_type(ty));
    } else if (p == "equiv" || p == "inequiv") {
        if (!ty.is_prod() || ty.left() != ty.right())
            throw KernelError(rule, ErrorKind::IllTyped, p + " applied at " + print_type(ty));
    }
}

Theorem::Theorem(std::vector<Formula> hyps, Formula concl, std::shared_ptr<ProofNode const> proof)
    : m_hyps(dedup(hyps)), m_concl(std::move(concl)), m_proof(std::move(proof)) {}

bool same_sequent(Theorem const & a, Theorem const & b) {
    if (!alpha_eq(a.concl(), b.concl()) || a.hyps().size() != b.hyps().size()) return false;
    for (auto const & h : a.hyps())
        if (!contains(b.hyps(), h)) return false;
    return true;
}

std::string print_theorem(Theorem const & th) {
    std::string s;
    if (!th.hyps().empty()) {
        s = "[";
        for (std::size_t i = 0; i < th.hyps().size(); ++i) s += (i ? "; " : "") + print_form(th.hyps()[i]);
        s += "] ";
    }
    return s + "|-" + print_form(th.concl());
}

// Axioms always carry their leaf node so replay can stop there.
Theorem make_axiom(std::string const & label, Formula const & a) {
    check_well_typed("new_axiom", a);
    ProofNode n = node(Rule::Axiom, {}, {}, {a});
    n.label = label;
    return KernelAccess::make({}, a, std::make_shared<ProofNode const>(std::move(n)));
}

Theorem ASSUME(Formula const & a) {
    check_well_typed("ASSUME", a);
    return make({a}, a, [&] { return node(Rule::Assume, {}, {}, {a}); });
}

Theorem REFL(Term const & t) {
    return make({}, mk_equiv(t, t), [&] { return node(Rule::Refl, {}, {t}); });
}

Theorem TRANS(Theorem const & ab, Theorem const & bc) {
    auto [a, b] = equation(Rule::Trans, ab);
    auto [b2, c] = equation(Rule::Trans, bc);
    if (!alpha_eq(b, b2)) {
        if (!mutant(Mutation::TransMiddle) || b.type() != b2.type())
            error(Rule::Trans, ErrorKind::RuleMismatch, print_term(b) + " vs " + print_term(b2));
    }
    return make(merge(ab.hyps(), bc.hyps()), mk_equiv(a, c), [&] { return node(Rule::Trans, {ab, bc}); });
}

Theorem SYM(Theorem const & ab) {
    auto [a, b] = equation(Rule::Sym, ab);
    return make(ab.hyps(), mk_equiv(b, a), [&] { return node(Rule::Sym, {ab}); });
}

Theorem MK_COMB(Theorem const & fg, Theorem const & tu) {
    auto [f, g] = equation(Rule::MkComb, fg);
    auto [t, u] = equation(Rule::MkComb, tu);
    if (!f.type().is_fun() || f.type().left() != t.type())
        error(Rule::MkComb, ErrorKind::IllTyped, print_term(f) + " applied to " + print_term(t));
    return make(merge(fg.hyps(), tu.hyps()), mk_equiv(Term::mk_comb(f, t), Term::mk_comb(g, u)),
                [&] { return node(Rule::MkComb, {fg, tu}); });
}

Theorem ABS_RULE(Term const & x, Theorem const & tu) {
    if (!x.is_var()) error(Rule::Abs, ErrorKind::RuleMismatch, "not a variable");
    auto [t, u] = equation(Rule::Abs, tu);
    if (free_in_any(x, tu.hyps()) && !mutant(Mutation::AbsFreeness))
        error(Rule::Abs, ErrorKind::VarFreeInHyps, x.name());
    return make(tu.hyps(), mk_equiv(Term::mk_abs(x, t), Term::mk_abs(x, u)),
                [&] { return node(Rule::Abs, {tu}, {x}); });
}

Theorem BETA_PRIM(Term const & t) {
    if (!t.is_comb() || !t.fun().is_abs()) fail("BETA_CONV");
    Term const & abs = t.fun();
    Term reduct = subst(abs.body(), {{t.arg(), abs.bound()}});
    return make({}, mk_equiv(t, reduct), [&] { return node(Rule::Beta, {}, {t}); });
}

Theorem MP(Theorem const & imp, Theorem const & ant) {
    if (!imp.concl().is_imp()) error(Rule::Mp, ErrorKind::RuleMismatch, "not an implication");
    if (!alpha_eq(imp.concl().left(), ant.concl()) && !mutant(Mutation::MpAntecedent))
        error(Rule::Mp, ErrorKind::RuleMismatch,
              print_form(imp.concl().left()) + " vs " + print_form(ant.concl()));
    return make(merge(imp.hyps(), ant.hyps()), imp.concl().right(), [&] { return node(Rule::Mp, {imp, ant}); });
}

Theorem DISCH(Formula const & a, Theorem const & th) {
    check_well_typed("DISCH", a);
    return make(remove(th.hyps(), a), Formula::mk_imp(a, th.concl()),
                [&] { return node(Rule::Disch, {th}, {}, {a}); });
}

Theorem GEN(Term const & x, Theorem const & th) {
    if (!x.is_var()) error(Rule::Gen, ErrorKind::RuleMismatch, "not a variable");
    if (free_in_any(x, th.hyps()) && !mutant(Mutation::GenFreeness))
        error(Rule::Gen, ErrorKind::VarFreeInHyps, x.name());
    return make(th.hyps(), Formula::mk_forall(x, th.concl()), [&] { return node(Rule::Gen, {th}, {x}); });
}

Theorem SPEC(Term const & t, Theorem const & th) {
    if (!th.concl().is_forall()) error(Rule::Spec, ErrorKind::RuleMismatch, "not universally quantified");
    Term const & x = th.concl().bound();
    if (x.type() != t.type())
        error(Rule::Spec, ErrorKind::TypeMismatch, print_type(t.type()) + " vs " + print_type(x.type()));
    return make(th.hyps(), subst(th.concl().body(), {{t, x}}), [&] { return node(Rule::Spec, {th}, {t}); });
}

Theorem CONJ(Theorem const & a, Theorem const & b) {
    return make(merge(a.hyps(), b.hyps()), Formula::mk_conj(a.concl(), b.concl()),
                [&] { return node(Rule::Conj, {a, b}); });
}

Theorem CONJUNCT1(Theorem const & ab) {
    if (!ab.concl().is_conj()) error(Rule::Conjunct1, ErrorKind::RuleMismatch, "not a conjunction");
    return make(ab.hyps(), ab.concl().left(), [&] { return node(Rule::Conjunct1, {ab}); });
}

Theorem CONJUNCT2(Theorem const & ab) {
    if (!ab.concl().is_conj()) error(Rule::Conjunct2, ErrorKind::RuleMismatch, "not a conjunction");
    return make(ab.hyps(), ab.concl().right(), [&] { return node(Rule::Conjunct2, {ab}); });
}

Theorem DISJ1(Theorem const & a, Formula const & b) {
    check_well_typed("DISJ1", b);
    return make(a.hyps(), Formula::mk_disj(a.concl(), b), [&] { return node(Rule::Disj1, {a}, {}, {b}); });
}

Theorem DISJ2(Formula const & a, Theorem const & b) {
    check_well_typed("DISJ2", a);
    return make(b.hyps(), Formula::mk_disj(a, b.concl()), [&] { return node(Rule::Disj2, {b}, {}, {a}); });
}

Theorem DISJ_CASES(Theorem const & ab, Theorem const & ac, Theorem const & bc) {
    if (!ab.concl().is_disj()) error(Rule::DisjCases, ErrorKind::RuleMismatch, "not a disjunction");
    if (!alpha_eq(ac.concl(), bc.concl()))
        error(Rule::DisjCases, ErrorKind::RuleMismatch, "cases conclude differently");
    auto hyps = merge(ab.hyps(), merge(remove(ac.hyps(), ab.concl().left()), remove(bc.hyps(), ab.concl().right())));
    return make(hyps, ac.concl(), [&] { return node(Rule::DisjCases, {ab, ac, bc}); });
}

Theorem EXISTS_INTRO(Formula const & ex, Term const & t, Theorem const & th) {
    if (!ex.is_exists()) error(Rule::ExistsIntro, ErrorKind::RuleMismatch, "not an existential");
    if (ex.bound().type() != t.type()) error(Rule::ExistsIntro, ErrorKind::TypeMismatch);
    if (!alpha_eq(subst(ex.body(), {{t, ex.bound()}}), th.concl()))
        error(Rule::ExistsIntro, ErrorKind::RuleMismatch, "witness does not fit");
    return make(th.hyps(), ex, [&] { return node(Rule::ExistsIntro, {th}, {t}, {ex}); });
}

Theorem EXISTS_ELIM(Theorem const & ex, Term const & y, Theorem const & th) {
    Formula const & e = ex.concl();
    if (!e.is_exists()) error(Rule::ExistsElim, ErrorKind::RuleMismatch, "not an existential");
    if (!y.is_var() || y.type() != e.bound().type()) error(Rule::ExistsElim, ErrorKind::TypeMismatch);
    Formula inst = subst(e.body(), {{y, e.bound()}});
    auto rest = remove(th.hyps(), inst);
    if (free_in(y, e) || free_in(y, th.concl()) || free_in_any(y, rest) || free_in_any(y, ex.hyps()))
        error(Rule::ExistsElim, ErrorKind::VarFreeInHyps, y.name());
    return make(merge(ex.hyps(), rest), th.concl(), [&] { return node(Rule::ExistsElim, {ex, th}, {y}); });
}

Theorem IFF_INTRO(Theorem const & ab, Theorem const & ba) {
    Formula const & f = ab.concl();
    Formula const & g = ba.concl();
    if (!f.is_imp() || !g.is_imp() || !alpha_eq(f.left(), g.right()) || !alpha_eq(f.right(), g.left()))
        error(Rule::IffIntro, ErrorKind::RuleMismatch, print_form(f) + " / " + print_form(g));
    return make(merge(ab.hyps(), ba.hyps()), Formula::mk_iff(f.left(), f.right()),
                [&] { return node(Rule::IffIntro, {ab, ba}); });
}

Theorem IFF_MP(Theorem const & iff, Theorem const & a) {
    Formula const & f = iff.concl();
    if (!f.is_iff() || !alpha_eq(f.left(), a.concl()))
        error(Rule::IffMp, ErrorKind::RuleMismatch, print_form(f) + " / " + print_form(a.concl()));
    return make(merge(iff.hyps(), a.hyps()), f.right(), [&] { return node(Rule::IffMp, {iff, a}); });
}

Theorem IFF_MP_REV(Theorem const & iff, Theorem const & b) {
    Formula const & f = iff.concl();
    if (!f.is_iff() || !alpha_eq(f.right(), b.concl()))
        error(Rule::IffMpRev, ErrorKind::RuleMismatch, print_form(f) + " / " + print_form(b.concl()));
    return make(merge(iff.hyps(), b.hyps()), f.left(), [&] { return node(Rule::IffMpRev, {iff, b}); });
}

Theorem CONTR(Formula const & b, Theorem const & falsity) {
    if (!is_falsity(falsity.concl())) error(Rule::Contr, ErrorKind::RuleMismatch, "not FALSITY()");
    check_well_typed("CONTR", b);
    return make(falsity.hyps(), b, [&] { return node(Rule::Contr, {falsity}, {}, {b}); });
}

Theorem ALPHA(Theorem const & th, Formula const & b) {
    if (!alpha_eq(th.concl(), b)) error(Rule::Alpha, ErrorKind::RuleMismatch, "not alpha-equivalent");
    return make(th.hyps(), b, [&] { return node(Rule::Alpha, {th}, {}, {b}); });
}

Theorem PRED_CONG(std::string const & pred, Theorem const & tu) {
    auto [t, u] = equation(Rule::PredCong, tu);
    if (pred.empty()) error(Rule::PredCong, ErrorKind::UnknownPredicate);
    Formula l = Formula::mk_pred(pred, t);
    check_well_typed("PRED_CONG", l);
    return make(tu.hyps(), Formula::mk_iff(l, Formula::mk_pred(pred, u)), [&] {
        ProofNode n = node(Rule::PredCong, {tu});
        n.label = pred;
        return n;
    });
}

Theorem INST(TermSubst const & terms, TypeSubst const & types, Theorem const & th) {
    if (!mutant(Mutation::InstHyps)) {
        std::vector<Type> hyp_tyvars;
        for (auto const & h : th.hyps()) type_vars(h, hyp_tyvars);
        for (auto const & [ty, tv] : types) {
            if (ty == tv) continue;
            if (std::find(hyp_tyvars.begin(), hyp_tyvars.end(), tv) != hyp_tyvars.end())
                error(Rule::Inst, ErrorKind::VarFreeInHyps, print_type(tv));
        }
        for (auto const & [t, v] : terms) {
            if (t == v) continue;
            if (free_in_any(v, th.hyps())) error(Rule::Inst, ErrorKind::VarFreeInHyps, v.name());
        }
    }
    TermSubst theta;
    for (auto const & [t, v] : terms) {
        if (!v.is_var()) error(Rule::Inst, ErrorKind::RuleMismatch, "not a variable");
        Term v2 = inst_type(v, types);
        if (t.type() != v2.type())
            error(Rule::Inst, ErrorKind::TypeMismatch, print_term(t) + " for " + v.name());
        theta.emplace_back(t, v2);
    }
    Formula c = subst(inst_type(th.concl(), types), theta);
    return make(th.hyps(), c, [&] {
        ProofNode n = node(Rule::Inst, {th});
        n.term_subst = terms;
        n.type_subst = types;
        return n;
    });
}

void set_audit(bool on) { g_audit = on; }
bool audit_enabled() { return g_audit; }
unsigned long rule_count() { return g_rules; }

#ifdef CONVKIT_KERNEL_MUTATIONS
void set_mutation(Mutation m) { g_mutation = m; }
#endif

} // namespace convkit
