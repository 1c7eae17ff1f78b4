/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <algorithm>
#include "convkit/kernel/derived.hpp"
#include "convkit/kernel/theory.hpp"
#include "convkit/matching/match.hpp"
#include "convkit/syntax/print.hpp"
#include "convkit/tactic/tactic.hpp"

namespace convkit {

namespace {

std::vector<Term> hyp_frees(Theorem const & th) {
    std::vector<Term> out;
    for (auto const & h : th.hyps())
        for (auto const & v : free_vars(h)) out.push_back(v);
    return out;
}

void canon(Theorem const & th, std::vector<Theorem> & out) {
    Formula c = th.concl();
    if (c.is_conj()) {
        canon(CONJUNCT1(th), out);
        canon(CONJUNCT2(th), out);
        return;
    }
    if (c.is_forall()) {
        Term y = variant(c.bound(), hyp_frees(th));
        canon(SPEC(y, th), out);
        return;
    }
    if (!c.is_imp() || is_neg(c)) {
        out.push_back(th);
        return;
    }
    Formula a = c.left();
    if (a.is_exists()) {
        std::vector<Term> avoid = hyp_frees(th);
        for (auto const & v : free_vars(c)) avoid.push_back(v);
        Term y = variant(a.bound(), avoid);
        Formula ay = subst(a.body(), {{y, a.bound()}});
        canon(DISCH(ay, MP(th, EXISTS_INTRO(a, y, ASSUME(ay)))), out);
        return;
    }
    if (a.is_conj()) {
        Formula a1 = a.left(), a2 = a.right();
        canon(DISCH(a1, DISCH(a2, MP(th, CONJ(ASSUME(a1), ASSUME(a2))))), out);
        return;
    }
    if (a.is_disj()) {
        Formula a1 = a.left(), a2 = a.right();
        canon(DISCH(a1, MP(th, DISJ1(ASSUME(a1), a2))), out);
        canon(DISCH(a2, MP(th, DISJ2(a1, ASSUME(a2)))), out);
        return;
    }
    std::vector<Theorem> sub;
    canon(MP(th, ASSUME(a)), sub);
    for (auto const & s : sub) out.push_back(DISCH(a, s));
}

// Proves `a` outright with `tac`.
Theorem solve(Tactic const & tac, Formula const & a, char const * token) {
    TacticResult r = tac(Goal{{}, a});
    if (!r.subgoals.empty()) fail(token);
    return r.justify({});
}

// Instantiated implication: discharges its antecedents with `tac`.
Theorem discharge_all(Theorem th, std::size_t n, Tactic const & tac, char const * token) {
    for (std::size_t k = 0; k < n; ++k) th = MP(th, solve(tac, th.concl().left(), token));
    return th;
}

struct ImpRule {
    Theorem th; // SPEC_ALL'd
    std::vector<Formula> ants;
    Formula consequent;
};

ImpRule make_rule(Theorem const & th) {
    Theorem s = SPEC_ALL(th);
    auto [ants, c] = strip_imp(s.concl());
    return ImpRule{s, ants, c};
}

class Search {
public:
    Search(std::vector<ImpRule> const & rules, std::vector<Formula> const & asms, int limit)
        : m_rules(rules), m_asms(asms), m_limit(limit) {}

    std::optional<Theorem> run(Formula const & goal, int depth, SearchNode & node) {
        node = SearchNode{goal, "", {}};
        if (depth > m_limit) return std::nullopt;
        for (auto const & a : m_asms)
            if (alpha_eq(a, goal)) {
                node.by = "assumption";
                return ALPHA(ASSUME(a), goal);
            }
        for (auto const & r : m_rules) {
            std::optional<Theorem> cur;
            try {
                MatchResult m = form_match(r.consequent, goal);
                cur = INST(m.terms, m.types, r.th);
            } catch (Failure const &) {
                continue;
            }
            std::vector<SearchNode> kids;
            bool ok = true;
            for (std::size_t k = 0; k < r.ants.size(); ++k) {
                kids.push_back(SearchNode{goal, "", {}});
                auto p = run(cur->concl().left(), depth + 1, kids.back());
                if (!p) {
                    ok = false;
                    break;
                }
                try {
                    cur = MP(*cur, *p);
                } catch (Failure const &) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            node.by = print_form(r.th.concl());
            node.children = std::move(kids);
            return ALPHA(*cur, goal);
        }
        return std::nullopt;
    }

private:
    std::vector<ImpRule> const & m_rules;
    std::vector<Formula> const & m_asms;
    int m_limit;
};

} // namespace

std::vector<Theorem> IMP_CANON(Theorem const & th) {
    std::vector<Theorem> out;
    canon(th, out);
    return out;
}

Theorem FCONV_CANON(Theorem const & th) {
    ImpRule r = make_rule(th);
    if (r.consequent.is_iff()) return r.th;
    Theorem body = r.th;
    for (auto const & a : r.ants) body = MP(body, ASSUME(a));
    std::optional<Theorem> out;
    Formula c = r.consequent;
    if (is_neg(c) && dest_neg(c).is_pred()) {
        Formula p = dest_neg(c), f = mk_falsity();
        out = IFF_BY(p, MP(body, ASSUME(p)), f, CONTR(p, ASSUME(f)));
    } else if (c.is_pred()) {
        out = IFF_BY(c, TRUTH_THM(), mk_truth(), body);
    } else {
        fail("FCONV_CANON");
    }
    for (auto it = r.ants.rbegin(); it != r.ants.rend(); ++it) out = DISCH(*it, *out);
    return *out;
}

Conv IMP_REW_CONV(Tactic tac, Theorem const & th) {
    ImpRule r = make_rule(th);
    if (!is_equiv(r.consequent)) fail("IMP_REW_CONV");
    Term pattern = dest_equiv(r.consequent).first;
    return [tac = std::move(tac), r, pattern](Term const & t) {
        MatchResult m = term_match(pattern, t);
        Theorem out = discharge_all(INST(m.terms, m.types, r.th), r.ants.size(), tac, "IMP_REW_CONV");
        charge_step();
        return fix_lhs(t, out);
    };
}

FConv IMP_REW_FCONV(Tactic tac, Theorem const & th) {
    ImpRule r = make_rule(th);
    if (!r.consequent.is_iff()) fail("IMP_REW_FCONV");
    Formula pattern = r.consequent.left();
    return [tac = std::move(tac), r, pattern](Formula const & a) {
        MatchResult m = form_match(pattern, a);
        Theorem out = discharge_all(INST(m.terms, m.types, r.th), r.ants.size(), tac, "IMP_REW_FCONV");
        charge_step();
        return fix_lhs(a, out);
    };
}

Tactic IMP_SEARCH_TAC(std::vector<Theorem> thms, SearchOptions opts) {
    std::vector<ImpRule> rules;
    for (auto const & th : thms) rules.push_back(make_rule(th));
    return [rules = std::move(rules), opts](Goal const & g) {
        SearchNode root{g.target, "", {}};
        auto th = Search(rules, g.assumptions, opts.depth).run(g.target, 0, root);
        if (!th) fail("IMP_SEARCH_TAC");
        if (opts.trace) *opts.trace = root;
        return TacticResult{{}, [th = *th](std::vector<Theorem> const &) { return th; }};
    };
}

Tactic REWRITE_TAC(std::vector<Theorem> const & thl) {
    std::vector<Theorem> thms;
    for (auto const & th : thl) {
        auto c = IMP_CANON(th);
        thms.insert(thms.end(), c.begin(), c.end());
    }
    std::vector<Theorem> chain{Theory::pplambda()->axiom("EQ_REFL")};
    chain.insert(chain.end(), thms.begin(), thms.end());
    Tactic chain_tac = IMP_SEARCH_TAC(chain);
    std::vector<Conv> convs;
    std::vector<FConv> fconvs;
    for (auto const & th : thms) {
        try {
            convs.push_back(IMP_REW_CONV(chain_tac, th));
        } catch (Failure const &) {
        }
    }
    for (auto const & th : thms) {
        try {
            fconvs.push_back(IMP_REW_FCONV(chain_tac, FCONV_CANON(th)));
        } catch (Failure const &) {
        }
    }
    Conv conv = ORELSEC(FIRST_CONV(std::move(convs)), BETA_CONV);
    FConv fconv = FIRST_FCONV(std::move(fconvs));
    return FCONV_TAC(BASIC_FCONV(conv, fconv));
}

Tactic ASM_REWRITE_TAC(std::vector<Theorem> const & thl) {
    return [thl](Goal const & g) {
        std::vector<Theorem> all;
        for (auto const & a : g.assumptions) all.push_back(ASSUME(a));
        all.insert(all.end(), thl.begin(), thl.end());
        return REWRITE_TAC(all)(g);
    };
}

} // namespace convkit
