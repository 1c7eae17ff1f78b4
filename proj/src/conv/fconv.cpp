/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/conv/fconv.hpp"
#include <optional>
#include "convkit/kernel/derived.hpp"
#include "convkit/kernel/theory.hpp"
#include "convkit/matching/match.hpp"

namespace convkit {

Theorem fix_lhs(Formula const & a, Theorem const & th) {
    if (!th.concl().is_iff()) fail("fix_lhs");
    if (th.concl().left() == a) return th;
    return ALPHA(th, Formula::mk_iff(a, th.concl().right()));
}

namespace {

Formula iff_rhs(Theorem const & th) { return th.concl().right(); }

Theorem root_axiom(char const * label) { return Theory::pplambda()->axiom(label); }

bool free_in_hyps(Term const & x, Theorem const & th) {
    for (auto const & h : th.hyps())
        if (free_in(x, h)) return true;
    return false;
}

using Cong = Theorem (*)(Theorem const &, Theorem const &);

FConv binary(FConv f, Formula::Kind kind, char const * name, Cong cong) {
    return [f = std::move(f), kind, name, cong](Formula const & a) {
        if (a.kind() != kind || (kind == Formula::Kind::Pred)) fail(name);
        return fix_lhs(a, cong(f(a.left()), f(a.right())));
    };
}

using QCong = Theorem (*)(Term const &, Theorem const &);

FConv quantifier(FConv f, Formula::Kind kind, char const * name, QCong cong) {
    return [f = std::move(f), kind, name, cong](Formula const & a) {
        if (a.kind() != kind) fail(name);
        Term x = a.bound();
        Theorem th = f(a.body());
        if (!free_in_hyps(x, th)) return fix_lhs(a, cong(x, th));
        // the body's rewrite fixed x; quantify over a fresh name instead
        std::vector<Term> avoid = free_vars(a);
        for (auto const & h : th.hyps())
            for (auto const & v : free_vars(h)) avoid.push_back(v);
        for (auto const & v : free_vars(th.concl())) avoid.push_back(v);
        Term y = variant(x, avoid);
        Theorem th2 = f(subst(a.body(), {{y, x}}));
        return fix_lhs(a, cong(y, th2));
    };
}

// A <=> B from the two directions, each given as a derivation from its
// assumption.
Theorem iff(Formula const & a, Formula const & b, Theorem const & fwd, Theorem const & bwd) {
    return IFF_BY(a, fwd, b, bwd);
}

} // namespace

FConv REWRITE_FCONV(Theorem const & rw) {
    auto inst = PART_FMATCH([](Formula const & f) { return dest_iff(f).first; }, rw);
    return [inst](Formula const & a) {
        Theorem th = inst(a);
        charge_step();
        return fix_lhs(a, th);
    };
}

Theorem ALL_FCONV(Formula const & a) { return IFF_REFL(a); }
Theorem NO_FCONV(Formula const &) { fail("NO_FCONV"); }

FConv THENFC(FConv f1, FConv f2) {
    return [f1 = std::move(f1), f2 = std::move(f2)](Formula const & a) {
        Theorem th1 = f1(a);
        Theorem th2 = f2(iff_rhs(th1));
        return IFF_TRANS(th1, th2);
    };
}

FConv ORELSEFC(FConv f1, FConv f2) {
    return [f1 = std::move(f1), f2 = std::move(f2)](Formula const & a) {
        try {
            return f1(a);
        } catch (Failure const &) {
            return f2(a);
        }
    };
}

FConv FIRST_FCONV(std::vector<FConv> fs) {
    return [fs = std::move(fs)](Formula const & a) {
        for (auto const & f : fs) {
            try {
                return f(a);
            } catch (Failure const &) {
            }
        }
        fail("FIRST_FCONV");
    };
}

FConv REPEATFC(FConv f) {
    return [f = std::move(f)](Formula const & a) {
        std::optional<Theorem> acc;
        Formula cur = a;
        for (;;) {
            charge_step();
            std::optional<Theorem> th;
            try {
                th = f(cur);
            } catch (Failure const &) {
                break;
            }
            acc = acc ? IFF_TRANS(*acc, *th) : *th;
            cur = iff_rhs(*th);
        }
        return acc ? *acc : IFF_REFL(a);
    };
}

FConv PRED_FCONV(Conv c) {
    return [c = std::move(c)](Formula const & a) {
        if (!a.is_pred()) fail("PRED_FCONV");
        return fix_lhs(a, PRED_CONG(a.pred_name(), c(a.arg())));
    };
}

FConv CONJ_FCONV(FConv f) { return binary(std::move(f), Formula::Kind::Conj, "CONJ_FCONV", CONJ_CONG); }
FConv DISJ_FCONV(FConv f) { return binary(std::move(f), Formula::Kind::Disj, "DISJ_FCONV", DISJ_CONG); }
FConv IMP_FCONV(FConv f) { return binary(std::move(f), Formula::Kind::Imp, "IMP_FCONV", IMP_CONG); }
FConv IFF_FCONV(FConv f) { return binary(std::move(f), Formula::Kind::Iff, "IFF_FCONV", IFF_CONG); }
FConv FORALL_FCONV(FConv f) {
    return quantifier(std::move(f), Formula::Kind::Forall, "FORALL_FCONV", FORALL_CONG);
}
FConv EXISTS_FCONV(FConv f) {
    return quantifier(std::move(f), Formula::Kind::Exists, "EXISTS_FCONV", EXISTS_CONG);
}

FConv SUB_FCONV(Conv c, FConv f) {
    return FIRST_FCONV({CONJ_FCONV(f), DISJ_FCONV(f), IMP_FCONV(f), IFF_FCONV(f), FORALL_FCONV(f), EXISTS_FCONV(f),
                        PRED_FCONV(c)});
}

FConv DEPTH_FCONV(Conv c, FConv f) {
    return [c, f](Formula const & a) { return THENFC(SUB_FCONV(c, DEPTH_FCONV(c, f)), REPEATFC(f))(a); };
}

FConv REDEPTH_FCONV(Conv c, FConv f) {
    return [c, f](Formula const & a) {
        FConv again = REDEPTH_FCONV(c, f);
        return THENFC(SUB_FCONV(c, again), ORELSEFC(THENFC(f, again), ALL_FCONV))(a);
    };
}

FConv TOP_DEPTH_FCONV(Conv c, FConv f) {
    return [c, f](Formula const & a) {
        FConv again = TOP_DEPTH_FCONV(c, f);
        return THENFC(THENFC(REPEATFC(f), SUB_FCONV(c, again)), ORELSEFC(THENFC(f, again), ALL_FCONV))(a);
    };
}

// ---------------------------------------------------------------------------
// Tautologies. Cases are tried in order; the first that applies wins.

Theorem TAUT_CONJ_FCONV(Formula const & a) {
    if (!a.is_conj()) fail("TAUT_CONJ_FCONV");
    Formula l = a.left(), r = a.right();
    Theorem h = ASSUME(a);
    if (is_truth(l)) return iff(a, r, CONJUNCT2(h), CONJ(TRUTH_THM(), ASSUME(r)));
    if (is_truth(r)) return iff(a, l, CONJUNCT1(h), CONJ(ASSUME(l), TRUTH_THM()));
    if (is_falsity(l)) return iff(a, l, CONJUNCT1(h), CONTR(a, ASSUME(l)));
    if (is_falsity(r)) return iff(a, r, CONJUNCT2(h), CONTR(a, ASSUME(r)));
    fail("TAUT_CONJ_FCONV");
}

Theorem TAUT_DISJ_FCONV(Formula const & a) {
    if (!a.is_disj()) fail("TAUT_DISJ_FCONV");
    Formula l = a.left(), r = a.right();
    Theorem h = ASSUME(a);
    if (is_falsity(l)) return iff(a, r, DISJ_CASES(h, CONTR(r, ASSUME(l)), ASSUME(r)), DISJ2(l, ASSUME(r)));
    if (is_falsity(r)) return iff(a, l, DISJ_CASES(h, ASSUME(l), CONTR(l, ASSUME(r))), DISJ1(ASSUME(l), r));
    if (is_truth(l)) return iff(a, l, TRUTH_THM(), DISJ1(TRUTH_THM(), r));
    if (is_truth(r)) return iff(a, r, TRUTH_THM(), DISJ2(l, TRUTH_THM()));
    fail("TAUT_DISJ_FCONV");
}

Theorem TAUT_IMP_FCONV(Formula const & a) {
    if (!a.is_imp()) fail("TAUT_IMP_FCONV");
    Formula l = a.left(), r = a.right();
    Formula t = mk_truth();
    if (is_truth(l)) return iff(a, r, MP(ASSUME(a), TRUTH_THM()), DISCH(l, ASSUME(r)));
    if (is_truth(r)) return iff(a, t, TRUTH_THM(), DISCH(l, TRUTH_THM()));
    if (is_falsity(l)) return iff(a, t, TRUTH_THM(), DISCH(l, CONTR(r, ASSUME(l))));
    if (alpha_eq(l, r)) return iff(a, t, TRUTH_THM(), DISCH(l, ALPHA(ASSUME(l), r)));
    fail("TAUT_IMP_FCONV");
}

Theorem TAUT_IFF_FCONV(Formula const & a) {
    if (!a.is_iff()) fail("TAUT_IFF_FCONV");
    Formula l = a.left(), r = a.right();
    Formula t = mk_truth();
    Theorem h = ASSUME(a);
    if (is_truth(r))
        return iff(a, l, IFF_MP_REV(h, TRUTH_THM()), IFF_BY(l, TRUTH_THM(), r, ASSUME(l)));
    if (is_truth(l))
        return iff(a, r, IFF_MP(h, TRUTH_THM()), IFF_BY(l, ASSUME(r), r, TRUTH_THM()));
    if (alpha_eq(l, r)) {
        Theorem lr = DISCH(l, ALPHA(ASSUME(l), r));
        Theorem rl = DISCH(r, ALPHA(ASSUME(r), l));
        return iff(a, t, TRUTH_THM(), IFF_INTRO(lr, rl));
    }
    fail("TAUT_IFF_FCONV");
}

Theorem TAUT_FORALL_FCONV(Formula const & a) {
    static FConv const f = ORELSEFC(REWRITE_FCONV(root_axiom("FORALL_TRUTH")), REWRITE_FCONV(root_axiom("FORALL_FALSITY")));
    return f(a);
}

Theorem TAUT_EXISTS_FCONV(Formula const & a) {
    static FConv const f = ORELSEFC(REWRITE_FCONV(root_axiom("EXISTS_TRUTH")), REWRITE_FCONV(root_axiom("EXISTS_FALSITY")));
    return f(a);
}

Theorem TAUT_PRED_FCONV(Formula const & a) {
    if (is_equiv(a)) {
        auto [l, r] = dest_equiv(a);
        if (alpha_eq(l, r)) {
            Theorem refl = ALPHA(REFL(l), a);
            return iff(a, mk_truth(), TRUTH_THM(), refl);
        }
    }
    static FConv const dist = [] {
        std::vector<FConv> fs;
        for (char const * l : {"DIST_TT_UU", "DIST_UU_TT", "DIST_FF_UU", "DIST_UU_FF", "DIST_TT_FF", "DIST_FF_TT"})
            fs.push_back(REWRITE_FCONV(root_axiom(l)));
        return FIRST_FCONV(fs);
    }();
    try {
        return dist(a);
    } catch (Failure const &) {
        fail("TAUT_PRED_FCONV");
    }
}

Theorem BASIC_TAUT_FCONV(Formula const & a) {
    static FConv const f = FIRST_FCONV({TAUT_CONJ_FCONV, TAUT_DISJ_FCONV, TAUT_IMP_FCONV, TAUT_IFF_FCONV,
                                        TAUT_FORALL_FCONV, TAUT_EXISTS_FCONV, TAUT_PRED_FCONV});
    return f(a);
}

FConv BASIC_FCONV(Conv c, FConv f) {
    return TOP_DEPTH_FCONV(TOP_DEPTH_CONV(std::move(c)), ORELSEFC(std::move(f), BASIC_TAUT_FCONV));
}

} // namespace convkit
