/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/kernel/derived.hpp"
#include "convkit/kernel/theory.hpp"

namespace convkit {

namespace {
std::pair<Formula, Formula> iff_sides(char const * rule, Theorem const & th) {
    if (!th.concl().is_iff()) fail(rule);
    return {th.concl().left(), th.concl().right()};
}
} // namespace

Theorem TRUTH_THM() {
    static Theorem const th = Theory::pplambda()->axiom("TRUTH_INTRO");
    return th;
}

Theorem UNDISCH(Theorem const & th) {
    if (!th.concl().is_imp()) fail("UNDISCH");
    return MP(th, ASSUME(th.concl().left()));
}

Theorem IFF_BY(Formula const & a, Theorem const & a_gives_b, Formula const & b, Theorem const & b_gives_a) {
    return IFF_INTRO(DISCH(a, a_gives_b), DISCH(b, b_gives_a));
}

Theorem IFF_REFL(Formula const & a) {
    Theorem aa = DISCH(a, ASSUME(a));
    return IFF_INTRO(aa, aa);
}

Theorem IFF_SYM(Theorem const & ab) {
    auto [a, b] = iff_sides("IFF_SYM", ab);
    return IFF_BY(b, IFF_MP_REV(ab, ASSUME(b)), a, IFF_MP(ab, ASSUME(a)));
}

Theorem IFF_TRANS(Theorem const & ab, Theorem const & bc) {
    auto [a, b] = iff_sides("IFF_TRANS", ab);
    auto [b2, c] = iff_sides("IFF_TRANS", bc);
    if (!alpha_eq(b, b2)) fail("IFF_TRANS");
    Theorem fwd = IFF_MP(bc, ALPHA(IFF_MP(ab, ASSUME(a)), b2));
    Theorem bwd = IFF_MP_REV(ab, ALPHA(IFF_MP_REV(bc, ASSUME(c)), b));
    return IFF_BY(a, fwd, c, bwd);
}

Theorem CONJ_CONG(Theorem const & a, Theorem const & b) {
    auto [a1, a2] = iff_sides("CONJ_CONG", a);
    auto [b1, b2] = iff_sides("CONJ_CONG", b);
    Formula l = Formula::mk_conj(a1, b1), r = Formula::mk_conj(a2, b2);
    Theorem hl = ASSUME(l), hr = ASSUME(r);
    return IFF_BY(l, CONJ(IFF_MP(a, CONJUNCT1(hl)), IFF_MP(b, CONJUNCT2(hl))),
                  r, CONJ(IFF_MP_REV(a, CONJUNCT1(hr)), IFF_MP_REV(b, CONJUNCT2(hr))));
}

Theorem DISJ_CONG(Theorem const & a, Theorem const & b) {
    auto [a1, a2] = iff_sides("DISJ_CONG", a);
    auto [b1, b2] = iff_sides("DISJ_CONG", b);
    Formula l = Formula::mk_disj(a1, b1), r = Formula::mk_disj(a2, b2);
    Theorem fwd = DISJ_CASES(ASSUME(l), DISJ1(IFF_MP(a, ASSUME(a1)), b2), DISJ2(a2, IFF_MP(b, ASSUME(b1))));
    Theorem bwd = DISJ_CASES(ASSUME(r), DISJ1(IFF_MP_REV(a, ASSUME(a2)), b1), DISJ2(a1, IFF_MP_REV(b, ASSUME(b2))));
    return IFF_BY(l, fwd, r, bwd);
}

Theorem IMP_CONG(Theorem const & a, Theorem const & b) {
    auto [a1, a2] = iff_sides("IMP_CONG", a);
    auto [b1, b2] = iff_sides("IMP_CONG", b);
    Formula l = Formula::mk_imp(a1, b1), r = Formula::mk_imp(a2, b2);
    Theorem fwd = DISCH(a2, IFF_MP(b, MP(ASSUME(l), IFF_MP_REV(a, ASSUME(a2)))));
    Theorem bwd = DISCH(a1, IFF_MP_REV(b, MP(ASSUME(r), IFF_MP(a, ASSUME(a1)))));
    return IFF_BY(l, fwd, r, bwd);
}

Theorem IFF_CONG(Theorem const & a, Theorem const & b) {
    auto [a1, a2] = iff_sides("IFF_CONG", a);
    auto [b1, b2] = iff_sides("IFF_CONG", b);
    Formula l = Formula::mk_iff(a1, b1), r = Formula::mk_iff(a2, b2);
    Theorem hl = ASSUME(l), hr = ASSUME(r);
    Theorem fwd = IFF_BY(a2, IFF_MP(b, IFF_MP(hl, IFF_MP_REV(a, ASSUME(a2)))),
                         b2, IFF_MP(a, IFF_MP_REV(hl, IFF_MP_REV(b, ASSUME(b2)))));
    Theorem bwd = IFF_BY(a1, IFF_MP_REV(b, IFF_MP(hr, IFF_MP(a, ASSUME(a1)))),
                         b1, IFF_MP_REV(a, IFF_MP_REV(hr, IFF_MP(b, ASSUME(b1)))));
    return IFF_BY(l, fwd, r, bwd);
}

Theorem FORALL_CONG(Term const & x, Theorem const & ab) {
    auto [a, b] = iff_sides("FORALL_CONG", ab);
    Formula l = Formula::mk_forall(x, a), r = Formula::mk_forall(x, b);
    Theorem fwd = GEN(x, IFF_MP(ab, SPEC(x, ASSUME(l))));
    Theorem bwd = GEN(x, IFF_MP_REV(ab, SPEC(x, ASSUME(r))));
    return IFF_BY(l, fwd, r, bwd);
}

Theorem EXISTS_CONG(Term const & x, Theorem const & ab) {
    auto [a, b] = iff_sides("EXISTS_CONG", ab);
    Formula l = Formula::mk_exists(x, a), r = Formula::mk_exists(x, b);
    Theorem fwd = EXISTS_ELIM(ASSUME(l), x, EXISTS_INTRO(r, x, IFF_MP(ab, ASSUME(a))));
    Theorem bwd = EXISTS_ELIM(ASSUME(r), x, EXISTS_INTRO(l, x, IFF_MP_REV(ab, ASSUME(b))));
    return IFF_BY(l, fwd, r, bwd);
}

} // namespace convkit
