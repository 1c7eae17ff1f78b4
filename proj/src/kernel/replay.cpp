/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <map>
#include "access.hpp"

namespace convkit {

namespace {

class Replayer {
public:
    Theorem run(Theorem const & th) {
        ProofNode const * n = th.proof().get();
        if (!n) fail("replay: no recorded proof");
        if (auto it = m_done.find(n); it != m_done.end()) return it->second;
        Theorem out = step(th, *n);
        if (!same_sequent(out, th)) throw Failure("replay", std::string("sequent differs at ") + to_string(n->rule));
        m_done.emplace(n, out);
        return out;
    }

private:
    Theorem step(Theorem const & th, ProofNode const & n) {
        std::vector<Theorem> p;
        for (auto const & q : n.premises) p.push_back(run(q));
        switch (n.rule) {
        case Rule::Axiom: return th; // trusted leaf
        case Rule::Assume: return ASSUME(n.forms.at(0));
        case Rule::Refl: return REFL(n.terms.at(0));
        case Rule::Trans: return TRANS(p.at(0), p.at(1));
        case Rule::Sym: return SYM(p.at(0));
        case Rule::MkComb: return MK_COMB(p.at(0), p.at(1));
        case Rule::Abs: return ABS_RULE(n.terms.at(0), p.at(0));
        case Rule::Beta: return BETA_PRIM(n.terms.at(0));
        case Rule::Mp: return MP(p.at(0), p.at(1));
        case Rule::Disch: return DISCH(n.forms.at(0), p.at(0));
        case Rule::Gen: return GEN(n.terms.at(0), p.at(0));
        case Rule::Spec: return SPEC(n.terms.at(0), p.at(0));
        case Rule::Conj: return CONJ(p.at(0), p.at(1));
        case Rule::Conjunct1: return CONJUNCT1(p.at(0));
        case Rule::Conjunct2: return CONJUNCT2(p.at(0));
        case Rule::Disj1: return DISJ1(p.at(0), n.forms.at(0));
        case Rule::Disj2: return DISJ2(n.forms.at(0), p.at(0));
        case Rule::DisjCases: return DISJ_CASES(p.at(0), p.at(1), p.at(2));
        case Rule::ExistsIntro: return EXISTS_INTRO(n.forms.at(0), n.terms.at(0), p.at(0));
        case Rule::ExistsElim: return EXISTS_ELIM(p.at(0), n.terms.at(0), p.at(1));
        case Rule::IffIntro: return IFF_INTRO(p.at(0), p.at(1));
        case Rule::IffMp: return IFF_MP(p.at(0), p.at(1));
        case Rule::IffMpRev: return IFF_MP_REV(p.at(0), p.at(1));
        case Rule::Contr: return CONTR(n.forms.at(0), p.at(0));
        case Rule::Alpha: return ALPHA(p.at(0), n.forms.at(0));
        case Rule::PredCong: return PRED_CONG(n.label, p.at(0));
        case Rule::Inst: return INST(n.term_subst, n.type_subst, p.at(0));
        }
        fail("replay: unknown rule");
    }

    std::map<ProofNode const *, Theorem> m_done;
};

} // namespace

void replay(Theorem const & th) { Replayer().run(th); }

} // namespace convkit
