/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <memory>
#include <string>
#include <vector>
#include "convkit/failure.hpp"
#include "convkit/syntax/syntax.hpp"

namespace convkit {

enum class ErrorKind {
    TypeMismatch,
    RuleMismatch,
    IllTyped,
    VarFreeInHyps,
    DuplicateLabel,
    UnknownLabel,
    OpenHypotheses,
    UnknownPredicate,
};

char const * to_string(ErrorKind k);

/// A rule refused its arguments. The token is the rule's name.
class KernelError : public Failure {
public:
    KernelError(std::string rule, ErrorKind kind, std::string const & detail = {});
    ErrorKind kind() const { return m_kind; }

private:
    ErrorKind m_kind;
};

enum class Rule {
    Assume, Refl, Trans, Sym, MkComb, Abs, Beta, Mp, Disch, Gen, Spec,
    Conj, Conjunct1, Conjunct2, Disj1, Disj2, DisjCases, ExistsIntro, ExistsElim,
    IffIntro, IffMp, IffMpRev, Contr, Alpha, PredCong, Inst, Axiom,
};

char const * to_string(Rule r);

struct ProofNode;

/// A sequent `hyps |- concl`. The only way to obtain one is through the
/// rules below (or an axiom of a theory).
class Theorem {
public:
    Theorem(Theorem const &) = default;
    Theorem & operator=(Theorem const &) = default;

    std::vector<Formula> const & hyps() const { return m_hyps; }
    Formula const & concl() const { return m_concl; }
    /// The derivation, when auditing was on while this theorem was made.
    std::shared_ptr<ProofNode const> const & proof() const { return m_proof; }

private:
    Theorem(std::vector<Formula> hyps, Formula concl, std::shared_ptr<ProofNode const> proof);
    friend struct KernelAccess;

    std::vector<Formula> m_hyps;
    Formula m_concl;
    std::shared_ptr<ProofNode const> m_proof;
};

struct ProofNode {
    Rule rule;
    std::vector<Theorem> premises;
    std::vector<Term> terms;
    std::vector<Formula> forms;
    TermSubst term_subst;
    TypeSubst type_subst;
    std::string label; // axiom label or predicate name
};

/// Same conclusion and same hypothesis set, both up to alpha-equivalence.
bool same_sequent(Theorem const & a, Theorem const & b);

/// `|-A`, `[A; B] |-C`
std::string print_theorem(Theorem const & th);

// ---------------------------------------------------------------------------
// Primitive rules.

Theorem ASSUME(Formula const & a);
Theorem REFL(Term const & t);
Theorem TRANS(Theorem const & ab, Theorem const & bc);
Theorem SYM(Theorem const & ab);
Theorem MK_COMB(Theorem const & fg, Theorem const & tu);
Theorem ABS_RULE(Term const & x, Theorem const & tu);
/// `(\x.u)v == u[v/x]`; fails with token BETA_CONV on a non-redex.
Theorem BETA_PRIM(Term const & t);
Theorem MP(Theorem const & imp, Theorem const & ant);
Theorem DISCH(Formula const & a, Theorem const & th);
Theorem GEN(Term const & x, Theorem const & th);
Theorem SPEC(Term const & t, Theorem const & th);
Theorem CONJ(Theorem const & a, Theorem const & b);
Theorem CONJUNCT1(Theorem const & ab);
Theorem CONJUNCT2(Theorem const & ab);
/// A |- A \/ B
Theorem DISJ1(Theorem const & a, Formula const & b);
/// B |- A \/ B
Theorem DISJ2(Formula const & a, Theorem const & b);
Theorem DISJ_CASES(Theorem const & ab, Theorem const & ac, Theorem const & bc);
/// From |-A[t/x] conclude |-?x.A.
Theorem EXISTS_INTRO(Formula const & ex, Term const & t, Theorem const & th);
/// From |-?x.A and A[y/x] |-B conclude |-B, for y not free elsewhere.
Theorem EXISTS_ELIM(Theorem const & ex, Term const & y, Theorem const & th);
Theorem IFF_INTRO(Theorem const & ab, Theorem const & ba);
Theorem IFF_MP(Theorem const & iff, Theorem const & a);
Theorem IFF_MP_REV(Theorem const & iff, Theorem const & b);
/// Ex falso: from |-FALSITY() conclude any formula.
Theorem CONTR(Formula const & b, Theorem const & falsity);
/// Replaces the conclusion by an alpha-equivalent formula.
Theorem ALPHA(Theorem const & th, Formula const & b);
Theorem PRED_CONG(std::string const & pred, Theorem const & tu);
/// Type instantiation followed by simultaneous term instantiation. The
/// term pairs name their variables before type instantiation.
Theorem INST(TermSubst const & terms, TypeSubst const & types, Theorem const & th);

// ---------------------------------------------------------------------------
// Auditing.

/// Record derivations in new theorems (off by default).
void set_audit(bool on);
bool audit_enabled();

/// Re-derives `th` from its recorded proof through the primitive rules and
/// checks that the result is the same sequent. Fails if no proof was
/// recorded or the replay disagrees.
void replay(Theorem const & th);

/// Number of primitive rule applications so far (all threads).
unsigned long rule_count();

#ifdef CONVKIT_KERNEL_MUTATIONS
/// Deliberately weakened side conditions, for checking that the test
/// suite notices. 0 disables.
enum class Mutation { None, AbsFreeness, TransMiddle, MpAntecedent, GenFreeness, InstHyps };
void set_mutation(Mutation m);
#endif

} // namespace convkit
