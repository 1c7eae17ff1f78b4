/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/conv/conv.hpp"
#include <algorithm>
#include <optional>
#include "convkit/matching/match.hpp"

namespace convkit {

namespace {
thread_local long t_limit = -1; // no budget
thread_local long t_used = 0;

std::vector<Term> hyp_frees(Theorem const & th) {
    std::vector<Term> out;
    for (auto const & h : th.hyps())
        for (auto const & v : free_vars(h)) out.push_back(v);
    return out;
}
} // namespace

StepBudget::StepBudget(long limit) : m_saved_limit(t_limit), m_saved_used(t_used) {
    t_limit = limit;
    t_used = 0;
}

StepBudget::~StepBudget() {
    t_limit = m_saved_limit;
    t_used = m_saved_used;
}

long StepBudget::used() const { return t_used; }

void charge_step() {
    if (t_limit < 0) return;
    if (++t_used > t_limit) throw StepLimitExceeded(t_limit);
}

Term lhs(Theorem const & th) { return dest_equiv(th.concl()).first; }
Term rhs(Theorem const & th) { return dest_equiv(th.concl()).second; }

Theorem fix_lhs(Term const & t, Theorem const & th) {
    auto [l, r] = dest_equiv(th.concl());
    if (l == t) return th;
    return ALPHA(th, mk_equiv(t, r));
}

Theorem BETA_CONV(Term const & t) {
    Theorem th = BETA_PRIM(t);
    charge_step();
    return th;
}

Conv REWRITE_CONV(Theorem const & rw) {
    auto inst = PART_TMATCH([](Formula const & f) { return dest_equiv(f).first; }, rw);
    return [inst](Term const & t) {
        Theorem th = inst(t);
        charge_step();
        return fix_lhs(t, th);
    };
}

Theorem ALL_CONV(Term const & t) { return REFL(t); }
Theorem NO_CONV(Term const &) { fail("NO_CONV"); }

Conv THENC(Conv c1, Conv c2) {
    return [c1 = std::move(c1), c2 = std::move(c2)](Term const & t) {
        Theorem th1 = c1(t);
        Theorem th2 = c2(rhs(th1));
        return TRANS(th1, th2);
    };
}

Conv ORELSEC(Conv c1, Conv c2) {
    return [c1 = std::move(c1), c2 = std::move(c2)](Term const & t) {
        try {
            return c1(t);
        } catch (Failure const &) {
            return c2(t);
        }
    };
}

Conv FIRST_CONV(std::vector<Conv> cs) {
    return [cs = std::move(cs)](Term const & t) {
        for (auto const & c : cs) {
            try {
                return c(t);
            } catch (Failure const &) {
            }
        }
        fail("FIRST_CONV");
    };
}

Conv EVERY_CONV(std::vector<Conv> cs) {
    return [cs = std::move(cs)](Term const & t) {
        Theorem th = REFL(t);
        for (auto const & c : cs) th = TRANS(th, c(rhs(th)));
        return th;
    };
}

// Iterative, so long chains do not grow the stack.
Conv REPEATC(Conv c) {
    return [c = std::move(c)](Term const & t) {
        std::optional<Theorem> acc;
        Term cur = t;
        for (;;) {
            charge_step();
            std::optional<Theorem> th;
            try {
                th = c(cur);
            } catch (Failure const &) {
                break;
            }
            acc = acc ? TRANS(*acc, *th) : *th;
            cur = rhs(*th);
        }
        return acc ? *acc : REFL(t);
    };
}

Conv TRY_CONV(Conv c) { return ORELSEC(std::move(c), ALL_CONV); }

Conv COMB_CONV(Conv c) {
    return [c = std::move(c)](Term const & t) {
        if (!t.is_comb()) fail("COMB_CONV");
        Theorem f = c(t.fun());
        Theorem x = c(t.arg());
        return MK_COMB(f, x);
    };
}

Conv ABS_CONV(Conv c) {
    return [c = std::move(c)](Term const & t) {
        if (!t.is_abs()) fail("ABS_CONV");
        Term x = t.bound();
        Theorem th = c(t.body());
        std::vector<Term> hv = hyp_frees(th);
        if (std::find(hv.begin(), hv.end(), x) == hv.end()) return ABS_RULE(x, th);
        // x is fixed by a hypothesis: abstract over a fresh name instead
        std::vector<Term> avoid = hv;
        for (auto const & v : free_vars(th.concl())) avoid.push_back(v);
        Term y = variant(x, avoid);
        Term body = subst(t.body(), {{y, x}});
        Theorem th2 = c(body);
        return fix_lhs(t, ABS_RULE(y, th2));
    };
}

Conv SUB_CONV(Conv c) { return FIRST_CONV({COMB_CONV(c), ABS_CONV(c), ALL_CONV}); }

Conv DEPTH_CONV(Conv c) {
    return [c](Term const & t) { return THENC(SUB_CONV(DEPTH_CONV(c)), REPEATC(c))(t); };
}

Conv REDEPTH_CONV(Conv c) {
    return [c](Term const & t) {
        return THENC(SUB_CONV(REDEPTH_CONV(c)), ORELSEC(THENC(c, REDEPTH_CONV(c)), ALL_CONV))(t);
    };
}

Conv TOP_DEPTH_CONV(Conv c) {
    return [c](Term const & t) {
        return THENC(THENC(REPEATC(c), SUB_CONV(TOP_DEPTH_CONV(c))),
                     ORELSEC(THENC(c, TOP_DEPTH_CONV(c)), ALL_CONV))(t);
    };
}

} // namespace convkit
