/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <functional>
#include <vector>
#include "convkit/kernel/theorem.hpp"

namespace convkit {

/// Maps t to |-t == u. Results always have exactly t as their left side.
using Conv = std::function<Theorem(Term const &)>;

Theorem BETA_CONV(Term const & t);
Conv REWRITE_CONV(Theorem const & rw);
Theorem ALL_CONV(Term const & t);
Theorem NO_CONV(Term const & t);

Conv THENC(Conv c1, Conv c2);
Conv ORELSEC(Conv c1, Conv c2);
Conv FIRST_CONV(std::vector<Conv> cs);
Conv EVERY_CONV(std::vector<Conv> cs);
Conv REPEATC(Conv c);
Conv TRY_CONV(Conv c);

Conv COMB_CONV(Conv c);
Conv ABS_CONV(Conv c);
Conv SUB_CONV(Conv c);
Conv DEPTH_CONV(Conv c);
Conv REDEPTH_CONV(Conv c);
Conv TOP_DEPTH_CONV(Conv c);

/// Left and right sides of a conversion result.
Term lhs(Theorem const & th);
Term rhs(Theorem const & th);

/// Replaces an alpha-equivalent left side by `t` exactly.
Theorem fix_lhs(Term const & t, Theorem const & th);

// ---------------------------------------------------------------------------
// Step budget.

/// While alive, limits the rewriting steps taken on this thread (each
/// rewrite, beta step and repetition counts one). Exceeding it throws
/// StepLimitExceeded. Budgets nest; the innermost wins.
class StepBudget {
public:
    explicit StepBudget(long limit);
    ~StepBudget();
    StepBudget(StepBudget const &) = delete;
    StepBudget & operator=(StepBudget const &) = delete;

    long used() const;

private:
    long m_saved_limit, m_saved_used;
};

/// Counts one step against the active budget, if any.
void charge_step();

} // namespace convkit
