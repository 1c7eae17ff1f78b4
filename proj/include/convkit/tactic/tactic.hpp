/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>
#include "convkit/conv/conv.hpp"
#include "convkit/conv/fconv.hpp"
#include "convkit/kernel/theorem.hpp"

namespace convkit {

struct Goal {
    std::vector<Formula> assumptions;
    Formula target;
};

using Justification = std::function<Theorem(std::vector<Theorem> const &)>;

struct TacticResult {
    std::vector<Goal> subgoals;
    Justification justify;
};

/// A tactic maps a goal to subgoals and a rule that turns achievements of
/// the subgoals into an achievement of the goal.
using Tactic = std::function<TacticResult(Goal const &)>;

std::string print_goal(Goal const & g);

/// `th` achieves `g`: conclusion alpha-equal to the target, hypotheses
/// among the assumptions.
bool achieves(Theorem const & th, Goal const & g);

TacticResult ALL_TAC(Goal const & g);
TacticResult NO_TAC(Goal const & g);
Tactic THEN(Tactic t1, Tactic t2);
Tactic ORELSE(Tactic t1, Tactic t2);
/// Applies `t` until it fails, returning the subgoals on which it failed.
Tactic REPEAT(Tactic t);

/// Rewrites the target with `f`; a result of TRUTH () solves the goal.
/// Fails with "FCONV_TAC" if the target is unchanged.
Tactic FCONV_TAC(FConv f);

/// Runs `tac` on `g` and requires it to solve the goal outright.
Theorem prove(Goal const & g, Tactic const & tac);

// ---------------------------------------------------------------------------
// Canonical forms.

/// Splits a theorem into curried implications.
std::vector<Theorem> IMP_CANON(Theorem const & th);
/// A1 ==> ... ==> P x   becomes   A1 ==> ... ==> (P x <=> TRUTH ()),
/// and a negated predicate becomes an equivalence with FALSITY ().
Theorem FCONV_CANON(Theorem const & th);

// ---------------------------------------------------------------------------
// Implicative rewriting and chaining.

/// Uses  A1 ==> ... ==> An ==> t == u, proving each antecedent with `tac`.
Conv IMP_REW_CONV(Tactic tac, Theorem const & th);
FConv IMP_REW_FCONV(Tactic tac, Theorem const & th);

/// One solved node of a backward-chaining search.
struct SearchNode {
    Formula goal;
    std::string by; // "assumption", or the printed conclusion of the rule used
    std::vector<SearchNode> children;
};

struct SearchOptions {
    int depth = 50;
    SearchNode * trace = nullptr; // receives the proof tree on success
};

Tactic IMP_SEARCH_TAC(std::vector<Theorem> thms, SearchOptions opts = {});

Tactic REWRITE_TAC(std::vector<Theorem> const & thl);
Tactic ASM_REWRITE_TAC(std::vector<Theorem> const & thl);

// ---------------------------------------------------------------------------

/// The goal tree of an interactive proof.
class ProofState {
public:
    explicit ProofState(Goal g);

    /// Applies `tac` to the first unsolved goal.
    void expand(Tactic const & tac);
    /// Unsolved goals, leftmost first.
    std::vector<Goal> pending() const;
    bool done() const { return pending().empty(); }
    /// The achieved theorem; fails with "ProofState" while goals remain.
    Theorem result() const;
    /// Undoes the last expansion; false if there is none.
    bool backup();

private:
    struct Node {
        Goal goal;
        std::optional<Justification> justify;
        std::vector<std::size_t> children;
    };
    std::optional<std::size_t> first_open(std::size_t i) const;
    void collect(std::size_t i, std::vector<Goal> & out) const;
    Theorem build(std::size_t i) const;

    std::vector<Node> m_nodes;
    std::vector<std::size_t> m_history; // expanded node, most recent last
};

} // namespace convkit
