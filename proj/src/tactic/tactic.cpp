/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/tactic/tactic.hpp"
#include <algorithm>
#include "convkit/kernel/derived.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit {

std::string print_goal(Goal const & g) {
    std::string out = "\"" + print_form(g.target) + "\"";
    for (auto const & a : g.assumptions) out += "\n  [ \"" + print_form(a) + "\" ]";
    return out;
}

bool achieves(Theorem const & th, Goal const & g) {
    if (!alpha_eq(th.concl(), g.target)) return false;
    return std::all_of(th.hyps().begin(), th.hyps().end(), [&](Formula const & h) {
        return std::any_of(g.assumptions.begin(), g.assumptions.end(),
                           [&](Formula const & a) { return alpha_eq(a, h); });
    });
}

TacticResult ALL_TAC(Goal const & g) {
    return {{g}, [](std::vector<Theorem> const & ths) { return ths.at(0); }};
}

TacticResult NO_TAC(Goal const &) { fail("NO_TAC"); }

Tactic THEN(Tactic t1, Tactic t2) {
    return [t1 = std::move(t1), t2 = std::move(t2)](Goal const & g) {
        TacticResult r1 = t1(g);
        std::vector<Goal> subgoals;
        std::vector<TacticResult> parts;
        for (auto const & sg : r1.subgoals) {
            parts.push_back(t2(sg));
            auto const & s = parts.back().subgoals;
            subgoals.insert(subgoals.end(), s.begin(), s.end());
        }
        Justification j = [j1 = r1.justify, parts](std::vector<Theorem> const & ths) {
            std::vector<Theorem> mid;
            std::size_t k = 0;
            for (auto const & p : parts) {
                std::vector<Theorem> mine(ths.begin() + k, ths.begin() + k + p.subgoals.size());
                k += p.subgoals.size();
                mid.push_back(p.justify(mine));
            }
            return j1(mid);
        };
        return TacticResult{std::move(subgoals), std::move(j)};
    };
}

Tactic ORELSE(Tactic t1, Tactic t2) {
    return [t1 = std::move(t1), t2 = std::move(t2)](Goal const & g) {
        try {
            return t1(g);
        } catch (Failure const &) {
            return t2(g);
        }
    };
}

Tactic REPEAT(Tactic t) {
    return [t](Goal const & g) {
        charge_step();
        return ORELSE(THEN(t, REPEAT(t)), ALL_TAC)(g);
    };
}

Tactic FCONV_TAC(FConv f) {
    return [f = std::move(f)](Goal const & g) {
        Theorem th = f(g.target);
        Formula b = th.concl().right();
        if (is_truth(b))
            return TacticResult{{}, [th](std::vector<Theorem> const &) { return IFF_MP_REV(th, TRUTH_THM()); }};
        if (alpha_eq(b, g.target)) fail("FCONV_TAC");
        return TacticResult{{Goal{g.assumptions, b}},
                            [th](std::vector<Theorem> const & ths) { return IFF_MP_REV(th, ths.at(0)); }};
    };
}

Theorem prove(Goal const & g, Tactic const & tac) {
    TacticResult r = tac(g);
    if (!r.subgoals.empty()) fail("prove");
    Theorem th = r.justify({});
    if (!achieves(th, g)) throw Failure("prove", "justification does not achieve the goal");
    return th;
}

// ---------------------------------------------------------------------------

ProofState::ProofState(Goal g) { m_nodes.push_back(Node{std::move(g), std::nullopt, {}}); }

std::optional<std::size_t> ProofState::first_open(std::size_t i) const {
    Node const & n = m_nodes[i];
    if (!n.justify) return i;
    for (auto c : n.children)
        if (auto o = first_open(c)) return o;
    return std::nullopt;
}

void ProofState::collect(std::size_t i, std::vector<Goal> & out) const {
    Node const & n = m_nodes[i];
    if (!n.justify) {
        out.push_back(n.goal);
        return;
    }
    for (auto c : n.children) collect(c, out);
}

void ProofState::expand(Tactic const & tac) {
    auto i = first_open(0);
    if (!i) throw Failure("expand", "no goals");
    TacticResult r = tac(m_nodes[*i].goal);
    std::vector<std::size_t> kids;
    for (auto & sg : r.subgoals) {
        kids.push_back(m_nodes.size());
        m_nodes.push_back(Node{std::move(sg), std::nullopt, {}});
    }
    m_nodes[*i].justify = r.justify;
    m_nodes[*i].children = std::move(kids);
    m_history.push_back(*i);
}

std::vector<Goal> ProofState::pending() const {
    std::vector<Goal> out;
    collect(0, out);
    return out;
}

Theorem ProofState::build(std::size_t i) const {
    Node const & n = m_nodes[i];
    std::vector<Theorem> ths;
    for (auto c : n.children) ths.push_back(build(c));
    Theorem th = (*n.justify)(ths);
    if (!achieves(th, n.goal)) throw Failure("ProofState", "invalid tactic");
    return th;
}

Theorem ProofState::result() const {
    if (!done()) throw Failure("ProofState", "unsolved goals");
    return build(0);
}

bool ProofState::backup() {
    if (m_history.empty()) return false;
    std::size_t i = m_history.back();
    m_history.pop_back();
    // children of the most recent expansion are always the newest nodes
    m_nodes.erase(m_nodes.end() - static_cast<std::ptrdiff_t>(m_nodes[i].children.size()), m_nodes.end());
    m_nodes[i].justify.reset();
    m_nodes[i].children.clear();
    return true;
}

} // namespace convkit
