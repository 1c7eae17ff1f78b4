/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include "convkit/kernel/theorem.hpp"

namespace convkit {

// Kernel-private: the one place theorems are built.
struct KernelAccess {
    static Theorem make(std::vector<Formula> hyps, Formula concl, std::shared_ptr<ProofNode const> proof) {
        return Theorem(std::move(hyps), std::move(concl), std::move(proof));
    }
};

/// Axioms enter through here; only the theory store calls it.
Theorem make_axiom(std::string const & label, Formula const & a);

/// Fails with IllTyped unless the builtin predicates are applied at
/// their types.
void check_well_typed(char const * rule, Formula const & f);

} // namespace convkit
