/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include "convkit/kernel/theorem.hpp"

namespace convkit {

// Rules derived from the primitives; none of them can make anything the
// kernel could not.

/// |-TRUTH ()
Theorem TRUTH_THM();
/// A ==> B  gives  A |- B
Theorem UNDISCH(Theorem const & th);
/// From  A |- B  and  B |- A  conclude  A <=> B.
Theorem IFF_BY(Formula const & a, Theorem const & a_gives_b, Formula const & b, Theorem const & b_gives_a);

Theorem IFF_REFL(Formula const & a);
Theorem IFF_SYM(Theorem const & ab);
Theorem IFF_TRANS(Theorem const & ab, Theorem const & bc);

// Congruences: from A <=> A' and B <=> B' conclude (A op B) <=> (A' op B').
Theorem CONJ_CONG(Theorem const & a, Theorem const & b);
Theorem DISJ_CONG(Theorem const & a, Theorem const & b);
Theorem IMP_CONG(Theorem const & a, Theorem const & b);
Theorem IFF_CONG(Theorem const & a, Theorem const & b);
/// From A <=> B conclude (!x.A) <=> (!x.B); x must not be free in the hypotheses.
Theorem FORALL_CONG(Term const & x, Theorem const & ab);
Theorem EXISTS_CONG(Term const & x, Theorem const & ab);

} // namespace convkit
