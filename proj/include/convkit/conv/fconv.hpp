/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include "convkit/conv/conv.hpp"

namespace convkit {

/// Maps A to |-A <=> B, with exactly A on the left.
using FConv = std::function<Theorem(Formula const &)>;

FConv REWRITE_FCONV(Theorem const & rw);
Theorem ALL_FCONV(Formula const & a);
Theorem NO_FCONV(Formula const & a);

FConv THENFC(FConv f1, FConv f2);
FConv ORELSEFC(FConv f1, FConv f2);
FConv FIRST_FCONV(std::vector<FConv> fs);
FConv REPEATFC(FConv f);

FConv PRED_FCONV(Conv c);
FConv CONJ_FCONV(FConv f);
FConv DISJ_FCONV(FConv f);
FConv IMP_FCONV(FConv f);
FConv IFF_FCONV(FConv f);
FConv FORALL_FCONV(FConv f);
FConv EXISTS_FCONV(FConv f);

FConv SUB_FCONV(Conv c, FConv f);
FConv DEPTH_FCONV(Conv c, FConv f);
FConv REDEPTH_FCONV(Conv c, FConv f);
FConv TOP_DEPTH_FCONV(Conv c, FConv f);

Theorem TAUT_CONJ_FCONV(Formula const & a);
Theorem TAUT_DISJ_FCONV(Formula const & a);
Theorem TAUT_IMP_FCONV(Formula const & a);
Theorem TAUT_IFF_FCONV(Formula const & a);
Theorem TAUT_FORALL_FCONV(Formula const & a);
Theorem TAUT_EXISTS_FCONV(Formula const & a);
Theorem TAUT_PRED_FCONV(Formula const & a);
Theorem BASIC_TAUT_FCONV(Formula const & a);

FConv BASIC_FCONV(Conv c, FConv f);

/// Replaces an alpha-equivalent left side by `a` exactly.
Theorem fix_lhs(Formula const & a, Theorem const & th);

} // namespace convkit
