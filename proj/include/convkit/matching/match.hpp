/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <functional>
#include "convkit/kernel/theorem.hpp"

namespace convkit {

/// Bindings that turn a pattern into an object: type pairs first, then
/// term pairs (whose variables carry the pattern's original types).
/// Most recently discovered bindings come first; identities are omitted.
struct MatchResult {
    TermSubst terms;
    TypeSubst types;
};

/// Fails with token "term_match".
MatchResult term_match(Term const & pattern, Term const & object);
/// Fails with token "form_match".
MatchResult form_match(Formula const & pattern, Formula const & object);

/// Applies a match result: the instance it describes.
Term instantiate(Term const & pattern, MatchResult const & m);
Formula instantiate(Formula const & pattern, MatchResult const & m);

using TermPart = std::function<Term(Formula const &)>;
using FormPart = std::function<Formula(Formula const &)>;

/// Strips the outer universal quantifiers of a theorem by specialising
/// them to their own bound variables (renamed if free in the hypotheses).
Theorem SPEC_ALL(Theorem const & th);

/// The part is selected once, from the stripped conclusion; each call
/// then matches a term against it and instantiates the theorem.
std::function<Theorem(Term const &)> PART_TMATCH(TermPart const & part, Theorem const & th);
std::function<Theorem(Formula const &)> PART_FMATCH(FormPart const & part, Theorem const & th);

/// Modus ponens with the antecedent found by matching.
std::function<Theorem(Theorem const &)> MATCH_MP(Theorem const & impth);

} // namespace convkit
