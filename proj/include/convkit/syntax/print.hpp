/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <string>
#include "convkit/syntax/syntax.hpp"

namespace convkit {

/// `tr # tr`, `* -> **`; without the leading colon.
std::string print_type(Type const & ty);
std::string print_term(Term const & t);
std::string print_form(Formula const & f);

} // namespace convkit
