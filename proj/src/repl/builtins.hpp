/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <optional>
#include <string>
#include "convkit/repl/session.hpp"

namespace convkit::repl {

/// The builtin named `name`, if any.
std::optional<Value> builtin(std::string const & name);

/// Names usable as infix operators: `a THENC b`.
bool is_infix(std::string const & name);

/// Function application in the command language.
Value apply(Session & s, Value const & f, Value const & arg);

} // namespace convkit::repl
