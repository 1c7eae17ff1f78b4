/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <functional>
#include <string>
#include <variant>
#include <vector>
#include "convkit/matching/match.hpp"
#include "convkit/tactic/tactic.hpp"

namespace convkit {

class Session;
struct Value;

using List = std::vector<Value>;

/// `'text'` in the command language: theory and theorem labels.
struct Label {
    std::string text;
};

/// A parenthesised, comma-separated argument group `(a, b)`.
struct Tuple {
    std::vector<Value> items;
};

/// A builtin, possibly partially applied.
struct Func {
    std::string name;
    std::size_t arity;
    std::vector<Value> args;
    std::function<Value(Session &, std::vector<Value> const &)> impl;
};

struct Value {
    using Data = std::variant<std::monostate, long, Label, Type, Term, Formula, Theorem, List, Tuple, MatchResult, Conv,
                              FConv, Tactic, Func>;
    Data data;

    Value() = default;
    template <class T>
    Value(T x) : data(std::move(x)) {}

    template <class T>
    bool is() const {
        return std::holds_alternative<T>(data);
    }
    template <class T>
    T const & as() const {
        return std::get<T>(data);
    }
};

/// ML-style type of a value: `term`, `thm list`, `conv`, ...
std::string type_name(Value const & v);

/// The printed value, possibly over several lines.
std::vector<std::string> print_value(Value const & v);

} // namespace convkit
