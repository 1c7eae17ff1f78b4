/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>
#include "convkit/syntax/syntax.hpp"

namespace convkit {

struct ConstInfo {
    Type type;
    bool infix = false;
};

/// What the parser needs to know about declared symbols. Identifiers that
/// are neither constants nor predicates parse as variables.
class Signature {
public:
    virtual ~Signature() = default;
    virtual std::optional<ConstInfo> constant(std::string const & name) const = 0;
    virtual std::optional<Type> predicate(std::string const & name) const = 0;
};

/// The PPLAMBDA constants and predicates every theory starts from.
Signature const & builtin_signature();

class ParseError : public Failure {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected = {});

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }
    std::vector<std::string> const & expected() const { return m_expected; }

private:
    std::size_t m_line, m_column;
    std::vector<std::string> m_expected;
};

/// Resolves `^name` antiquotations.
using Antiquote = std::variant<Term, Formula>;
using AntiquoteFn = std::function<std::optional<Antiquote>(std::string const &)>;

struct ParseOptions {
    AntiquoteFn antiquote;
};

Type parse_type(std::string_view text);
Term parse_term(std::string_view text, Signature const & sig, ParseOptions const & opts = {});
Formula parse_form(std::string_view text, Signature const & sig, ParseOptions const & opts = {});

/// Parses several formulas in one typing scope: a free variable name
/// denotes the same variable (and type) in all of them.
std::vector<Formula> parse_forms(std::vector<std::string> const & texts, Signature const & sig,
                                 ParseOptions const & opts = {});

/// Parses a term if the text is a term, otherwise a formula.
std::variant<Term, Formula> parse_quotation(std::string_view text, Signature const & sig,
                                            ParseOptions const & opts = {});

} // namespace convkit
