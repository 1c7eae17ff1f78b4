/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <stdexcept>
#include <string>

namespace convkit {

/// Recoverable failure carrying a token, in the style of ML's `failwith`.
/// Strategy combinators (ORELSEC, ORELSE, ...) trap exactly this type.
class Failure : public std::runtime_error {
public:
    explicit Failure(std::string token)
        : std::runtime_error(token), m_token(std::move(token)) {}
    Failure(std::string token, std::string const & detail)
        : std::runtime_error(token + ": " + detail), m_token(std::move(token)) {}

    std::string const & token() const { return m_token; }

private:
    std::string m_token;
};

[[noreturn]] inline void fail(std::string token) { throw Failure(std::move(token)); }

/// Raised when the rule-application budget of a single command runs out.
/// Deliberately not a Failure: alternation must not swallow it.
class StepLimitExceeded : public std::runtime_error {
public:
    explicit StepLimitExceeded(long limit)
        : std::runtime_error("step limit exceeded (" + std::to_string(limit) + " rule applications)") {}
};

} // namespace convkit
