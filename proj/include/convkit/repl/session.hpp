/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>
#include "convkit/kernel/theory.hpp"
#include "convkit/repl/value.hpp"

namespace convkit {

struct SessionOptions {
    bool trace = false;       // print IMP_SEARCH_TAC search trees
    long max_steps = -1;      // per-command step budget; negative = none
    bool audit = false;       // replay every displayed theorem
    bool trust_store = false; // accept theory-file theorems without re-proof
};

/// Raised for malformed commands and theory files (not recoverable by
/// strategy alternation, unlike Failure).
class CommandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One interactive session: bindings, loaded theories and a proof state.
class Session {
public:
    explicit Session(SessionOptions opts = {});

    /// Executes one command line; returns the lines it prints.
    std::vector<std::string> eval(std::string const & line);

    /// Evaluates an expression of the command language.
    Value evaluate(std::string const & expr);

    Theory::Ptr load_theory(std::string const & path);
    void save_theory(std::string const & path) const;

    Theory::Ptr current() const { return m_current; }
    Theory::Ptr find_theory(std::string const & name) const;
    SessionOptions const & options() const { return m_opts; }

    std::optional<Value> binding(std::string const & name) const;
    void bind(std::string const & name, Value v);

    /// Lines printed by builtins during the current command (search traces).
    void emit(std::string line) { m_side.push_back(std::move(line)); }

private:
    std::vector<std::string> command(std::string const & line);
    std::vector<std::string> show(std::string const & name, Value const & v);
    std::vector<std::string> show_goals() const;
    Goal read_goal(std::string const & text);
    void check_audit(Value const & v) const;

    SessionOptions m_opts;
    Theory::Ptr m_current;
    std::map<std::string, Theory::Ptr> m_theories;
    std::map<std::string, std::string> m_sources; // theory name -> file, for parents
    std::map<std::string, std::string> m_methods; // theorem label -> "by ..." text
    std::map<std::string, Value> m_bindings;
    std::unique_ptr<ProofState> m_proof;
    std::vector<std::string> m_side;
};

struct ScriptResult {
    bool ok = true;
    std::vector<std::string> transcript;
    std::vector<std::string> failures; // one diff per failed expectation
};

/// Runs a script of commands with `expect:` assertions and `--` comments.
ScriptResult run_script(std::istream & in, Session & s);

/// The text of a value as the REPL shows it (without the name).
std::vector<std::string> show_value(Value const & v);

} // namespace convkit
