/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
// Command-line front end: interactive REPL, script runner, theory checker.
#include <fstream>
#include <iostream>
#include "CLI11.hpp"
#include "convkit/repl/session.hpp"

using namespace convkit;

namespace {

struct Common {
    std::vector<std::string> theories;
    SessionOptions opts;
};

void add_common(CLI::App * cmd, Common & c) {
    cmd->add_option("--theory", c.theories, "load a theory file first (repeatable)");
    cmd->add_flag("--trace", c.opts.trace, "print backward-chaining search trees");
    cmd->add_option("--max-steps", c.opts.max_steps, "rule-application budget per command (negative: none)");
    cmd->add_flag("--audit", c.opts.audit, "replay every displayed theorem through the kernel");
    cmd->add_flag("--trust-store", c.opts.trust_store, "accept stored theorems without re-proof");
}

bool preload(Session & s, Common const & c) {
    for (auto const & f : c.theories) {
        try {
            s.load_theory(f);
        } catch (std::exception const & e) {
            std::cerr << e.what() << "\n";
            return false;
        }
    }
    return true;
}

int repl(Common const & c) {
    Session s(c.opts);
    if (!preload(s, c)) return 1;
    for (std::string line;;) {
        std::cout << "#" << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line == "quit" || line == "quit;;") break;
        for (auto const & out : s.eval(line)) std::cout << out << "\n";
    }
    std::cout << "\n";
    return 0;
}

int run(Common const & c, std::string const & script, bool show) {
    std::ifstream in(script);
    if (!in) {
        std::cerr << "cannot open " << script << "\n";
        return 2;
    }
    Session s(c.opts);
    if (!preload(s, c)) return 1;
    ScriptResult r = run_script(in, s);
    if (show)
        for (auto const & l : r.transcript) std::cout << l << "\n";
    for (auto const & f : r.failures) std::cerr << script << ": " << f << "\n";
    return r.ok ? 0 : 1;
}

int check_theory(Common const & c, std::string const & file) {
    Session s(c.opts);
    try {
        auto thy = s.load_theory(file);
        std::cout << "theory " << thy->name() << ": " << thy->local_constants().size() << " constants, "
                  << thy->local_predicates().size() << " predicates, " << thy->local_axioms().size() << " axioms, "
                  << thy->local_theorems().size() << " theorems\n";
    } catch (std::exception const & e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char ** argv) {
    CLI::App app{"convkit: an LCF-style equational rewriting engine"};
    app.require_subcommand(1);

    Common c;
    c.opts.max_steps = 100000;

    auto * repl_cmd = app.add_subcommand("repl", "interactive session");
    add_common(repl_cmd, c);

    std::string script;
    bool show = false;
    auto * run_cmd = app.add_subcommand("run", "run a script with expect: assertions");
    run_cmd->add_option("script", script, "script file")->required();
    run_cmd->add_flag("--transcript", show, "print the session transcript");
    add_common(run_cmd, c);

    std::string file;
    auto * check_cmd = app.add_subcommand("check-theory", "load and re-verify a theory file");
    check_cmd->add_option("file", file, "theory file")->required();
    add_common(check_cmd, c);

    CLI11_PARSE(app, argc, argv);

    if (*repl_cmd) return repl(c);
    if (*run_cmd) return run(c, script, show);
    return check_theory(c, file);
}
