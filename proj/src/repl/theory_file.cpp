/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
// Theory files: one directive per line, indented lines continue the
// previous one, `--` starts a comment.
//
//   theory list_fun
//   parent PPLAMBDA
//   constant NIL : lst
//   infix APP : lst -> lst -> lst
//   predicate P : * # **
//   axiom NIL_DEFINED : ~ NIL == UU
//   theorem T : !x. x == x
//     by GEN "x" (REFL "x")
#include <filesystem>
#include <fstream>
#include "convkit/repl/session.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit {

namespace {

namespace fs = std::filesystem;

struct Directive {
    std::size_t line;
    std::string word, name, body;      // `word name : body`
    std::vector<std::string> methods;  // continuation lines starting `by` / `proof`
};

std::string trim(std::string const & s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(std::string const & path, std::size_t line, std::string const & what) {
    throw CommandError(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<Directive> read_directives(std::string const & path) {
    std::ifstream in(path);
    if (!in) throw CommandError("cannot open " + path);
    std::vector<Directive> out;
    std::size_t n = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++n;
        std::string text = raw;
        if (auto c = text.find("--"); c != std::string::npos) text.erase(c);
        std::string t = trim(text);
        if (t.empty()) continue;
        bool cont = raw[0] == ' ' || raw[0] == '\t';
        if (cont) {
            if (out.empty()) bad(path, n, "continuation before any directive");
            if (t.rfind("by ", 0) == 0 || t.rfind("proof ", 0) == 0)
                out.back().methods.push_back(t);
            else if (!out.back().methods.empty())
                out.back().methods.back() += " " + t;
            else
                out.back().body += " " + t;
            continue;
        }
        Directive d{n, {}, {}, {}, {}};
        auto sp = t.find_first_of(" \t");
        d.word = t.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(t.substr(sp));
        auto colon = rest.find(':');
        if (colon == std::string::npos) {
            d.name = rest;
        } else {
            d.name = trim(rest.substr(0, colon));
            d.body = trim(rest.substr(colon + 1));
        }
        out.push_back(std::move(d));
    }
    return out;
}

// The file in `dir` declaring theory `name`, if any.
std::optional<std::string> locate(fs::path const & dir, std::string const & name) {
    std::error_code ec;
    for (auto const & e : fs::directory_iterator(dir, ec)) {
        if (e.path().extension() != ".thy") continue;
        std::ifstream in(e.path());
        for (std::string l; std::getline(in, l);) {
            std::string t = trim(l);
            if (t.empty() || t.rfind("--", 0) == 0) continue;
            if (t == "theory " + name) return e.path().string();
            break;
        }
    }
    return std::nullopt;
}

} // namespace

Theory::Ptr Session::load_theory(std::string const & path) {
    auto ds = read_directives(path);
    if (ds.empty() || ds.front().word != "theory") bad(path, 1, "expected 'theory NAME'");
    std::string name = ds.front().name;
    if (auto it = m_theories.find(name); it != m_theories.end()) {
        m_current = it->second;
        return m_current;
    }
    std::vector<Theory::Ptr> parents;
    std::size_t i = 1;
    for (; i < ds.size() && ds[i].word == "parent"; ++i) {
        Theory::Ptr p = find_theory(ds[i].name);
        if (!p) {
            auto file = locate(fs::path(path).parent_path().empty() ? fs::path(".") : fs::path(path).parent_path(),
                               ds[i].name);
            if (!file) bad(path, ds[i].line, "unknown parent theory " + ds[i].name);
            p = load_theory(*file);
        }
        parents.push_back(p);
    }
    if (parents.empty()) parents.push_back(Theory::pplambda());

    auto thy = std::make_shared<Theory>(name, parents);
    Theory::Ptr saved = m_current;
    m_current = thy;
    try {
        for (; i < ds.size(); ++i) {
            Directive const & d = ds[i];
            try {
                if (d.word == "constant" || d.word == "infix") {
                    thy->new_constant(d.name, parse_type(d.body), d.word == "infix");
                } else if (d.word == "predicate") {
                    thy->new_predicate(d.name, parse_type(d.body));
                } else if (d.word == "axiom") {
                    thy->new_axiom(d.name, parse_form(d.body, *thy));
                } else if (d.word == "theorem") {
                    Formula f = parse_form(d.body, *thy);
                    if (m_opts.trust_store) {
                        thy->assert_theorem(d.name, f);
                    } else {
                        if (d.methods.empty()) bad(path, d.line, "theorem " + d.name + " has no proof");
                        std::string const & m = d.methods.front();
                        Theorem th = [&] {
                            if (m.rfind("proof ", 0) == 0) {
                                Value v = evaluate(m.substr(6));
                                if (!v.is<Tactic>()) bad(path, d.line, "proof of " + d.name + " is not a tactic");
                                return prove(Goal{{}, f}, v.as<Tactic>());
                            }
                            Value v = evaluate(m.substr(3));
                            if (!v.is<Theorem>()) bad(path, d.line, d.name + " is not proved by a theorem");
                            return v.as<Theorem>();
                        }();
                        if (!th.hyps().empty() || !alpha_eq(th.concl(), f))
                            bad(path, d.line, "proof of " + d.name + " proves " + print_theorem(th));
                        thy->save_theorem(d.name, th);
                    }
                    if (!d.methods.empty()) m_methods[d.name] = d.methods.front();
                } else {
                    bad(path, d.line, "unknown directive '" + d.word + "'");
                }
            } catch (Failure const & e) {
                bad(path, d.line, std::string("evaluation failed ") + e.what());
            }
        }
    } catch (...) {
        m_current = saved;
        throw;
    }
    m_theories[name] = thy;
    m_sources[name] = path;
    return thy;
}

void Session::save_theory(std::string const & path) const {
    std::ofstream out(path);
    if (!out) throw CommandError("cannot write " + path);
    Theory const & thy = *m_current;
    out << "theory " << thy.name() << "\n";
    for (auto const & p : thy.parents()) out << "parent " << p->name() << "\n";
    for (auto const & [n, c] : thy.local_constants())
        out << (c.infix ? "infix " : "constant ") << n << " : " << print_type(c.type) << "\n";
    for (auto const & [n, ty] : thy.local_predicates()) out << "predicate " << n << " : " << print_type(ty) << "\n";
    for (auto const & [n, th] : thy.local_axioms()) out << "axiom " << n << " : " << print_form(th.concl()) << "\n";
    for (auto const & [n, th] : thy.local_theorems()) {
        out << "theorem " << n << " : " << print_form(th.concl()) << "\n";
        if (auto it = m_methods.find(n); it != m_methods.end()) out << "  " << it->second << "\n";
    }
}

} // namespace convkit
