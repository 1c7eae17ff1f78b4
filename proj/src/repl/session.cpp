/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/repl/session.hpp"
#include <istream>
#include <sstream>
#include "convkit/conv/conv.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit {

namespace {

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_lines(std::string const & s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

bool is_ident(std::string const & s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

// `word rest` -> {word, rest}
std::pair<std::string, std::string> head_word(std::string const & s) {
    auto i = s.find_first_of(" \t");
    if (i == std::string::npos) return {s, ""};
    return {s.substr(0, i), trim(s.substr(i))};
}

// Binding patterns of `let`: `x`, `[a; b]` or `a, b`.
std::vector<std::string> let_names(std::string pat, bool & is_list) {
    is_list = false;
    if (!pat.empty() && pat.front() == '[' && pat.back() == ']') {
        is_list = true;
        pat = pat.substr(1, pat.size() - 2);
    }
    std::vector<std::string> names;
    std::string cur;
    for (char c : pat + (is_list ? ";" : ",")) {
        if (c == (is_list ? ';' : ',')) {
            names.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    for (auto const & n : names)
        if (!is_ident(n)) throw CommandError("bad binding pattern '" + pat + "'");
    return names;
}

void collect_theorems(Value const & v, std::vector<Theorem> & out) {
    if (v.is<Theorem>()) out.push_back(v.as<Theorem>());
    if (v.is<List>())
        for (auto const & x : v.as<List>()) collect_theorems(x, out);
    if (v.is<Tuple>())
        for (auto const & x : v.as<Tuple>().items) collect_theorems(x, out);
}

} // namespace

Session::Session(SessionOptions opts) : m_opts(opts), m_current(Theory::pplambda()) {
    m_theories[m_current->name()] = m_current;
    if (m_opts.audit) set_audit(true);
}

Theory::Ptr Session::find_theory(std::string const & name) const {
    auto it = m_theories.find(name);
    if (it != m_theories.end()) return it->second;
    return m_current->find_theory(name);
}

std::optional<Value> Session::binding(std::string const & name) const {
    auto it = m_bindings.find(name);
    if (it == m_bindings.end()) return std::nullopt;
    return it->second;
}

void Session::bind(std::string const & name, Value v) { m_bindings[name] = std::move(v); }

std::vector<std::string> show_value(Value const & v) {
    auto lines = print_value(v);
    if (lines.size() == 1) return {lines.front() + " : " + type_name(v)};
    lines.push_back(": " + type_name(v));
    return lines;
}

std::vector<std::string> Session::show(std::string const & name, Value const & v) {
    check_audit(v);
    auto lines = print_value(v);
    if (lines.size() == 1) return {name + " = " + lines.front() + " : " + type_name(v)};
    std::vector<std::string> out{name + " ="};
    out.insert(out.end(), lines.begin(), lines.end());
    out.push_back(": " + type_name(v));
    return out;
}

void Session::check_audit(Value const & v) const {
    if (!m_opts.audit) return;
    std::vector<Theorem> ths;
    collect_theorems(v, ths);
    for (auto const & th : ths) replay(th);
}

std::vector<std::string> Session::show_goals() const {
    std::vector<std::string> out;
    if (!m_proof) return {"no goal"};
    auto goals = m_proof->pending();
    if (goals.empty()) {
        Theorem th = m_proof->result();
        check_audit(th);
        out.push_back("goal proved");
        out.push_back(show_value(th).front());
        return out;
    }
    if (goals.size() > 1) out.push_back(std::to_string(goals.size()) + " subgoals");
    for (std::size_t i = 0; i < goals.size(); ++i) {
        if (i) out.push_back("");
        for (auto const & l : split_lines(print_goal(goals[i]))) out.push_back(l);
    }
    return out;
}

// `"t"` or `("t", ["a1"; ...])`. When the argument is written with literal
// quotations they are typed together, so that a variable has the same type
// in the target and in the assumptions.
Goal Session::read_goal(std::string const & text) {
    std::vector<std::string> quotes;
    std::string skeleton;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '"') {
            skeleton += text[i];
            continue;
        }
        auto j = text.find('"', i + 1);
        if (j == std::string::npos) throw CommandError("unterminated quotation");
        quotes.push_back(text.substr(i + 1, j - i - 1));
        i = j;
    }
    if (!quotes.empty() && skeleton.find_first_not_of("()[];, \t") == std::string::npos) {
        ParseOptions opts;
        opts.antiquote = [this](std::string const & n) -> std::optional<Antiquote> {
            auto v = binding(n);
            if (v && v->is<Term>()) return v->as<Term>();
            if (v && v->is<Formula>()) return v->as<Formula>();
            return std::nullopt;
        };
        auto fs = parse_forms(quotes, *m_current, opts);
        return Goal{std::vector<Formula>(fs.begin() + 1, fs.end()), fs.front()};
    }
    Value v = evaluate(text);
    if (v.is<Formula>()) return Goal{{}, v.as<Formula>()};
    if (v.is<Tuple>() && v.as<Tuple>().items.size() == 2 && v.as<Tuple>().items[0].is<Formula>() &&
        v.as<Tuple>().items[1].is<List>()) {
        Goal g{{}, v.as<Tuple>().items[0].as<Formula>()};
        for (auto const & a : v.as<Tuple>().items[1].as<List>()) {
            if (!a.is<Formula>()) throw CommandError("goal: assumptions must be formulas");
            g.assumptions.push_back(a.as<Formula>());
        }
        return g;
    }
    throw CommandError("goal: expected a formula or (formula, [formulas])");
}

std::vector<std::string> Session::eval(std::string const & raw) {
    std::string line = trim(raw);
    if (!line.empty() && line.front() == '#') line = trim(line.substr(1));
    if (line.size() >= 2 && line.compare(line.size() - 2, 2, ";;") == 0) line = trim(line.substr(0, line.size() - 2));
    if (line.empty() || line.rfind("--", 0) == 0) return {};
    m_side.clear();
    std::vector<std::string> out;
    try {
        std::optional<StepBudget> budget;
        if (m_opts.max_steps >= 0) budget.emplace(m_opts.max_steps);
        out = command(line);
    } catch (StepLimitExceeded const & e) {
        out = {std::string("evaluation failed ") + e.what()};
    } catch (Failure const & e) {
        out = {"evaluation failed " + e.token()};
    } catch (CommandError const & e) {
        out = {std::string("error: ") + e.what()};
    }
    out.insert(out.begin(), m_side.begin(), m_side.end());
    m_side.clear();
    return out;
}

std::vector<std::string> Session::command(std::string const & line) {
    auto [word, rest] = head_word(line);
    if (word == "let") {
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw CommandError("let: missing '='");
        bool is_list = false;
        auto names = let_names(trim(rest.substr(0, eq)), is_list);
        Value v = evaluate(rest.substr(eq + 1));
        std::vector<Value> parts;
        if (names.size() == 1 && !is_list) {
            parts.push_back(v);
        } else if (is_list && v.is<List>()) {
            parts = v.as<List>();
        } else if (!is_list && v.is<Tuple>()) {
            parts = v.as<Tuple>().items;
        } else {
            throw CommandError("let: value does not match pattern");
        }
        if (parts.size() != names.size()) throw CommandError("let: wrong number of values");
        std::vector<std::string> out;
        for (std::size_t i = 0; i < names.size(); ++i) {
            bind(names[i], parts[i]);
            for (auto const & l : show(names[i], parts[i])) out.push_back(l);
        }
        return out;
    }
    if (word == "load") {
        auto thy = load_theory(rest);
        return {"theory " + thy->name() + " loaded"};
    }
    if (word == "new_theory") {
        if (!is_ident(rest)) throw CommandError("new_theory: bad name");
        m_current = std::make_shared<Theory>(rest, std::vector<Theory::Ptr>{m_current});
        m_theories[rest] = m_current;
        return {"theory " + rest + " created"};
    }
    if (word == "new_constant" || word == "new_infix" || word == "new_predicate") {
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw CommandError(word + ": expected NAME : TYPE");
        std::string name = trim(rest.substr(0, colon));
        Type ty = parse_type(rest.substr(colon + 1));
        if (word == "new_predicate")
            m_current->new_predicate(name, ty);
        else
            m_current->new_constant(name, ty, word == "new_infix");
        return {name + " declared"};
    }
    if (word == "new_axiom") {
        auto [label, expr] = head_word(rest);
        Value v = evaluate(expr);
        if (!v.is<Formula>()) throw CommandError("new_axiom: expected a formula");
        return show(label, m_current->new_axiom(label, v.as<Formula>()));
    }
    if (word == "save_theorem") {
        auto [label, expr] = head_word(rest);
        Value v = evaluate(expr);
        if (!v.is<Theorem>()) throw CommandError("save_theorem: expected a theorem");
        m_current->save_theorem(label, v.as<Theorem>());
        m_methods[label] = "by " + expr;
        return show(label, v);
    }
    if (word == "save_theory") {
        save_theory(rest);
        return {"theory " + m_current->name() + " saved"};
    }
    if (word == "goal") {
        m_proof = std::make_unique<ProofState>(read_goal(rest));
        return show_goals();
    }
    if (word == "expand") {
        if (!m_proof) throw CommandError("expand: no goal");
        Value v = evaluate(rest);
        if (!v.is<Tactic>()) throw CommandError("expand: expected a tactic");
        m_proof->expand(v.as<Tactic>());
        auto out = show_goals();
        out.insert(out.begin(), "OK..");
        return out;
    }
    if (word == "top" && rest.empty()) return show_goals();
    if (word == "backup" && rest.empty()) {
        if (!m_proof || !m_proof->backup()) throw CommandError("backup: nothing to undo");
        return show_goals();
    }
    if (word == "trace" && (rest == "on" || rest == "off")) {
        m_opts.trace = rest == "on";
        return {"trace " + rest};
    }
    Value v = evaluate(line);
    check_audit(v);
    return show_value(v);
}

ScriptResult run_script(std::istream & in, Session & s) {
    ScriptResult r;
    std::vector<std::string> pending; // output not yet matched by `expect:`
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.rfind("expect:", 0) == 0) {
            std::string want = t.substr(7);
            if (!want.empty() && want.front() == ' ') want.erase(0, 1);
            if (pending.empty()) {
                r.ok = false;
                r.failures.push_back("line " + std::to_string(lineno) + ": expected\n  " + want + "\nbut no output remained");
                continue;
            }
            std::string got = pending.front();
            pending.erase(pending.begin());
            if (got != want) {
                r.ok = false;
                r.failures.push_back("line " + std::to_string(lineno) + ":\n- " + want + "\n+ " + got);
            }
            continue;
        }
        if (t.empty() || t.rfind("--", 0) == 0) continue;
        pending.clear();
        r.transcript.push_back("# " + t);
        for (auto const & out : s.eval(t)) {
            r.transcript.push_back(out);
            pending.push_back(out);
        }
    }
    return r;
}

} // namespace convkit
