/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "convkit/repl/value.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit {

namespace {

template <class... F>
struct overload : F... {
    using F::operator()...;
};
template <class... F>
overload(F...) -> overload<F...>;

std::string quote(std::string const & s) { return "\"" + s + "\""; }

std::string inline_value(Value const & v) {
    auto lines = print_value(v);
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) out += (i ? " " : "") + lines[i];
    return out;
}

} // namespace

std::string type_name(Value const & v) {
    return std::visit(overload{
                          [](std::monostate) -> std::string { return "void"; },
                          [](long) -> std::string { return "int"; },
                          [](Label const &) -> std::string { return "tok"; },
                          [](Type const &) -> std::string { return "type"; },
                          [](Term const &) -> std::string { return "term"; },
                          [](Formula const &) -> std::string { return "form"; },
                          [](Theorem const &) -> std::string { return "thm"; },
                          [](List const & l) -> std::string {
                              return (l.empty() ? std::string("*") : type_name(l.front())) + " list";
                          },
                          [](Tuple const & t) -> std::string {
                              std::string s;
                              for (std::size_t i = 0; i < t.items.size(); ++i)
                                  s += (i ? " # " : "") + type_name(t.items[i]);
                              return "(" + s + ")";
                          },
                          [](MatchResult const &) -> std::string {
                              return "((term # term) list # (type # type) list)";
                          },
                          [](Conv const &) -> std::string { return "conv"; },
                          [](FConv const &) -> std::string { return "fconv"; },
                          [](Tactic const &) -> std::string { return "tactic"; },
                          [](Func const &) -> std::string { return "fn"; },
                      },
                      v.data);
}

std::vector<std::string> print_value(Value const & v) {
    return std::visit(
        overload{
            [](std::monostate) -> std::vector<std::string> { return {"()"}; },
            [](long n) -> std::vector<std::string> { return {std::to_string(n)}; },
            [](Label const & l) -> std::vector<std::string> { return {"'" + l.text + "'"}; },
            [](Type const & t) -> std::vector<std::string> { return {quote(":" + print_type(t))}; },
            [](Term const & t) -> std::vector<std::string> { return {quote(print_term(t))}; },
            [](Formula const & f) -> std::vector<std::string> { return {quote(print_form(f))}; },
            [](Theorem const & th) -> std::vector<std::string> { return {quote(print_theorem(th))}; },
            [](List const & l) -> std::vector<std::string> {
                std::string s = "[";
                for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "; " : "") + inline_value(l[i]);
                return {s + "]"};
            },
            [](Tuple const & t) -> std::vector<std::string> {
                std::string s = "(";
                for (std::size_t i = 0; i < t.items.size(); ++i) s += (i ? ", " : "") + inline_value(t.items[i]);
                return {s + ")"};
            },
            [](MatchResult const & m) -> std::vector<std::string> {
                std::string terms = "[";
                for (std::size_t i = 0; i < m.terms.size(); ++i)
                    terms += (i ? "; " : "") + quote(print_term(m.terms[i].first)) + "," +
                             quote(print_term(m.terms[i].second));
                std::string types = "[";
                for (std::size_t i = 0; i < m.types.size(); ++i)
                    types += (i ? "; " : "") + quote(":" + print_type(m.types[i].first)) + "," +
                             quote(":" + print_type(m.types[i].second));
                return {terms + "],", types + "]"};
            },
            [](auto const &) -> std::vector<std::string> { return {"-"}; },
        },
        v.data);
}

} // namespace convkit
