/*
Copyright (c) 2026 convkit contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "builtins.hpp"
#include <map>
#include <memory>
#include "convkit/kernel/derived.hpp"
#include "convkit/syntax/print.hpp"

namespace convkit::repl {

namespace {

using Args = std::vector<Value>;
using Impl = std::function<Value(Session &, Args const &)>;

[[noreturn]] void type_error(char const * want, Value const & got) {
    throw CommandError("type error: expected " + std::string(want) + ", got " + type_name(got));
}

Term term_of(Value const & v) {
    if (v.is<Term>()) return v.as<Term>();
    type_error("term", v);
}

Formula form_of(Value const & v) {
    if (v.is<Formula>()) return v.as<Formula>();
    type_error("form", v);
}

Theorem thm_of(Session & s, Value const & v) {
    if (v.is<Theorem>()) return v.as<Theorem>();
    if (v.is<Label>()) return s.current()->theorem(v.as<Label>().text);
    type_error("thm", v);
}

std::string label_of(Value const & v) {
    if (v.is<Label>()) return v.as<Label>().text;
    type_error("tok", v);
}

Conv conv_of(Value const & v) {
    if (v.is<Conv>()) return v.as<Conv>();
    type_error("conv", v);
}

FConv fconv_of(Value const & v) {
    if (v.is<FConv>()) return v.as<FConv>();
    type_error("fconv", v);
}

Tactic tactic_of(Value const & v) {
    if (v.is<Tactic>()) return v.as<Tactic>();
    type_error("tactic", v);
}

List list_of(Value const & v) {
    if (v.is<List>()) return v.as<List>();
    type_error("list", v);
}

std::vector<Theorem> thms_of(Session & s, Value const & v) {
    std::vector<Theorem> out;
    for (auto const & x : list_of(v)) out.push_back(thm_of(s, x));
    return out;
}

template <class T, class F>
std::vector<T> each(Value const & v, F f) {
    std::vector<T> out;
    for (auto const & x : list_of(v)) out.push_back(f(x));
    return out;
}

List thm_list(std::vector<Theorem> const & ths) { return List(ths.begin(), ths.end()); }

void print_tree(Session & s, SearchNode const & n, int depth) {
    s.emit(std::string(2 * static_cast<std::size_t>(depth), ' ') + print_form(n.goal) + "   by " + n.by);
    for (auto const & c : n.children) print_tree(s, c, depth + 1);
}

Tactic search_tac(Session & s, std::vector<Theorem> thms) {
    if (!s.options().trace) return IMP_SEARCH_TAC(std::move(thms));
    auto node = std::make_shared<SearchNode>(SearchNode{mk_truth(), {}, {}});
    Tactic inner = IMP_SEARCH_TAC(std::move(thms), SearchOptions{50, node.get()});
    Session * sp = &s;
    return [inner, node, sp](Goal const & g) {
        TacticResult r = inner(g);
        print_tree(*sp, *node, 0);
        return r;
    };
}

struct Table {
    std::map<std::string, Value> entries;

    void fn(std::string const & name, std::size_t arity, Impl impl) {
        entries[name] = Value(Func{name, arity, {}, std::move(impl)});
    }
    void val(std::string const & name, Value v) { entries[name] = std::move(v); }
    void alias(std::string const & name, std::string const & target) {
        Value v = entries.at(target);
        if (v.is<Func>()) {
            Func f = v.as<Func>();
            f.name = name;
            v = Value(f);
        }
        entries[name] = v;
    }
};

// Conversion operators that also work on formula conversions, picking the
// right one from their arguments.
Value first_of(Value const & l) {
    List xs = list_of(l);
    if (!xs.empty() && xs.front().is<FConv>()) return FIRST_FCONV(each<FConv>(l, fconv_of));
    return FIRST_CONV(each<Conv>(l, conv_of));
}

Table make_table() {
    Table t;
    // matching
    t.fn("term_match", 2, [](Session &, Args const & a) { return term_match(term_of(a[0]), term_of(a[1])); });
    t.fn("form_match", 2, [](Session &, Args const & a) { return form_match(form_of(a[0]), form_of(a[1])); });
    t.fn("match", 2, [](Session &, Args const & a) -> Value {
        if (a[0].is<Term>()) return term_match(term_of(a[0]), term_of(a[1]));
        return form_match(form_of(a[0]), form_of(a[1]));
    });

    // theorems
    t.fn("ASSUME", 1, [](Session &, Args const & a) { return ASSUME(form_of(a[0])); });
    t.fn("REFL", 1, [](Session &, Args const & a) { return REFL(term_of(a[0])); });
    t.fn("SYM", 1, [](Session & s, Args const & a) { return SYM(thm_of(s, a[0])); });
    t.fn("TRANS", 2, [](Session & s, Args const & a) { return TRANS(thm_of(s, a[0]), thm_of(s, a[1])); });
    t.fn("MP", 2, [](Session & s, Args const & a) { return MP(thm_of(s, a[0]), thm_of(s, a[1])); });
    t.fn("DISCH", 2, [](Session & s, Args const & a) { return DISCH(form_of(a[0]), thm_of(s, a[1])); });
    t.fn("GEN", 2, [](Session & s, Args const & a) { return GEN(term_of(a[0]), thm_of(s, a[1])); });
    t.fn("SPEC", 2, [](Session & s, Args const & a) { return SPEC(term_of(a[0]), thm_of(s, a[1])); });
    t.fn("SPEC_ALL", 1, [](Session & s, Args const & a) { return SPEC_ALL(thm_of(s, a[0])); });
    t.fn("CONJ", 2, [](Session & s, Args const & a) { return CONJ(thm_of(s, a[0]), thm_of(s, a[1])); });
    t.fn("CONJUNCT1", 1, [](Session & s, Args const & a) { return CONJUNCT1(thm_of(s, a[0])); });
    t.fn("CONJUNCT2", 1, [](Session & s, Args const & a) { return CONJUNCT2(thm_of(s, a[0])); });
    t.fn("MATCH_MP", 2, [](Session & s, Args const & a) { return MATCH_MP(thm_of(s, a[0]))(thm_of(s, a[1])); });
    t.fn("concl", 1, [](Session & s, Args const & a) { return thm_of(s, a[0]).concl(); });
    t.fn("hyp", 1, [](Session & s, Args const & a) {
        auto const & hs = thm_of(s, a[0]).hyps();
        return List(hs.begin(), hs.end());
    });
    auto lookup = [](bool axioms) {
        return [axioms](Session & s, Args const & a) -> Value {
            Theory::Ptr thy = s.find_theory(label_of(a[0]));
            if (!thy) throw Failure("theory", label_of(a[0]));
            return axioms ? thy->axiom(label_of(a[1])) : thy->theorem(label_of(a[1]));
        };
    };
    t.fn("axiom", 2, lookup(true));
    t.fn("theorem", 2, lookup(false));
    t.fn("IMP_CANON", 1, [](Session & s, Args const & a) { return thm_list(IMP_CANON(thm_of(s, a[0]))); });
    t.fn("FCONV_CANON", 1, [](Session & s, Args const & a) { return FCONV_CANON(thm_of(s, a[0])); });
    t.fn("replay", 1, [](Session & s, Args const & a) {
        Theorem th = thm_of(s, a[0]);
        replay(th);
        return th;
    });
    t.fn("prove", 2, [](Session &, Args const & a) { return prove(Goal{{}, form_of(a[0])}, tactic_of(a[1])); });
    t.fn("map", 2, [](Session & s, Args const & a) {
        List out;
        for (auto const & x : list_of(a[1])) out.push_back(apply(s, a[0], x));
        return out;
    });

    // term conversions
    t.val("BETA_CONV", Conv(BETA_CONV));
    t.val("ALL_CONV", Conv(ALL_CONV));
    t.val("NO_CONV", Conv(NO_CONV));
    t.fn("REWRITE_CONV", 1, [](Session & s, Args const & a) { return REWRITE_CONV(thm_of(s, a[0])); });
    t.fn("THENC", 2, [](Session &, Args const & a) -> Value {
        if (a[0].is<FConv>()) return THENFC(fconv_of(a[0]), fconv_of(a[1]));
        return THENC(conv_of(a[0]), conv_of(a[1]));
    });
    t.fn("ORELSEC", 2, [](Session &, Args const & a) -> Value {
        if (a[0].is<FConv>()) return ORELSEFC(fconv_of(a[0]), fconv_of(a[1]));
        return ORELSEC(conv_of(a[0]), conv_of(a[1]));
    });
    t.fn("FIRST_CONV", 1, [](Session &, Args const & a) { return first_of(a[0]); });
    t.fn("EVERY_CONV", 1, [](Session &, Args const & a) { return EVERY_CONV(each<Conv>(a[0], conv_of)); });
    t.fn("REPEATC", 1, [](Session &, Args const & a) -> Value {
        if (a[0].is<FConv>()) return REPEATFC(fconv_of(a[0]));
        return REPEATC(conv_of(a[0]));
    });
    t.fn("TRY_CONV", 1, [](Session &, Args const & a) { return TRY_CONV(conv_of(a[0])); });
    t.fn("SUB_CONV", 1, [](Session &, Args const & a) { return SUB_CONV(conv_of(a[0])); });
    t.fn("COMB_CONV", 1, [](Session &, Args const & a) { return COMB_CONV(conv_of(a[0])); });
    t.fn("ABS_CONV", 1, [](Session &, Args const & a) { return ABS_CONV(conv_of(a[0])); });
    t.fn("DEPTH_CONV", 1, [](Session &, Args const & a) { return DEPTH_CONV(conv_of(a[0])); });
    t.fn("REDEPTH_CONV", 1, [](Session &, Args const & a) { return REDEPTH_CONV(conv_of(a[0])); });
    t.fn("TOP_DEPTH_CONV", 1, [](Session &, Args const & a) { return TOP_DEPTH_CONV(conv_of(a[0])); });
    t.fn("IMP_REW_CONV", 2,
         [](Session & s, Args const & a) { return IMP_REW_CONV(tactic_of(a[0]), thm_of(s, a[1])); });

    // formula conversions
    t.val("ALL_FCONV", FConv(ALL_FCONV));
    t.val("NO_FCONV", FConv(NO_FCONV));
    t.fn("REWRITE_FCONV", 1, [](Session & s, Args const & a) { return REWRITE_FCONV(thm_of(s, a[0])); });
    t.fn("THENFC", 2, [](Session &, Args const & a) { return THENFC(fconv_of(a[0]), fconv_of(a[1])); });
    t.fn("ORELSEFC", 2, [](Session &, Args const & a) { return ORELSEFC(fconv_of(a[0]), fconv_of(a[1])); });
    t.fn("FIRST_FCONV", 1, [](Session &, Args const & a) { return FIRST_FCONV(each<FConv>(a[0], fconv_of)); });
    t.fn("REPEATFC", 1, [](Session &, Args const & a) { return REPEATFC(fconv_of(a[0])); });
    t.fn("PRED_FCONV", 1, [](Session &, Args const & a) { return PRED_FCONV(conv_of(a[0])); });
    t.fn("CONJ_FCONV", 1, [](Session &, Args const & a) { return CONJ_FCONV(fconv_of(a[0])); });
    t.fn("DISJ_FCONV", 1, [](Session &, Args const & a) { return DISJ_FCONV(fconv_of(a[0])); });
    t.fn("IMP_FCONV", 1, [](Session &, Args const & a) { return IMP_FCONV(fconv_of(a[0])); });
    t.fn("IFF_FCONV", 1, [](Session &, Args const & a) { return IFF_FCONV(fconv_of(a[0])); });
    t.fn("FORALL_FCONV", 1, [](Session &, Args const & a) { return FORALL_FCONV(fconv_of(a[0])); });
    t.fn("EXISTS_FCONV", 1, [](Session &, Args const & a) { return EXISTS_FCONV(fconv_of(a[0])); });
    t.fn("SUB_FCONV", 2, [](Session &, Args const & a) { return SUB_FCONV(conv_of(a[0]), fconv_of(a[1])); });
    t.fn("DEPTH_FCONV", 2, [](Session &, Args const & a) { return DEPTH_FCONV(conv_of(a[0]), fconv_of(a[1])); });
    t.fn("REDEPTH_FCONV", 2,
         [](Session &, Args const & a) { return REDEPTH_FCONV(conv_of(a[0]), fconv_of(a[1])); });
    t.fn("TOP_DEPTH_FCONV", 2,
         [](Session &, Args const & a) { return TOP_DEPTH_FCONV(conv_of(a[0]), fconv_of(a[1])); });
    t.val("TAUT_CONJ_FCONV", FConv(TAUT_CONJ_FCONV));
    t.val("TAUT_DISJ_FCONV", FConv(TAUT_DISJ_FCONV));
    t.val("TAUT_IMP_FCONV", FConv(TAUT_IMP_FCONV));
    t.val("TAUT_IFF_FCONV", FConv(TAUT_IFF_FCONV));
    t.val("TAUT_FORALL_FCONV", FConv(TAUT_FORALL_FCONV));
    t.val("TAUT_EXISTS_FCONV", FConv(TAUT_EXISTS_FCONV));
    t.val("TAUT_PRED_FCONV", FConv(TAUT_PRED_FCONV));
    t.val("BASIC_TAUT_FCONV", FConv(BASIC_TAUT_FCONV));
    t.fn("BASIC_FCONV", 2, [](Session &, Args const & a) { return BASIC_FCONV(conv_of(a[0]), fconv_of(a[1])); });
    t.fn("IMP_REW_FCONV", 2,
         [](Session & s, Args const & a) { return IMP_REW_FCONV(tactic_of(a[0]), thm_of(s, a[1])); });

    // tactics
    t.val("ALL_TAC", Tactic(ALL_TAC));
    t.val("NO_TAC", Tactic(NO_TAC));
    t.fn("THEN", 2, [](Session &, Args const & a) { return THEN(tactic_of(a[0]), tactic_of(a[1])); });
    t.fn("ORELSE", 2, [](Session &, Args const & a) { return ORELSE(tactic_of(a[0]), tactic_of(a[1])); });
    t.fn("REPEAT", 1, [](Session &, Args const & a) { return REPEAT(tactic_of(a[0])); });
    t.fn("FCONV_TAC", 1, [](Session &, Args const & a) { return FCONV_TAC(fconv_of(a[0])); });
    t.fn("REWRITE_TAC", 1, [](Session & s, Args const & a) { return REWRITE_TAC(thms_of(s, a[0])); });
    t.fn("ASM_REWRITE_TAC", 1, [](Session & s, Args const & a) { return ASM_REWRITE_TAC(thms_of(s, a[0])); });
    t.fn("IMP_SEARCH_TAC", 1, [](Session & s, Args const & a) { return search_tac(s, thms_of(s, a[0])); });

    // short names
    t.alias("beta", "BETA_CONV");
    t.alias("all_conv", "ALL_CONV");
    t.alias("no_conv", "NO_CONV");
    t.alias("rw", "REWRITE_CONV");
    t.alias("frw", "REWRITE_FCONV");
    t.alias("first", "FIRST_CONV");
    t.alias("thenc", "THENC");
    t.alias("orelsec", "ORELSEC");
    t.alias("thenfc", "THENFC");
    t.alias("orelsefc", "ORELSEFC");
    t.alias("repeatc", "REPEATC");
    t.alias("depth", "DEPTH_CONV");
    t.alias("redepth", "REDEPTH_CONV");
    t.alias("top_depth", "TOP_DEPTH_CONV");
    t.alias("basic", "BASIC_FCONV");
    t.alias("all", "ALL_CONV");
    t.alias("no", "NO_CONV");
    t.alias("sub", "SUB_CONV");
    t.alias("topdepth", "TOP_DEPTH_CONV");
    t.alias("fall", "ALL_FCONV");
    t.alias("fno", "NO_FCONV");
    t.alias("ffirst", "FIRST_FCONV");
    t.alias("frepeat", "REPEATFC");
    t.alias("pred", "PRED_FCONV");
    t.alias("fdepth", "DEPTH_FCONV");
    t.alias("fredepth", "REDEPTH_FCONV");
    t.alias("ftopdepth", "TOP_DEPTH_FCONV");
    t.alias("taut", "BASIC_TAUT_FCONV");
    t.alias("fconv_tac", "FCONV_TAC");
    t.alias("rewrite_tac", "REWRITE_TAC");
    t.alias("asm_rewrite_tac", "ASM_REWRITE_TAC");
    t.alias("imp_search_tac", "IMP_SEARCH_TAC");
    t.alias("then", "THEN");
    t.alias("orelse", "ORELSE");
    t.alias("repeat", "REPEAT");
    t.alias("all_tac", "ALL_TAC");
    t.alias("no_tac", "NO_TAC");
    t.fn("conv", 2, [](Session &, Args const & a) { return conv_of(a[0])(term_of(a[1])); });
    t.fn("fconv", 2, [](Session &, Args const & a) { return fconv_of(a[0])(form_of(a[1])); });
    return t;
}

Table const & table() {
    static Table const t = make_table();
    return t;
}

} // namespace

std::optional<Value> builtin(std::string const & name) {
    auto const & e = table().entries;
    auto it = e.find(name);
    if (it == e.end()) return std::nullopt;
    return it->second;
}

bool is_infix(std::string const & name) {
    static char const * const ops[] = {"THENC", "ORELSEC", "THENFC", "ORELSEFC", "THEN", "ORELSE",
                                       "thenc", "orelsec", "thenfc", "orelsefc", "then", "orelse"};
    for (char const * op : ops)
        if (name == op) return true;
    return false;
}

Value apply(Session & s, Value const & f, Value const & arg) {
    if (f.is<Func>()) {
        Func fn = f.as<Func>();
        if (fn.args.empty() && arg.is<Tuple>() && arg.as<Tuple>().items.size() == fn.arity)
            return fn.impl(s, arg.as<Tuple>().items);
        fn.args.push_back(arg);
        if (fn.args.size() < fn.arity) return Value(std::move(fn));
        return fn.impl(s, fn.args);
    }
    if (f.is<Conv>()) return f.as<Conv>()(term_of(arg));
    if (f.is<FConv>()) return f.as<FConv>()(form_of(arg));
    throw CommandError("cannot apply a value of type " + type_name(f));
}

} // namespace convkit::repl
