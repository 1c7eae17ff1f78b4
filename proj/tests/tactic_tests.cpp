// Tacticals, canonical forms, chaining and the rewriting tactics.
#include <algorithm>
#include "doctest.h"
#undef THEN // doctest's BDD macro; the tactical is meant here
#include "convkit/kernel/derived.hpp"
#include "convkit/tactic/tactic.hpp"
#include "support.hpp"

using namespace convkit;
using namespace convkit::test;

namespace {

Theory::Ptr lists() {
    static Theory::Ptr const thy = [] {
        auto t = std::make_shared<Theory>("list_fun", std::vector<Theory::Ptr>{Theory::pplambda()});
        t->new_constant("NIL", parse_type("lst"));
        t->new_constant("CONS", parse_type("* -> lst -> lst"));
        t->new_constant("APP", parse_type("lst -> lst -> lst"), true);
        t->new_constant("MAP", parse_type("(* -> **) -> lst -> lst"));
        t->new_axiom("NIL_DEFINED", qf("~ NIL == UU", *t));
        t->new_axiom("CONS_DEFINED", qf("~ a == UU ==> ~ l == UU ==> ~ CONS a l == UU", *t));
        t->new_axiom("APP_DEFINED", qf("~ l1 == UU ==> ~ l2 == UU ==> ~ l1 APP l2 == UU", *t));
        t->new_axiom("MAP_CONS", qf("!f x l. ~ x == UU ==> MAP f (CONS x l) == CONS (f x) (MAP f l)", *t));
        return t;
    }();
    return thy;
}

Theory::Ptr occs() {
    static Theory::Ptr const thy = [] {
        auto t = std::make_shared<Theory>("occs", std::vector<Theory::Ptr>{Theory::pplambda()});
        t->new_constant("CONST", parse_type("tok -> exp"));
        t->new_constant("VAR", parse_type("tok -> exp"));
        t->new_constant("COMB", parse_type("exp -> exp -> exp"));
        t->new_constant("=", parse_type("exp -> exp -> tr"), true);
        t->new_constant("OR", parse_type("tr -> tr -> tr"), true);
        t->new_constant("OCCS", parse_type("exp -> exp -> tr"), true);
        t->new_constant("OCCS_EQ", parse_type("exp -> exp -> tr"), true);
        t->new_axiom("OCCS_EQ", qf("!t u. t OCCS_EQ u == (t = u) OR (t OCCS u)", *t));
        t->new_axiom("OCCS_CLAUSES", qf("!t. t OCCS UU == UU ^"
                                        " (!c. ~ c == UU ==> t OCCS (CONST c) == FF) ^"
                                        " (!v. ~ v == UU ==> t OCCS (VAR v) == FF) ^"
                                        " (!t1 t2. ~ t1 == UU ==> ~ t2 == UU ==>"
                                        "   t OCCS (COMB t1 t2) == (t OCCS_EQ t1) OR (t OCCS_EQ t2))",
                                        *t));
        return t;
    }();
    return thy;
}

// Target first, then assumptions, all in one typing scope.
Goal goal(std::vector<std::string> const & texts, Signature const & sig = root()) {
    auto fs = parse_forms(texts, sig);
    return Goal{std::vector<Formula>(fs.begin() + 1, fs.end()), fs.front()};
}

std::vector<std::string> concls(std::vector<Theorem> const & ths) {
    std::vector<std::string> out;
    for (auto const & th : ths) out.push_back(print_form(th.concl()));
    return out;
}

void leaves(SearchNode const & n, std::vector<std::string> & out) {
    if (n.children.empty()) out.push_back(print_form(n.goal));
    for (auto const & c : n.children) leaves(c, out);
}

} // namespace

TEST_CASE("tacticals") {
    Goal g = goal({"TT == TT"});
    TacticResult r = REPEAT(NO_TAC)(g);
    REQUIRE(r.subgoals.size() == 1);
    CHECK(alpha_eq(r.subgoals[0].target, g.target));
    CHECK_THROWS_AS(NO_TAC(g), Failure);
    CHECK_THROWS_AS(THEN(ALL_TAC, NO_TAC)(g), Failure);
    CHECK(ORELSE(NO_TAC, ALL_TAC)(g).subgoals.size() == 1);
    Theorem th = prove(g, THEN(ALL_TAC, REWRITE_TAC({})));
    CHECK(str(th) == "|-TT == TT");
}

TEST_CASE("FCONV_TAC") {
    CHECK_THROWS_AS(FCONV_TAC(ALL_FCONV)(goal({"TT == TT"})), Failure);
    CHECK_THROWS_AS(FCONV_TAC(NO_FCONV)(goal({"TT == TT"})), Failure);
    Theorem th = prove(goal({"(\\x.x)TT == TT"}), REWRITE_TAC({}));
    CHECK(str(th) == "|-(\\x.x)TT == TT");
    // an assumption used as a rewrite
    Goal g = goal({"p == TT", "p == TT"});
    CHECK(str(prove(g, ASM_REWRITE_TAC({}))) == "[p == TT] |-p == TT");
    CHECK_THROWS_AS(prove(g, REWRITE_TAC({})), Failure);
}

TEST_CASE("IMP_CANON") {
    auto c1 = IMP_CANON(ASSUME(qf("!x. ~ x==UU ==> !y. ~ y==UU ==> ~ f x y ==UU")));
    CHECK(concls(c1) == std::vector<std::string>{"~ x == UU ==> ~ y == UU ==> ~ f x y == UU"});
    auto c2 = IMP_CANON(ASSUME(qf("!x y. ~ x==UU ==> ~ y==UU ==> ~ f x y ==UU")));
    CHECK(concls(c2) == concls(c1));
    auto c3 = IMP_CANON(ASSUME(qf("(~ x==UU ^ ~ y==UU) ==> ~ f x y ==UU")));
    CHECK(concls(c3) == concls(c1));
    auto c4 = IMP_CANON(ASSUME(qf("(~ x==UU ^ ~ y==UU) ==> !f g. ~ f x y ==UU ^ ~ g x y == UU")));
    CHECK(concls(c4) == std::vector<std::string>{"~ x == UU ==> ~ y == UU ==> ~ f x y == UU",
                                                 "~ x == UU ==> ~ y == UU ==> ~ g x y == UU"});
    // hypotheses pass through
    CHECK(c4[0].hyps().size() == 1);
}

TEST_CASE("IMP_CANON on disjunctions and existentials") {
    auto c = IMP_CANON(ASSUME(qf("(x == TT \\/ (?z. z == x)) ==> y == TT")));
    CHECK(concls(c) == std::vector<std::string>{"x == TT ==> y == TT", "z == x ==> y == TT"});
    auto p = IMP_CANON(ASSUME(qf("x == TT \\/ y == TT")));
    CHECK(concls(p) == std::vector<std::string>{"x == TT \\/ y == TT"});
    // idempotent
    for (auto const & th : c) CHECK(concls(IMP_CANON(th)) == std::vector<std::string>{print_form(th.concl())});
}

TEST_CASE("FCONV_CANON") {
    Theory const & l = *lists();
    CHECK(str(FCONV_CANON(l.axiom("NIL_DEFINED"))) == "|-NIL == UU <=> FALSITY ()");
    CHECK(str(FCONV_CANON(l.axiom("CONS_DEFINED"))) ==
          "|-~ a == UU ==> ~ l == UU ==> (CONS a l == UU <=> FALSITY ())");
    CHECK(str(FCONV_CANON(l.axiom("APP_DEFINED"))) ==
          "|-~ l1 == UU ==> ~ l2 == UU ==> (l1 APP l2 == UU <=> FALSITY ())");
    CHECK(str(FCONV_CANON(ASSUME(qf("p == TT")))) == "[p == TT] |-p == TT <=> TRUTH ()");
    CHECK_THROWS_AS(FCONV_CANON(ASSUME(qf("p == TT \\/ p == FF"))), Failure);
}

TEST_CASE("IMP_SEARCH_TAC") {
    Theory const & l = *lists();
    std::vector<Theorem> thms{l.axiom("NIL_DEFINED"), l.axiom("CONS_DEFINED"), l.axiom("APP_DEFINED")};
    Goal g = goal({"~ (CONS t l) APP (CONS t (CONS u NIL)) == UU", "~ t == UU", "~ u == UU", "~ l == UU"}, l);
    SearchNode tree{g.target, "", {}};
    Theorem th = prove(g, IMP_SEARCH_TAC(thms, SearchOptions{50, &tree}));
    CHECK(print_form(th.concl()) == "~ (CONS t l) APP (CONS t(CONS u NIL)) == UU");
    std::vector<std::string> ls;
    leaves(tree, ls);
    CHECK(ls == std::vector<std::string>{"~ t == UU", "~ l == UU", "~ t == UU", "~ u == UU", "~ NIL == UU"});
    // no rule for the target
    CHECK_THROWS_AS(IMP_SEARCH_TAC(thms)(goal({"~ t == UU"}, l)), Failure);
    // a looping rule exhausts the depth budget instead of diverging
    Theorem loop = ASSUME(qf("~ x == UU ==> ~ x == UU"));
    CHECK_THROWS_AS(IMP_SEARCH_TAC({loop}, SearchOptions{10, nullptr})(goal({"~ x == UU"})), Failure);
}

TEST_CASE("implicative rewrites") {
    Theory const & l = *lists();
    Formula dx = qf("~ x == UU", l);
    Tactic chain = IMP_SEARCH_TAC({ASSUME(dx)});
    Conv map_cons = IMP_REW_CONV(chain, l.axiom("MAP_CONS"));
    Term t = qt("MAP (f:* -> **) (CONS (x:*) l)", l);
    CHECK(str(map_cons(t)) == "[~ x == UU] |-MAP f(CONS x l) == CONS(f x)(MAP f l)");
    CHECK_THROWS_AS(map_cons(qt("MAP (f:* -> **) (CONS (y:*) l)", l)), Failure);
    CHECK(str(IMP_REW_CONV(NO_TAC, root().axiom("FST_PAIR"))(qt("FST(TT,FF)"))) == "|-FST(TT,FF) == TT");
    CHECK_THROWS_AS(IMP_REW_CONV(NO_TAC, l.axiom("NIL_DEFINED")), Failure);
    FConv cons_def = IMP_REW_FCONV(chain, FCONV_CANON(l.axiom("CONS_DEFINED")));
    Tactic none = IMP_SEARCH_TAC({ASSUME(dx), l.axiom("NIL_DEFINED")});
    FConv cons_nil = IMP_REW_FCONV(none, FCONV_CANON(l.axiom("CONS_DEFINED")));
    CHECK(str(cons_nil(qf("CONS (x:*) NIL == UU", l))) == "[~ x == UU] |-CONS x NIL == UU <=> FALSITY ()");
    CHECK_THROWS_AS(cons_def(qf("CONS (x:*) NIL == UU", l)), Failure);
    CHECK_THROWS_AS(IMP_REW_FCONV(NO_TAC, l.axiom("NIL_DEFINED")), Failure);
}

TEST_CASE("OCCS subgoals") {
    Theory const & o = *occs();
    std::vector<Theorem> thl{o.axiom("OCCS_CLAUSES"), o.axiom("OCCS_EQ")};
    Tactic tac = ASM_REWRITE_TAC(thl);
    std::vector<Goal> easy{
        goal({"u OCCS UU == TT ==> t OCCS UU == TT", "~ t == UU", "t OCCS u == TT"}, o),
        goal({"u OCCS (CONST c) == TT ==> t OCCS (CONST c) == TT", "~ t == UU", "t OCCS u == TT", "~ c == UU"}, o),
        goal({"u OCCS (VAR v) == TT ==> t OCCS (VAR v) == TT", "~ t == UU", "t OCCS u == TT", "~ v == UU"}, o),
    };
    for (auto const & g : easy) {
        Theorem th = prove(g, tac);
        CHECK(achieves(th, g));
    }
    Goal comb = goal({"u OCCS (COMB t1 t2) == TT ==> t OCCS (COMB t1 t2) == TT", "~ t == UU", "t OCCS u == TT",
                      "u OCCS t1 == TT ==> t OCCS t1 == TT", "u OCCS t2 == TT ==> t OCCS t2 == TT", "~ t1 == UU",
                      "~ t2 == UU"},
                     o);
    TacticResult r = tac(comb);
    REQUIRE(r.subgoals.size() == 1);
    Goal expected = goal({"((u = t1) OR (u OCCS t1)) OR ((u = t2) OR (u OCCS t2)) == TT ==>"
                          " ((t = t1) OR (t OCCS t1)) OR ((t = t2) OR (t OCCS t2)) == TT",
                          "~ t == UU"},
                         o);
    CHECK(alpha_eq(r.subgoals[0].target, expected.target));
    CHECK(r.subgoals[0].assumptions.size() == comb.assumptions.size());
    // the reduction is justified: achieving the new goal achieves the old one
    Theorem sub = ASSUME(r.subgoals[0].target);
    Goal widened = comb;
    widened.assumptions.push_back(r.subgoals[0].target);
    CHECK(achieves(r.justify({sub}), widened));
}

TEST_CASE("proof state") {
    ProofState ps(goal({"(x == TT ==> x == TT) ^ (\\y.y)FF == FF"}));
    CHECK(ps.pending().size() == 1);
    CHECK_THROWS_AS(ps.result(), Failure);
    ps.expand(REWRITE_TAC({}));
    CHECK(ps.done());
    CHECK(str(ps.result()) == "|-(x == TT ==> x == TT) ^ (\\y.y)FF == FF");
    CHECK(ps.backup());
    CHECK(ps.pending().size() == 1);
    CHECK_FALSE(ps.backup());
    CHECK_THROWS_AS(ps.expand(NO_TAC), Failure);
    CHECK(ps.pending().size() == 1);
}
