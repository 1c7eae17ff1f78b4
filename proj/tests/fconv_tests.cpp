// Formula conversions: predicates, connectives, depth traversals and
// tautology elimination on the example formulas.
#include "doctest.h"
#include "convkit/conv/conv.hpp"
#include "convkit/conv/fconv.hpp"
#include "convkit/kernel/derived.hpp"
#include "support.hpp"

using namespace convkit;
using namespace convkit::test;

namespace {

Theory::Ptr examples() {
    static Theory::Ptr const thy = [] {
        auto t = std::make_shared<Theory>("examples", std::vector<Theory::Ptr>{Theory::pplambda()});
        t->new_predicate("P", parse_type(":* # **"));
        t->new_predicate("Q", parse_type(":*"));
        t->new_axiom("P_Q", qf("!x. P (x,x) <=> Q x", *t));
        t->new_axiom("LESS_UU", qf("!x. x << UU <=> x == UU", *t));
        return t;
    }();
    return thy;
}

Formula ef(std::string const & s) { return qf(s, *examples()); }

Conv many_conv() {
    std::vector<Conv> rws;
    for (char const * l : {"COND_UU", "COND_TT", "COND_FF", "MIN_COMB", "MIN_ABS", "MK_PAIR", "FST_PAIR", "SND_PAIR"})
        rws.push_back(REWRITE_CONV(root().axiom(l)));
    return ORELSEC(FIRST_CONV(rws), BETA_CONV);
}

FConv many_fconv() {
    return FIRST_FCONV({REWRITE_FCONV(examples()->axiom("P_Q")), REWRITE_FCONV(examples()->axiom("LESS_UU"))});
}

std::string run(FConv const & f, Formula const & a) {
    try {
        return str(f(a));
    } catch (Failure const & e) {
        return "evaluation failed " + e.token();
    }
}

Formula const imp1 = ef("!x y. P ((TT => y | z), SND(y,y)) ==> Q ((\\p.(p => v | y))FF)");
Formula const conj1 = ef("?x. x << UU TT \\/ SND(x,TT) == (UU => TT | FF)");
Formula const equiv1 = ef("!x. ?p. (FST(p,p) => x | UU) == (p => (\\z.SND(x,z))x | (\\r.r)UU)");

} // namespace

TEST_CASE("predicate conversion") {
    Term abs2 = qt("(\\t.(\\u.t,u)FF)TT");
    Term condfst = qt("FST(TT,FF) => x | y");
    ParseOptions o;
    o.antiquote = [&](std::string const & n) -> std::optional<Antiquote> {
        if (n == "abs2") return abs2;
        if (n == "condfst") return condfst;
        return std::nullopt;
    };
    Formula a = parse_form("P (^abs2, ^condfst)", *examples(), o);
    CHECK(run(PRED_FCONV(REDEPTH_CONV(many_conv())), a) ==
          "|-P ((\\t.(\\u.t,u)FF)TT,(FST(TT,FF) => x | y)) <=> P ((TT,FF),x)");
    CHECK(run(PRED_FCONV(ALL_CONV), ef("Q TT /\\ Q FF")) == "evaluation failed PRED_FCONV");
}

TEST_CASE("depth formula conversion") {
    FConv d = DEPTH_FCONV(REDEPTH_CONV(many_conv()), many_fconv());
    CHECK(run(d, imp1) == "|-(!x y. P ((TT => y | z),SND(y,y)) ==> Q (\\p.(p => v | y))FF) <=> (!x y. Q y ==> Q y)");
    CHECK(run(d, conj1) == "|-(?x. x << UU TT \\/ SND(x,TT) == (UU => TT | FF)) <=> (?x. x == UU \\/ TT == UU)");
    CHECK(run(d, equiv1) == "|-(!x. ?p. (FST(p,p) => x | UU) == (p => (\\z.SND(x,z))x | (\\r.r)UU)) <=> "
                            "(!x. ?p. (p => x | UU) == (p => x | UU))");
}

TEST_CASE("basic simplifier") {
    FConv b = BASIC_FCONV(many_conv(), many_fconv());
    CHECK(run(b, imp1) == "|-(!x y. P ((TT => y | z),SND(y,y)) ==> Q (\\p.(p => v | y))FF) <=> TRUTH ()");
    CHECK(run(b, conj1) == "|-(?x. x << UU TT \\/ SND(x,TT) == (UU => TT | FF)) <=> (?x. x == UU)");
    CHECK(run(b, equiv1) == "|-(!x. ?p. (FST(p,p) => x | UU) == (p => (\\z.SND(x,z))x | (\\r.r)UU)) <=> TRUTH ()");
}

TEST_CASE("tautology tables") {
    CHECK(run(TAUT_CONJ_FCONV, ef("TRUTH () /\\ Q x")) == "|-TRUTH () ^ Q x <=> Q x");
    CHECK(run(TAUT_CONJ_FCONV, ef("Q x /\\ TRUTH ()")) == "|-Q x ^ TRUTH () <=> Q x");
    CHECK(run(TAUT_CONJ_FCONV, ef("FALSITY () /\\ Q x")) == "|-FALSITY () ^ Q x <=> FALSITY ()");
    CHECK(run(TAUT_CONJ_FCONV, ef("Q x /\\ FALSITY ()")) == "|-Q x ^ FALSITY () <=> FALSITY ()");
    CHECK(run(TAUT_CONJ_FCONV, ef("Q x /\\ Q y")) == "evaluation failed TAUT_CONJ_FCONV");
    CHECK(run(TAUT_DISJ_FCONV, ef("FALSITY () \\/ Q x")) == "|-FALSITY () \\/ Q x <=> Q x");
    CHECK(run(TAUT_DISJ_FCONV, ef("Q x \\/ FALSITY ()")) == "|-Q x \\/ FALSITY () <=> Q x");
    CHECK(run(TAUT_DISJ_FCONV, ef("TRUTH () \\/ Q x")) == "|-TRUTH () \\/ Q x <=> TRUTH ()");
    CHECK(run(TAUT_DISJ_FCONV, ef("Q x \\/ TRUTH ()")) == "|-Q x \\/ TRUTH () <=> TRUTH ()");
    CHECK(run(TAUT_IMP_FCONV, ef("TRUTH () ==> Q x")) == "|-TRUTH () ==> Q x <=> Q x");
    CHECK(run(TAUT_IMP_FCONV, ef("Q x ==> TRUTH ()")) == "|-Q x ==> TRUTH () <=> TRUTH ()");
    CHECK(run(TAUT_IMP_FCONV, ef("FALSITY () ==> Q x")) == "|-FALSITY () ==> Q x <=> TRUTH ()");
    CHECK(run(TAUT_IMP_FCONV, ef("(!y. Q (y:tr)) ==> (!z. Q (z:tr))")) == "|-(!y. Q y) ==> (!z. Q z) <=> TRUTH ()");
    CHECK(run(TAUT_IFF_FCONV, ef("Q x <=> TRUTH ()")) == "|-(Q x <=> TRUTH ()) <=> Q x");
    CHECK(run(TAUT_IFF_FCONV, ef("TRUTH () <=> Q x")) == "|-(TRUTH () <=> Q x) <=> Q x");
    CHECK(run(TAUT_IFF_FCONV, ef("Q x <=> Q x")) == "|-(Q x <=> Q x) <=> TRUTH ()");
    CHECK(run(TAUT_FORALL_FCONV, ef("!x. TRUTH ()")) == "|-(!x. TRUTH ()) <=> TRUTH ()");
    CHECK(run(TAUT_EXISTS_FCONV, ef("?y. FALSITY ()")) == "|-(?y. FALSITY ()) <=> FALSITY ()");
    CHECK(run(TAUT_PRED_FCONV, ef("(x,y) == (x,y)")) == "|-(x,y) == x,y <=> TRUTH ()");
    CHECK(run(TAUT_PRED_FCONV, ef("FF == TT")) == "|-FF == TT <=> FALSITY ()");
    CHECK(run(TAUT_PRED_FCONV, ef("Q x")) == "evaluation failed TAUT_PRED_FCONV");
    CHECK(run(BASIC_TAUT_FCONV, ef("Q x")) == "evaluation failed FIRST_FCONV");
}

TEST_CASE("formula combinators") {
    Formula a = ef("Q x /\\ TRUTH ()");
    CHECK(run(ALL_FCONV, a) == "|-Q x ^ TRUTH () <=> Q x ^ TRUTH ()");
    CHECK(run(NO_FCONV, a) == "evaluation failed NO_FCONV");
    CHECK(run(REPEATFC(NO_FCONV), a) == "|-Q x ^ TRUTH () <=> Q x ^ TRUTH ()");
    CHECK(run(THENFC(TAUT_CONJ_FCONV, NO_FCONV), a) == "evaluation failed NO_FCONV");
    CHECK(run(CONJ_FCONV(ALL_FCONV), ef("Q x")) == "evaluation failed CONJ_FCONV");
    CHECK(run(FORALL_FCONV(ALL_FCONV), ef("?x. Q x")) == "evaluation failed FORALL_FCONV");
}

TEST_CASE("quantifier descent over a hypothesis variable") {
    // a rewrite valid only because x is assumed: the binder must be renamed
    Formula hyp = ef("x == TT");
    FConv by_hyp = [&](Formula const & f) {
        if (!(f == ef("Q (x:tr)"))) fail("by_hyp");
        return fix_lhs(f, PRED_CONG("Q", ASSUME(hyp)));
    };
    CHECK(run(FORALL_FCONV(by_hyp), ef("!x. Q (x:tr)")) == "evaluation failed by_hyp");
    CHECK(run(EXISTS_FCONV(ORELSEFC(by_hyp, ALL_FCONV)), ef("?x. Q (x:tr)")) == "|-(?x. Q x) <=> (?x'. Q x')");
}
