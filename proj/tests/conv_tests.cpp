// Term conversions on the example terms of the rewriting sessions.
#include "doctest.h"
#include "convkit/conv/conv.hpp"
#include "support.hpp"

using namespace convkit;
using namespace convkit::test;

namespace {

Term const abs1 = qt("(\\fun.(fun(TT,FF) => x | y))FST");
Term const abs2 = qt("(\\t.(\\u.t,u)FF)TT");
Term const condu = qt("UU => (TT,FF,p) | (q,TT,q)");
Term const condt = qt("TT => x | y");
Term const condf = qt("FF => f x | f y");
Term const condfst = qt("FST(TT,FF) => x | y");

Conv rw(char const * label) { return REWRITE_CONV(root().axiom(label)); }

Conv many_conv() {
    std::vector<Conv> rws;
    for (char const * l : {"COND_UU", "COND_TT", "COND_FF", "MIN_COMB", "MIN_ABS", "MK_PAIR", "FST_PAIR", "SND_PAIR"})
        rws.push_back(rw(l));
    return ORELSEC(FIRST_CONV(rws), BETA_CONV);
}

std::string run(Conv const & c, Term const & t) {
    try {
        return str(c(t));
    } catch (Failure const & e) {
        return "evaluation failed " + e.token();
    }
}

} // namespace

TEST_CASE("basic conversions") {
    CHECK(run(BETA_CONV, abs1) == "|-(\\fun.(fun(TT,FF) => x | y))FST == (FST(TT,FF) => x | y)");
    CHECK(run(BETA_CONV, abs2) == "|-(\\t.(\\u.t,u)FF)TT == (\\u.TT,u)FF");
    CHECK(run(BETA_CONV, condt) == "evaluation failed BETA_CONV");
    CHECK(run(rw("FST_PAIR"), qt("FST (TT,FF)")) == "|-FST(TT,FF) == TT");
    CHECK(run(rw("FST_PAIR"), qt("SND (TT,FF)")) == "evaluation failed term_match");
    CHECK(run(rw("COND_TT"), condt) == "|-(TT => x | y) == x");
    CHECK(run(rw("COND_TT"), condfst) == "evaluation failed term_match");
}

TEST_CASE("sequencing and alternation") {
    Conv beta_beta = THENC(BETA_CONV, BETA_CONV);
    CHECK(run(beta_beta, abs1) == "evaluation failed BETA_CONV");
    CHECK(run(beta_beta, abs2) == "|-(\\t.(\\u.t,u)FF)TT == TT,FF");
    CHECK(run(NO_CONV, condt) == "evaluation failed NO_CONV");
    CHECK(run(ALL_CONV, condfst) == "|-(FST(TT,FF) => x | y) == (FST(TT,FF) => x | y)");
    Conv cond_tf = ORELSEC(rw("COND_TT"), rw("COND_FF"));
    CHECK(run(cond_tf, condt) == "|-(TT => x | y) == x");
    CHECK(run(cond_tf, condf) == "|-(FF => f x | f y) == f y");
    CHECK(run(cond_tf, condfst) == "evaluation failed term_match");
    Conv cond_conv = FIRST_CONV({rw("COND_TT"), rw("COND_FF"), rw("COND_UU")});
    CHECK(run(cond_conv, condu) == "|-(UU => (TT,FF,p) | (q,TT,q)) == UU");
    CHECK(run(cond_conv, condf) == "|-(FF => f x | f y) == f y");
    CHECK(run(cond_conv, condt) == "|-(TT => x | y) == x");
    CHECK(run(cond_conv, condfst) == "evaluation failed FIRST_CONV");
    CHECK(run(FIRST_CONV({}), condt) == "evaluation failed FIRST_CONV");
}

TEST_CASE("repetition") {
    Conv beta_n = REPEATC(BETA_CONV);
    CHECK(run(beta_n, abs1) == "|-(\\fun.(fun(TT,FF) => x | y))FST == (FST(TT,FF) => x | y)");
    CHECK(run(beta_n, abs2) == "|-(\\t.(\\u.t,u)FF)TT == TT,FF");
    CHECK(run(beta_n, condt) == "|-(TT => x | y) == (TT => x | y)");
    CHECK(run(REPEATC(NO_CONV), condt) == run(ALL_CONV, condt));
}

TEST_CASE("subterm conversions") {
    CHECK(run(COMB_CONV(ALL_CONV), qt("f x")) == "|-f x == f x");
    CHECK(run(ABS_CONV(BETA_CONV), qt("\\y.(\\x.x)y")) == "|-\\y.(\\x.x)y == \\y.y");
    CHECK(run(COMB_CONV(ALL_CONV), qt("\\x.x")) == "evaluation failed COMB_CONV");
    CHECK(run(SUB_CONV(ALL_CONV), qt("x")) == "|-x == x");
    CHECK(run(SUB_CONV(NO_CONV), qt("f x")) == "|-f x == f x");
    CHECK(run(SUB_CONV(BETA_CONV), qt("((\\x.x)f) ((\\x.x)y)")) == "|-(\\x.x)f((\\x.x)y) == f y");
}

TEST_CASE("a bound variable is not confused with a free one fixed by a hypothesis") {
    Term x = var("x", tr_type());
    Theorem hyp = ASSUME(mk_equiv(x, qt("TT")));
    Conv by_hyp = REWRITE_CONV(hyp);
    Term t = Term::mk_abs(x, mk_pair(x, x));
    // the body rewrites only while x is read as the free x; renamed, it does not
    CHECK_THROWS_AS(ABS_CONV(by_hyp)(t), Failure);
    CHECK(str(SUB_CONV(by_hyp)(t)) == "|-\\x.x,x == \\x.x,x");
    Conv both = ORELSEC(by_hyp, ALL_CONV);
    CHECK(str(COMB_CONV(both)(Term::mk_comb(t, x))) == "[x == TT] |-(\\x.x,x)x == (\\x.x,x)TT");
}

TEST_CASE("depth conversions") {
    Conv many = many_conv();
    Conv d = DEPTH_CONV(many);
    CHECK(run(d, abs2) == "|-(\\t.(\\u.t,u)FF)TT == TT,FF");
    CHECK(run(d, condfst) == "|-(FST(TT,FF) => x | y) == x");
    CHECK(run(d, abs1) == "|-(\\fun.(fun(TT,FF) => x | y))FST == (FST(TT,FF) => x | y)");
    Conv rd = REDEPTH_CONV(many);
    CHECK(run(rd, abs1) == "|-(\\fun.(fun(TT,FF) => x | y))FST == x");
    CHECK(run(rd, condfst) == "|-(FST(TT,FF) => x | y) == x");
    CHECK(run(rd, qt("x")) == "|-x == x");
    CHECK(run(TOP_DEPTH_CONV(many), abs1) == "|-(\\fun.(fun(TT,FF) => x | y))FST == x");
}

TEST_CASE("top-down traversal skips subterms that disappear") {
    int calls = 0;
    Conv counting = [&](Term const & t) {
        ++calls;
        return rw("FST_PAIR")(t);
    };
    Term t = qt("FST(x, FST(FST(a,b),c))");
    CHECK(run(TOP_DEPTH_CONV(counting), t) == "|-FST(x,FST(FST(a,b),c)) == x");
    int top = calls;
    calls = 0;
    CHECK(run(DEPTH_CONV(counting), t) == "|-FST(x,FST(FST(a,b),c)) == x");
    CHECK(top < calls);
}

TEST_CASE("the step budget stops runaway rewriting") {
    Theorem comm = ASSUME(qf("!a b. (a:tr) , (b:tr) == b , a"));
    Conv loop = TOP_DEPTH_CONV(REWRITE_CONV(comm));
    StepBudget budget(500);
    CHECK_THROWS_AS(loop(qt("TT,FF")), StepLimitExceeded);
}
