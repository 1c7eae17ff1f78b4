// term_match / form_match and the theorem-instantiating rules built on them.
#include "doctest.h"
#include "convkit/matching/match.hpp"
#include "support.hpp"

using namespace convkit;
using namespace convkit::test;

namespace {

// Renders a match in the session layout: term pairs, then type pairs.
std::string show(MatchResult const & m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.terms.size(); ++i)
        s += (i ? "; " : "") + ("\"" + print_term(m.terms[i].first) + "\",\"" + print_term(m.terms[i].second) + "\"");
    s += "],\n[";
    for (std::size_t i = 0; i < m.types.size(); ++i)
        s += (i ? "; " : "") + ("\":" + print_type(m.types[i].first) + "\",\":" + print_type(m.types[i].second) + "\"");
    return s + "]";
}

std::string token_of(std::function<void()> const & f) {
    try {
        f();
    } catch (Failure const & e) {
        return e.token();
    }
    return "";
}

Term const tm_obj = qt("TT=> (FF,TT) | (TT,FF)");
Formula const fm_obj = qf("!x. (x,TT) == UU");

} // namespace

TEST_CASE("term_match on the conditional object") {
    CHECK(show(term_match(qt("x"), tm_obj)) == "[\"(TT => (FF,TT) | (TT,FF))\",\"x\"],\n[\":tr # tr\",\":*\"]");
    CHECK(show(term_match(qt("p=>x|y"), tm_obj)) ==
          "[\"TT,FF\",\"y\"; \"FF,TT\",\"x\"; \"TT\",\"p\"],\n[\":tr # tr\",\":*\"]");
    // f : * -> ** binds both type variables
    CHECK(show(term_match(qt("f x"), tm_obj)) ==
          "[\"TT,FF\",\"x\"; \"COND TT(FF,TT)\",\"f\"],\n[\":tr # tr\",\":**\"; \":tr # tr\",\":*\"]");
    CHECK(token_of([] { term_match(qt("p=>FF|y"), tm_obj); }) == "term_match");
    CHECK(token_of([] { term_match(qt("\\p.p"), tm_obj); }) == "term_match");
}

TEST_CASE("form_match respects binders and quantifier kinds") {
    CHECK(token_of([] { form_match(qf("!y. (x,y) == UU"), fm_obj); }) == "form_match");
    CHECK(token_of([] { form_match(qf("?x. (x,TT) == UU"), fm_obj); }) == "form_match");
    CHECK(show(form_match(qf("!y. (y,z) == UU"), fm_obj)) == "[\"TT\",\"z\"],\n[\":tr\",\":**\"]");
}

TEST_CASE("repeated pattern variables must bind alpha-equal terms") {
    CHECK_NOTHROW(term_match(qt("x,x"), qt("(\\a.(a:tr)),(\\b.(b:tr))")));
    CHECK_THROWS(term_match(qt("x,x"), qt("TT,FF")));
    CHECK_THROWS(term_match(qt("\\y. x"), qt("\\y. y")));
}

TEST_CASE("PART_TMATCH and MATCH_MP") {
    auto MIN = PART_TMATCH([](Formula const & f) { return dest_inequiv(f).second; }, root().axiom("MINIMAL"));
    CHECK(str(MIN(qt("f x"))) == "|-UU << f x");
    auto FST_CONV = PART_TMATCH([](Formula const & f) { return dest_equiv(f).first; }, root().axiom("FST_PAIR"));
    CHECK(str(FST_CONV(qt("FST (TT,FF)"))) == "|-FST(TT,FF) == TT");
    CHECK(token_of([&] { FST_CONV(qt("SND (TT,FF)")); }) == "term_match");

    auto thy = std::make_shared<Theory>("list_fun", std::vector<Theory::Ptr>{Theory::pplambda()});
    thy->new_constant("MAP", parse_type("(* -> **) -> lst -> lst"));
    thy->new_constant("VARS_OF", parse_type("exp -> lst"));
    Theorem map_total = thy->new_axiom(
        "MAP_TOTAL", qf("!f. (!x. ~ x == UU ==> ~ f x == UU) ==> (!l. ~ l == UU ==> ~ MAP f l == UU)", *thy));
    Theorem vars_total = thy->new_axiom("VARS_OF_TOTAL", qf("!t. ~ t == UU ==> ~ VARS_OF t == UU", *thy));
    auto mm = MATCH_MP(map_total);
    Theorem total1 = mm(vars_total);
    CHECK(str(total1) == "|-!l. ~ l == UU ==> ~ MAP VARS_OF l == UU");
    Theorem total2 = mm(total1);
    CHECK(str(total2) == "|-!l. ~ l == UU ==> ~ MAP(MAP VARS_OF)l == UU");
    CHECK(str(mm(total2)) == "|-!l. ~ l == UU ==> ~ MAP(MAP(MAP VARS_OF))l == UU");
    CHECK(token_of([&] { mm(root().axiom("EQ_REFL")); }) == "form_match");
}
