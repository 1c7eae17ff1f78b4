// Randomised properties of conversions and their combinators.
#include "doctest.h"
#include "convkit/conv/conv.hpp"
#include "convkit/conv/fconv.hpp"
#include "convkit/syntax/print.hpp"
#include "gen.hpp"

using namespace convkit;
using convkit::test::Gen;

namespace {

constexpr int N = 1000;
Theory const & root() { return *Theory::pplambda(); }

std::vector<char const *> const rewrite_labels{"COND_UU", "COND_TT", "COND_FF", "MIN_COMB",
                                               "MIN_ABS", "MK_PAIR", "FST_PAIR", "SND_PAIR"};

std::vector<Conv> rewrites() {
    std::vector<Conv> rws;
    for (char const * l : rewrite_labels) rws.push_back(REWRITE_CONV(root().axiom(l)));
    return rws;
}

// One step of the example rewrites or beta.
Conv many() { return ORELSEC(FIRST_CONV(rewrites()), BETA_CONV); }

// Conversions that always make the term smaller when they succeed.
Conv reducing(Gen & g) {
    if (g.chance(20)) return BETA_CONV;
    if (g.chance(20)) return many();
    return REWRITE_CONV(root().axiom(g.pick(rewrite_labels)));
}

Conv random_conv(Gen & g, int depth) {
    if (depth <= 0 || g.chance(30)) {
        switch (g.below(4)) {
        case 0: return ALL_CONV;
        case 1: return NO_CONV;
        default: return reducing(g);
        }
    }
    switch (g.below(8)) {
    case 0: return THENC(random_conv(g, depth - 1), random_conv(g, depth - 1));
    case 1: return ORELSEC(random_conv(g, depth - 1), random_conv(g, depth - 1));
    case 2: return REPEATC(reducing(g));
    case 3: return TRY_CONV(random_conv(g, depth - 1));
    case 4: return SUB_CONV(random_conv(g, depth - 1));
    case 5: return DEPTH_CONV(reducing(g));
    case 6: return REDEPTH_CONV(reducing(g));
    default: return TOP_DEPTH_CONV(reducing(g));
    }
}

struct Outcome {
    std::optional<Term> result; // nullopt: the conversion failed
};

bool operator==(Outcome const & a, Outcome const & b) {
    if (!a.result || !b.result) return !a.result && !b.result;
    return alpha_eq(*a.result, *b.result);
}

std::string show(Outcome const & o) { return o.result ? print_term(*o.result) : "<fails>"; }

// Applies `c` and checks the conversion contract on the way.
Outcome conv_on(Conv const & c, Term const & t) {
    StepBudget budget(20000);
    try {
        Theorem th = c(t);
        CHECK(th.hyps().empty());
        CHECK(alpha_eq(lhs(th), t));
        CHECK(rhs(th).type() == t.type());
        replay(th);
        return {rhs(th)};
    } catch (Failure const &) {
        return {std::nullopt};
    }
}

struct AuditOn {
    AuditOn() { set_audit(true); }
    ~AuditOn() { set_audit(false); }
};

Term sample(Gen & g) { return g.term(g.type(), 4); }

} // namespace

TEST_CASE("conversions return |-t == u with t the input") {
    AuditOn audit;
    int succeeded = 0;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(i));
        Term t = sample(g);
        Conv c = random_conv(g, 3);
        INFO(print_term(t));
        succeeded += conv_on(c, t).result.has_value();
    }
    CHECK(succeeded > N / 4);
}

TEST_CASE("ALL_CONV and NO_CONV are identities; NO_CONV is a left and right zero of THENC") {
    AuditOn audit;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(5000 + i));
        Term t = sample(g);
        Conv c = random_conv(g, 2);
        Outcome o = conv_on(c, t);
        INFO(print_term(t));
        CHECK(conv_on(THENC(ALL_CONV, c), t) == o);
        CHECK(conv_on(THENC(c, ALL_CONV), t) == o);
        CHECK(conv_on(ORELSEC(NO_CONV, c), t) == o);
        CHECK(conv_on(ORELSEC(c, NO_CONV), t) == o);
        CHECK(conv_on(THENC(NO_CONV, c), t) == Outcome{});
        CHECK(conv_on(THENC(c, NO_CONV), t) == Outcome{});
    }
}

TEST_CASE("THENC and ORELSEC are associative") {
    AuditOn audit;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(9000 + i));
        Term t = sample(g);
        Conv a = random_conv(g, 2), b = random_conv(g, 2), c = random_conv(g, 2);
        INFO(print_term(t));
        CHECK(conv_on(THENC(THENC(a, b), c), t) == conv_on(THENC(a, THENC(b, c)), t));
        CHECK(conv_on(ORELSEC(ORELSEC(a, b), c), t) == conv_on(ORELSEC(a, ORELSEC(b, c)), t));
    }
}

TEST_CASE("THENC distributes over ORELSEC from the left") {
    AuditOn audit;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(13000 + i));
        Term t = sample(g);
        Conv a = random_conv(g, 2), b = random_conv(g, 2), c = random_conv(g, 2);
        INFO(print_term(t));
        CHECK(conv_on(THENC(a, ORELSEC(b, c)), t) == conv_on(ORELSEC(THENC(a, b), THENC(a, c)), t));
    }
}

TEST_CASE("right distribution holds when the right factor cannot fail") {
    AuditOn audit;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(17000 + i));
        Term t = sample(g);
        Conv a = random_conv(g, 2), b = random_conv(g, 2);
        Conv c = g.chance(50) ? Conv(ALL_CONV) : TRY_CONV(random_conv(g, 2));
        INFO(print_term(t));
        CHECK(conv_on(THENC(ORELSEC(a, b), c), t) == conv_on(ORELSEC(THENC(a, c), THENC(b, c)), t));
    }
}

TEST_CASE("right distribution in general" * doctest::should_fail()) {
    AuditOn audit;
    int counterexamples = 0;
    for (int i = 0; i < N && counterexamples == 0; ++i) {
        Gen g(static_cast<std::uint32_t>(21000 + i));
        Term t = sample(g);
        Conv a = random_conv(g, 2), b = random_conv(g, 2), c = random_conv(g, 2);
        Outcome l = conv_on(THENC(ORELSEC(a, b), c), t), r = conv_on(ORELSEC(THENC(a, c), THENC(b, c)), t);
        if (!(l == r)) {
            ++counterexamples;
            MESSAGE("counterexample on ", print_term(t), ": ", show(l), " vs ", show(r));
        }
    }
    CHECK(counterexamples == 0);
}

TEST_CASE("ORELSEC is commutative" * doctest::should_fail()) {
    AuditOn audit;
    int counterexamples = 0;
    for (int i = 0; i < N && counterexamples == 0; ++i) {
        Gen g(static_cast<std::uint32_t>(25000 + i));
        Term t = sample(g);
        Conv a = random_conv(g, 2), b = random_conv(g, 2);
        Outcome l = conv_on(ORELSEC(a, b), t), r = conv_on(ORELSEC(b, a), t);
        if (!(l == r)) {
            ++counterexamples;
            MESSAGE("counterexample on ", print_term(t), ": ", show(l), " vs ", show(r));
        }
    }
    CHECK(counterexamples == 0);
}

TEST_CASE("REPEATC stops at a term its conversion cannot touch") {
    AuditOn audit;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(29000 + i));
        Term t = sample(g);
        Conv c = g.chance(50) ? many() : reducing(g);
        Outcome o = conv_on(REPEATC(c), t);
        INFO(print_term(t));
        REQUIRE(o.result);
        CHECK_FALSE(conv_on(c, *o.result).result);
    }
    CHECK(conv_on(REPEATC(NO_CONV), Term::mk_const("TT", tr_type())) == Outcome{Term::mk_const("TT", tr_type())});
}

TEST_CASE("depth traversals agree on the example rewrites plus beta") {
    AuditOn audit;
    Conv c = many();
    int changed = 0, beyond_one = 0;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(33000 + i));
        Term t = sample(g);
        INFO(print_term(t));
        Outcome re = conv_on(REDEPTH_CONV(c), t);
        Outcome top = conv_on(TOP_DEPTH_CONV(c), t);
        // DEPTH_CONV never fails; one pass may expose new redexes above it
        Outcome once = conv_on(DEPTH_CONV(c), t);
        REQUIRE(once.result);
        Outcome twice = conv_on(DEPTH_CONV(c), *once.result);
        REQUIRE(twice.result);
        beyond_one += !alpha_eq(*once.result, *twice.result);
        REQUIRE(re.result);
        REQUIRE(top.result);
        CHECK(alpha_eq(*re.result, *top.result));
        CHECK(alpha_eq(*re.result, *twice.result));
        // and the result is normal
        CHECK_FALSE(conv_on(c, *re.result).result);
        CHECK(conv_on(DEPTH_CONV(c), *re.result) == Outcome{*re.result});
        changed += !alpha_eq(*re.result, t);
    }
    CHECK(changed > N / 4);
    // the second pass matters on some terms
    CHECK(beyond_one > 0);
}

// ---------------------------------------------------------------------------
// Formula conversions.

namespace {

// Cheaper than many(): every failed rewrite attempt costs an exception.
Conv light() { return ORELSEC(REWRITE_CONV(root().axiom("COND_TT")), BETA_CONV); }

FConv random_fconv(Gen & g, int depth) {
    if (depth <= 0 || g.chance(30)) {
        switch (g.below(8)) {
        case 0: return ALL_FCONV;
        case 1: return NO_FCONV;
        case 2: return BASIC_TAUT_FCONV;
        case 3: return PRED_FCONV(many());
        case 4: return REWRITE_FCONV(root().axiom(g.chance(50) ? "DIST_TT_UU" : "DIST_FF_TT"));
        case 5: return REWRITE_FCONV(root().axiom(g.chance(50) ? "FORALL_TRUTH" : "EXISTS_FALSITY"));
        default: return BASIC_FCONV(light(), NO_FCONV);
        }
    }
    switch (g.below(9)) {
    case 0: return THENFC(random_fconv(g, depth - 1), random_fconv(g, depth - 1));
    case 1: return ORELSEFC(random_fconv(g, depth - 1), random_fconv(g, depth - 1));
    case 2: return CONJ_FCONV(random_fconv(g, depth - 1));
    case 3: return IMP_FCONV(random_fconv(g, depth - 1));
    case 4: return FORALL_FCONV(random_fconv(g, depth - 1));
    case 5: return SUB_FCONV(light(), random_fconv(g, depth - 1));
    case 6: return DEPTH_FCONV(light(), BASIC_TAUT_FCONV);
    case 7: return REDEPTH_FCONV(light(), BASIC_TAUT_FCONV);
    default: return TOP_DEPTH_FCONV(light(), BASIC_TAUT_FCONV);
    }
}

std::optional<Formula> fapply(FConv const & f, Formula const & a) {
    StepBudget budget(20000);
    try {
        Theorem th = f(a);
        CHECK(th.hyps().empty());
        REQUIRE(th.concl().is_iff());
        CHECK(alpha_eq(th.concl().left(), a));
        replay(th);
        return th.concl().right();
    } catch (Failure const &) {
        return std::nullopt;
    }
}

bool same(std::optional<Formula> const & a, std::optional<Formula> const & b) {
    if (!a || !b) return !a && !b;
    return alpha_eq(*a, *b);
}

} // namespace

TEST_CASE("formula conversions return |-A <=> B with A the input") {
    AuditOn audit;
    int succeeded = 0;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(41000 + i));
        Formula a = g.form(3);
        INFO(print_form(a));
        succeeded += fapply(random_fconv(g, 3), a).has_value();
    }
    // shape-specific conversions fail on most formulas
    CHECK(succeeded > N / 10);
}

TEST_CASE("THENFC and ORELSEFC obey the identity, zero and associativity laws") {
    AuditOn audit;
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(45000 + i));
        Formula x = g.form(2);
        FConv a = random_fconv(g, 2), b = random_fconv(g, 2), c = random_fconv(g, 2);
        auto o = fapply(a, x);
        INFO(print_form(x));
        CHECK(same(fapply(THENFC(ALL_FCONV, a), x), o));
        CHECK(same(fapply(THENFC(a, ALL_FCONV), x), o));
        CHECK(same(fapply(ORELSEFC(NO_FCONV, a), x), o));
        CHECK(same(fapply(ORELSEFC(a, NO_FCONV), x), o));
        CHECK_FALSE(fapply(THENFC(NO_FCONV, a), x));
        CHECK(same(fapply(THENFC(THENFC(a, b), c), x), fapply(THENFC(a, THENFC(b, c)), x)));
        CHECK(same(fapply(ORELSEFC(ORELSEFC(a, b), c), x), fapply(ORELSEFC(a, ORELSEFC(b, c)), x)));
        CHECK(same(fapply(THENFC(a, ORELSEFC(b, c)), x), fapply(ORELSEFC(THENFC(a, b), THENFC(a, c)), x)));
    }
}

TEST_CASE("BASIC_FCONV reaches a normal form") {
    AuditOn audit;
    FConv basic = BASIC_FCONV(many(), NO_FCONV);
    for (int i = 0; i < N; ++i) {
        Gen g(static_cast<std::uint32_t>(49000 + i));
        Formula a = g.form(2);
        INFO(print_form(a));
        auto b = fapply(basic, a);
        REQUIRE(b);
        auto c = fapply(basic, *b);
        REQUIRE(c);
        CHECK(alpha_eq(*b, *c));
    }
}
