#include "doctest.h"
#include "ocalc/error.hpp"
#include "ocalc/presentation.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Term mu(const char* a, const char* b, const char* c) { return Term::mu(a, b, c); }
Term om(const char* a, const char* b, const char* c) { return Term::omega(a, b, c); }
Term phi(const char* a, const char* b) { return Term::phi(a, b); }

Term rewrite(const Term& t, Axiom a, const char* path = "", Direction d = Direction::Forward) {
    FreshLabels fresh;
    return apply_axiom(t, {a, parse_path(path), d}, fresh);
}

}  // namespace

TEST_CASE("generators evaluate to their surfaces") {
    CHECK(eval_term(mu("p", "q", "r")).surface == S("(p q r)", 0));
    CHECK(eval_term(om("d", "e", "f")).surface == S("@", 0, {"d", "e", "f"}));
    CHECK(eval_term(phi("p", "d")).surface == S("(p)", 0, {"d"}));
    CHECK(operadic_genus(eval_term(mu("p", "q", "r")).surface).value == 0);
    CHECK(operadic_genus(eval_term(om("d", "e", "f")).surface).value == 1);
    CHECK(operadic_genus(eval_term(phi("p", "d")).surface).value == 1);
}

TEST_CASE("compound terms") {
    CHECK(eval_term(Term::comp(mu("p", "q", "r"), mu("s", "t", "u"), "r", "s")).surface == S("(p q t u)", 0));
    // different boundaries merge into one and raise the genus
    const auto t = Term::contract(Term::comp(phi("q", "c"), phi("r", "d"), "c", "d"), "q", "r");
    CHECK(eval_term(t).surface == S("()", 1));
    CHECK(eval_term(t).kp);
}

TEST_CASE("malformed terms") {
    CHECK_THROWS_AS(Term::mu("p", "p", "q"), Error);
    CHECK_THROWS_AS(eval_term(Term::comp(mu("p", "q", "r"), mu("p", "t", "u"), "r", "t")), Error);
    CHECK_THROWS_AS(eval_term(Term::comp(mu("p", "q", "r"), phi("s", "d"), "r", "d")), Error);
}

TEST_CASE("Cardy sides have the same surface") {
    CHECK(eval_term(cardy_lhs("q", "r")).surface == S("(q)(r)", 0));
    CHECK(eval_term(cardy_rhs("q", "r")).surface == S("(q)(r)", 0));
}

TEST_CASE("a1 reassociates two products") {
    const auto lhs = Term::comp(mu("p", "q", "r"), mu("s", "t", "u"), "r", "s");
    const auto rhs = rewrite(lhs, Axiom::A1);
    CHECK(rhs == Term::comp(mu("p", "r", "u"), mu("q", "t", "s"), "r", "s"));
    CHECK(eval_term(rhs).surface == eval_term(lhs).surface);
    CHECK(rewrite(rhs, Axiom::A1, "", Direction::Backward) == lhs);
}

TEST_CASE("a4 is centrality of phi") {
    const auto lhs = Term::comp(mu("p", "q", "r"), phi("s", "d"), "q", "s");
    const auto rhs = rewrite(lhs, Axiom::A4);
    CHECK(rhs == Term::comp(mu("p", "r", "q"), phi("s", "d"), "q", "s"));
    CHECK(eval_term(rhs).surface == eval_term(lhs).surface);
}

TEST_CASE("a2 and a3 keep the surface") {
    const auto w = Term::comp(om("d", "e", "f"), om("g", "h", "i"), "f", "g");
    CHECK(eval_term(rewrite(w, Axiom::A2)).surface == eval_term(w).surface);
    const auto p = Term::comp(phi("p", "g"), om("d", "e", "f"), "g", "f");
    const auto q = rewrite(p, Axiom::A3);
    CHECK(eval_term(q).surface == eval_term(p).surface);
    CHECK(generator_count(q) == 3);
}

TEST_CASE("cardy rewrites between the two sides") {
    const auto r = rewrite(cardy_lhs("q", "r"), Axiom::Cardy);
    CHECK(r.kind() == Term::Kind::Comp);
    CHECK(r.left().kind() == Term::Kind::Phi);
    CHECK(r.right().kind() == Term::Kind::Phi);
    CHECK(eval_term(r).surface == S("(q)(r)", 0));
    const auto back = rewrite(cardy_rhs("q", "r"), Axiom::Cardy, "", Direction::Backward);
    CHECK(back.kind() == Term::Kind::Contract);
    CHECK(eval_term(back).surface == S("(q)(r)", 0));
}

TEST_CASE("rewriting inside a term") {
    const auto inner = Term::comp(mu("p", "q", "r"), mu("s", "t", "u"), "r", "s");
    const auto t = Term::comp(inner, phi("x", "d"), "p", "x");
    const auto r = rewrite(t, Axiom::A1, "0");
    CHECK(r.left() == rewrite(inner, Axiom::A1));
    CHECK(r.right() == t.right());
    CHECK_THROWS_AS(rewrite(t, Axiom::A1, "1"), Error);
    CHECK_THROWS_AS(rewrite(t, Axiom::Cardy), Error);
}

TEST_CASE("listing legal steps") {
    const auto t = Term::comp(mu("p", "q", "r"), mu("s", "t", "u"), "r", "s");
    const auto sites = rewrite_sites(t);
    REQUIRE_FALSE(sites.empty());
    for (const auto& s : sites) {
        FreshLabels fresh;
        CHECK(eval_term(apply_axiom(t, s, fresh)).surface == eval_term(t).surface);
    }
}

TEST_CASE("fresh labels avoid user labels") {
    FreshLabels f;
    CHECK(f.next({"#0", "#1"}).token() == "#2");
    FreshLabels tight(0, 1);
    tight.next({});
    CHECK_THROWS_AS(tight.next({}), Error);
}

TEST_CASE("paths") {
    CHECK(parse_path("").empty());
    CHECK(parse_path("0.1") == TermPath{0, 1});
    CHECK(to_string(parse_path("1.0.1")) == "1.0.1");
    CHECK_THROWS_AS(parse_path("a"), Error);
}
