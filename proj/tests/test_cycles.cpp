#include "doctest.h"
#include "ocalc/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("cycles are stored from their minimal label") {
    CHECK(to_string(canonical_cycle(labels({"q", "r", "p"}))) == "(p q r)");
    CHECK(canonical_cycle({}).empty());
    CHECK(canonical_cycle(labels({"b", "v", "r"})) == canonical_cycle(labels({"v", "r", "b"})));
    CHECK(canonical_cycle(labels({"p", "q", "r"})) != canonical_cycle(labels({"p", "r", "q"})));
}

TEST_CASE("repeated or empty labels are rejected") {
    CHECK_THROWS_AS(canonical_cycle(labels({"p", "q", "p"})), Error);
    CHECK_THROWS_AS(Label(""), Error);
    CHECK_THROWS_AS(parse_multicycle("(p q)(q)"), Error);
}

TEST_CASE("pancake merging") {
    CHECK(merge_cycles(parse_cycle("(u q a)"), "a", parse_cycle("(b v r)"), "b") == parse_cycle("(u q v r)"));
    CHECK(merge_cycles(parse_cycle("(a)"), "a", parse_cycle("(b)"), "b").empty());
    CHECK(merge_cycles(parse_cycle("(p a)"), "a", parse_cycle("(b s t)"), "b") == parse_cycle("(p s t)"));
}

TEST_CASE("pancake cutting") {
    auto [x, y] = cut_cycle(parse_cycle("(u q v r)"), "u", "v");
    CHECK(x == parse_cycle("(q)"));
    CHECK(y == parse_cycle("(r)"));
    auto [e1, e2] = cut_cycle(parse_cycle("(u v)"), "u", "v");
    CHECK((e1.empty() && e2.empty()));
    auto [a, b] = cut_cycle(parse_cycle("(p q r s t)"), "p", "r");
    CHECK(a == parse_cycle("(q)"));
    CHECK(b == parse_cycle("(s t)"));
}

TEST_CASE("multicycle merging is componentwise") {
    CHECK(merge_multicycles(parse_multicycle("(u q a)"), "a", parse_multicycle("(b v r)()"), "b") ==
          parse_multicycle("(u q v r)()"));
    CHECK(merge_multicycles(parse_multicycle("(a)"), "a", parse_multicycle("(b)"), "b") == parse_multicycle("()"));
    CHECK(merge_multicycles(parse_multicycle("(a x)(y)"), "a", parse_multicycle("(b)"), "b") ==
          parse_multicycle("(x)(y)"));
}

TEST_CASE("multicycle contraction") {
    auto same = contract_multicycle(parse_multicycle("(u q v r)"), "u", "v");
    CHECK(same.same_pancake);
    CHECK(same.result == parse_multicycle("(q)(r)"));
    auto diff = contract_multicycle(parse_multicycle("(u)(v)"), "u", "v");
    CHECK_FALSE(diff.same_pancake);
    CHECK(diff.result == parse_multicycle("()"));
    auto three = contract_multicycle(parse_multicycle("(u p)(v q)(r)"), "u", "v");
    CHECK_FALSE(three.same_pancake);
    CHECK(three.result == parse_multicycle("(p q)(r)"));
}

TEST_CASE("multicycles are unordered multisets") {
    CHECK(parse_multicycle("(r)()(p q)") == parse_multicycle("(q p)(r)()"));
    CHECK(parse_multicycle("()()").size() == 2);
    CHECK(parse_multicycle("@").trivial());
    CHECK(parse_multicycle(to_string(parse_multicycle("(s t)()(p r q)"))) == parse_multicycle("(s t)()(p r q)"));
}
