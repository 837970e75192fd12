#include "doctest.h"
#include "ocalc/axioms.hpp"
#include "ocalc/error.hpp"
#include "ocalc/json_io.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("surface JSON") {
    const auto x = S("(p q)()", 1, {"c"});
    const Json j = to_json(x);
    CHECK(j.dump() == R"({"closed":["c"],"g":1,"open":[[],["p","q"]]})");
    CHECK(surface_from_json(j) == x);
    CHECK(surface_from_json(parse_json(R"({"open":[["q","p"]],"g":0})")) == S("(p q)", 0));
}

TEST_CASE("round trips on random values") {
    Sampler rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto s = rng.surface();
        CHECK(surface_from_json(parse_json(to_json(s).dump())) == s);
        const auto n = rng.nested();
        CHECK(nested_from_json(parse_json(to_json(n).dump())) == n);
        const auto t = rng.term(rng.uniform(1, 5));
        CHECK(term_from_json(parse_json(to_json(t).dump())) == t);
    }
}

TEST_CASE("term JSON") {
    const auto t = term_from_json(parse_json(
        R"({"xi":[{"comp":[{"gen":"mu","legs":["u","q","a"]},{"gen":"mu","legs":["b","v","r"]},"a","b"]},"u","v"]})"));
    CHECK(t == Term::contract(Term::comp(Term::mu("u", "q", "a"), Term::mu("b", "v", "r"), "a", "b"), "u", "v"));
    CHECK_THROWS_AS(term_from_json(parse_json(R"({"gen":"phi","legs":["p"]})")), Error);
    CHECK_THROWS_AS(term_from_json(parse_json(R"({"comp":[]})")), Error);
}

TEST_CASE("algebra data JSON") {
    for (const auto& d : {scalar_data(), matrix_data(Scalar(2, 3)), diagonal_data(3)}) {
        const auto back = data_from_json(parse_json(to_json(d).dump()));
        CHECK(back.A.mult == d.A.mult);
        CHECK(back.A.form == d.A.form);
        CHECK(back.B.form == d.B.form);
        CHECK(back.f == d.f);
    }
    CHECK(scalar_from_json(Json("-3/6")) == Scalar(-1, 2));
    CHECK(to_json(Scalar(1, 2)) == Json("1/2"));
    CHECK(to_json(Scalar(4)) == Json(4));
    CHECK_THROWS_AS(scalar_from_json(Json("1/0")), Error);
}

TEST_CASE("parse errors carry the parse code") {
    try {
        parse_json("{");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Parse);
    }
    CHECK_THROWS_AS(surface_from_json(parse_json(R"({"open":[["p","p"]],"g":0})")), Error);
    CHECK_THROWS_AS(surface_from_json(parse_json(R"({"open":"p","g":0})")), Error);
}
