#include "doctest.h"
#include "ocalc/axioms.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("nested open composition") {
    CHECK(mod_compose_open(N({{"(a)", 0}}, 0), "a", N({{"(b p)", 0}}, 0, {"c"}), "b") == N({{"(p)", 0}}, 0, {"c"}));
    CHECK(mod_compose_open(N({{"(a)", 0}}, 0), "a", N({{"(b)", 0}}, 0), "b") == N({{"()", 0}}, 0));
    CHECK(mod_compose_open(N({{"(a)(q)", 1}}, 2, {"c"}), "a", N({{"(b)", 0}, {"(r)", 0}}, 0), "b") ==
          N({{"()(q)", 1}, {"(r)", 0}}, 2, {"c"}));
}

TEST_CASE("nested closed composition juxtaposes nests") {
    CHECK(mod_compose_closed(N({{"(q)", 0}}, 0, {"c"}), "c", N({{"(r)", 0}}, 0, {"d"}), "d") ==
          N({{"(q)", 0}, {"(r)", 0}}, 0));
    CHECK(mod_compose_closed(N({}, 0, {"u", "x"}), "u", N({}, 0, {"v", "y"}), "v") == N({}, 0, {"x", "y"}));
    CHECK(mod_compose_closed(N({{"(p)", 1}}, 1, {"u"}), "u", N({}, 2, {"v", "w"}), "v") == N({{"(p)", 1}}, 3, {"w"}));
}

TEST_CASE("nested contraction") {
    CHECK(mod_contract(N({{"(u)", 0}, {"(v)", 0}}, 0), "u", "v") == N({{"()", 0}}, 1));
    CHECK(mod_contract(N({{"(u q v r)", 0}}, 0), "u", "v") == N({{"(q)(r)", 0}}, 0));
    CHECK(mod_contract(N({}, 0, {"u", "v", "c"}), "u", "v") == N({}, 1, {"c"}));
}

TEST_CASE("embedding, alpha and beta") {
    CHECK(embed(S("(p)(q r)", 0, {"c"})) == N({{"(p)", 0}, {"(q r)", 0}}, 0, {"c"}));
    CHECK(embed(S("@", 0, {"c", "d"})) == N({}, 0, {"c", "d"}));
    CHECK(embed(S("()", 0)) == N({{"()", 0}}, 0));

    CHECK(alpha(N({{"(q)", 0}, {"(r)", 0}}, 0)) == S("(q)(r)", 0));
    CHECK(alpha(N({}, 3, {"c"})) == S("@", 3, {"c"}));
    CHECK(alpha(N({{"(p)()", 2}, {"(q)", 1}}, 1, {"c"})) == S("(p)()(q)", 4, {"c"}));

    CHECK(beta(S("(q)(r)", 1)) == N({{"(q)(r)", 1}}, 0));
    CHECK(beta(S("@", 2, {"c"})) == N({}, 2, {"c"}));
    CHECK(beta(S("(p q r)", 0, {"c", "d"})) == N({{"(p q r)", 0}}, 0, {"c", "d"}));
}

TEST_CASE("canonical form modulo the Cardy ideal") {
    CHECK(canon_mod(N({{"(q)", 0}, {"(r)", 0}}, 0)) == N({{"(q)(r)", 0}}, 0));
    CHECK(canon_mod(N({{"(p q)", 2}}, 0, {"c"})) == N({{"(p q)", 2}}, 0, {"c"}));
    CHECK(canon_mod(N({{"(p)", 1}}, 2)) == N({{"(p)", 3}}, 0));
    // the two stable relations, identified after flattening
    CHECK(alpha(N({{"(q)", 0}, {"(r)", 0}}, 0)) == alpha(N({{"(q)(r)", 0}}, 0)));
    CHECK(alpha(N({{"(q)", 0}, {"()", 0}}, 0)) == alpha(N({{"(q)()", 0}}, 0)));
}

TEST_CASE("nested stability and KP") {
    const auto three = N({{"()", 0}, {"()", 0}, {"()", 0}}, 0);
    CHECK(is_stable(three));
    CHECK_FALSE(is_kp(three));
    const auto mixed = N({{"()", 0}, {"(p)", 0}}, 0);
    CHECK(is_stable(mixed));
    CHECK_FALSE(is_kp(mixed));
    const auto two = N({{"(p)", 0}, {"(q)", 0}}, 0);
    CHECK(is_stable(two));
    CHECK(is_kp(two));
}

TEST_CASE("alpha inverts beta on small enumerations") {
    const auto r = check_alpha_beta(3, 2, 1);
    CHECK_MESSAGE(r.ok(), r.first_failure);
    CHECK(r.cases > 100);
}
