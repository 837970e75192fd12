#include "doctest.h"
#include "ocalc/closure.hpp"
#include "ocalc/presentation.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool has_shape(const std::map<Surface, Term>& cl, const Surface& x) {
    return cl.count(representative(shape_of(x))) == 1;
}

}  // namespace

TEST_CASE("shapes forget labels") {
    CHECK(shape_of(S("(p q r)", 0)) == shape_of(S("(a c b)", 0)));
    CHECK(shape_of(S("(p)()", 1, {"c"})) == shape_of(S("()(z)", 1, {"d"})));
    CHECK_FALSE(shape_of(S("(p q)", 0)) == shape_of(S("(p)(q)", 0)));
    CHECK(shape_of(representative(shape_of(S("(x y)(z)", 2, {"c", "d"})))) == shape_of(S("(x y)(z)", 2, {"c", "d"})));
}

TEST_CASE("closure examples") {
    const auto a = generate_closure({3, 0, 0});
    CHECK(has_shape(a, S("(p q r)", 0)));

    const auto b = generate_closure({0, 4, 0});
    CHECK(has_shape(b, S("@", 0, {"d", "e", "f"})));
    CHECK(has_shape(b, S("@", 0, {"c", "d", "e", "f"})));

    const auto c = generate_closure({2, 0, 1});
    CHECK(has_shape(c, S("()()", 1)));
}

TEST_CASE("every witness evaluates to its surface and lies in the KP part") {
    for (const auto& [s, t] : generate_closure({3, 2, 1})) {
        CAPTURE(to_string(s));
        const auto e = eval_term(t);
        CHECK(e.surface == s);
        CHECK(e.kp);
    }
}

TEST_CASE("reachability at small budgets") {
    const auto r = kp_reachability_report({4, 2, 0});
    CHECK(r.ok());
    CHECK(r.expected > 0);

    const auto com = generate_closure({0, 3, 0});
    CHECK(has_shape(com, S("@", 0, {"c", "d", "e"})));
    CHECK_FALSE(has_shape(com, S("@", 0, {"c", "d"})));
    CHECK(kp_reachability_report({0, 3, 0}).ok());

    CHECK_FALSE(has_shape(generate_closure({2, 0, 0}), S("(p q)", 0)));
    CHECK(kp_reachability_report({2, 0, 1}).ok());
}
