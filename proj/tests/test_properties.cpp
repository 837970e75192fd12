#include "doctest.h"
#include "ocalc/axioms.hpp"

using namespace ocalc;

namespace {

void require_all(const std::vector<PropertyResult>& rs) {
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CHECK_MESSAGE(r.ok(), r.first_failure);
    }
}

}  // namespace

TEST_CASE("modular laws for surfaces") { require_all(check_surface_axioms(11, 300)); }

TEST_CASE("modular laws for nested surfaces") { require_all(check_nested_axioms(12, 300)); }

TEST_CASE("alpha and canon") {
    require_all({check_alpha_morphism(13, 300), check_canon_congruence(14, 300)});
}

TEST_CASE("rewrites keep the surface") {
    const auto st = check_rewrite_soundness(15, 300);
    CHECK_MESSAGE(st.result.ok(), st.result.first_failure);
    for (Axiom a : all_axioms) CHECK(st.applied.count(a) == 1);
}

TEST_CASE("rewrites keep End values on valid data") {
    for (const auto& d : {matrix_data(), diagonal_data(2), scalar_data()}) {
        const auto st = check_end_invariance(16, 150, d);
        CHECK_MESSAGE(st.result.ok(), st.result.first_failure);
    }
}

TEST_CASE("End values detect the broken Cardy identity") {
    const auto st = check_end_invariance(17, 200, matrix_data(2));
    CHECK(st.result.failures > 0);
    CHECK(st.result.first_failure.find("cardy") != std::string::npos);
}
