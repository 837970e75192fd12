#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ocalc/axioms.hpp"
#include "ocalc/closure.hpp"
#include "ocalc/error.hpp"
#include "ocalc/presentation.hpp"
#include "support.hpp"

using namespace testing;

namespace {

constexpr std::uint64_t seed = 20240601;

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) note << what;
        pass = pass && ok;
    }
    void require(const PropertyResult& r, std::size_t min_cases) {
        expect(r.ok(), r.name + ": " + r.first_failure);
        expect(r.cases >= min_cases, r.name + ": only " + std::to_string(r.cases) + " cases");
    }
};

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void ac1(Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
        const auto open = numbered("p", n);
        const auto xs = enumerate_qoc(LabelSet(open.begin(), open.end()), {}, {0});
        o.expect(xs.size() == factorial(n - 1), "n=" + std::to_string(n) + " gave " + std::to_string(xs.size()));
    }
}

void ac2(Outcome& o) {
    const auto target = S("(q)(r)", 0);
    const auto lhs = contract_open(compose_open(S("(u q a)", 0), "a", S("(b v r)", 0), "b"), "u", "v");
    const auto rhs = compose_closed(S("(q)", 0, {"c"}), "c", S("(r)", 0, {"d"}), "d");
    o.expect(lhs == target, "open side " + to_string(lhs));
    o.expect(rhs == target, "closed side " + to_string(rhs));
    o.expect(eval_term(cardy_lhs("q", "r")).surface == target, "term lhs");
    o.expect(eval_term(cardy_rhs("q", "r")).surface == target, "term rhs");
}

void ac3(Outcome& o) {
    o.require(check_alpha_beta(4, 3, 2), 1000);
    o.require(check_alpha_morphism(seed, 1000), 1000);
}

void ac4(Outcome& o) {
    o.require(check_canon_congruence(seed, 1000), 1000);
    const auto split = N({{"(q)", 0}, {"(r)", 0}}, 0), joined = N({{"(q)(r)", 0}}, 0);
    const auto split_e = N({{"(q)", 0}, {"()", 0}}, 0), joined_e = N({{"(q)()", 0}}, 0);
    o.expect(is_stable(split) && is_stable(split_e), "relations not stable");
    o.expect(alpha(split) == alpha(joined), "first relation");
    o.expect(alpha(split_e) == alpha(joined_e), "second relation");
    o.expect(canon_mod(split) == canon_mod(joined) && canon_mod(split_e) == canon_mod(joined_e), "canon differs");
}

void ac5(Outcome& o) {
    for (const auto& r : check_surface_axioms(seed, 1000)) o.require(r, 1000);
    for (const auto& r : check_nested_axioms(seed, 1000)) o.require(r, 1000);
}

void ac6(Outcome& o) {
    const std::set<Surface> table = {S("()", 0),        S("(p)", 0),         S("(p q)", 0),
                                     S("()()", 0),      S("()", 0, {"d"}),   S("@", 0, {"d", "e"})};
    std::set<Surface> unstable;
    std::size_t kp_checked = 0;
    for (int n = 0; n <= 2; ++n)
        for (int c = 0; c <= 2; ++c) {
            const auto open = labels({"p", "q"}), closed = labels({"d", "e"});
            const LabelSet os(open.begin(), open.begin() + n), cs(closed.begin(), closed.begin() + c);
            for (int tg = 0; tg <= 12; ++tg)
                for (const auto& x : enumerate_qoc(os, cs, {tg})) {
                    if (x.genus() != 0) continue;
                    if (!is_stable(x)) unstable.insert(x);
                    // 2(G-1) + |O| + |C| > 0
                    const int twice = operadic_genus(x).value;
                    o.expect(is_stable(x) == (twice - 2 + n + c > 0), "stability of " + to_string(x));
                    o.expect(is_kp(x) == (is_stable(x) && !kp_discard_type(x)), "KP of " + to_string(x));
                    ++kp_checked;
                }
        }
    o.expect(unstable == table, "unstable census has " + std::to_string(unstable.size()) + " elements");
    o.expect(kp_checked > 50, "census too small");

    // the modular completion discards the same three families of nests
    o.expect(!is_kp(N({{"()", 0}, {"()", 0}, {"()", 0}}, 0)), "nested type i");
    o.expect(!is_kp(N({{"()", 0}, {"(p)", 0}}, 0)), "nested type ii");
    o.expect(!is_kp(N({{"()", 0}, {"()", 0}}, 0, {"d"})), "nested type iii");
    o.expect(is_kp(N({{"(p)", 0}, {"(q)", 0}}, 0)), "nested accepted");
    o.expect(is_kp(N({{"()", 0}, {"()", 0}}, 1)), "nested positive genus");
}

void ac7(Outcome& o) {
    const auto st = check_rewrite_soundness(seed, 600);
    o.require(st.result, 500);
    for (Axiom a : all_axioms) o.expect(st.applied.count(a) == 1, std::string("never applied ") + to_string(a));
}

void ac8(Outcome& o) {
    const auto r = kp_reachability_report({4, 2, 1});
    o.note << "expected " << r.expected << ", reached " << r.reached << "; ";
    o.expect(r.missing.empty(), std::to_string(r.missing.size()) + " missing");
    o.expect(r.extra.empty(), std::to_string(r.extra.size()) + " extra");
    o.expect(r.bad_witnesses.empty(), std::to_string(r.bad_witnesses.size()) + " bad witnesses");
}

void ac9(Outcome& o) {
    o.expect(check_open_closed(scalar_data()).all_pass(), "scalar data");
    const auto [sl, sr] = cardy_sides(scalar_data());
    o.expect(sl(0, 0) == 1 && sr(0, 0) == 1, "scalar sides");

    for (Scalar lambda : {Scalar(1), Scalar(2)}) {
        const auto data = matrix_data(lambda);
        const auto [left, right] = cardy_sides(data);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                o.expect(left(a, b) == cardy_open_m2(a, b), "open side differs from brute force");
                o.expect(right(a, b) == cardy_closed_m2(a, b, lambda), "closed side differs from brute force");
            }
        const auto report = check_open_closed(data);
        for (const auto& l : report.lines) {
            const bool want = lambda == 1 || l.name != "cardy";
            o.expect(l.pass == want, "line " + l.name + " at lambda " + lambda.get_str());
        }
    }
}

void ac10(Outcome& o) {
    const auto good = end_well_definedness(cardy_lhs("q", "r"), cardy_rhs("q", "r"), matrix_data(1));
    o.expect(good.equal, "passing data: " + good.detail);
    const auto bad = end_well_definedness(cardy_lhs("q", "r"), cardy_rhs("q", "r"), matrix_data(2));
    o.expect(!bad.equal && bad.witness.has_value(), "failing data not detected");
    if (bad.witness) o.note << "witness index " << *bad.witness;
}

}  // namespace

int main() {
    const std::vector<std::tuple<int, const char*, double, std::function<void(Outcome&)>>> criteria = {
        {1, "factorial count of cyclic orders", 1, ac1},
        {2, "Cardy identity on surfaces", 1, ac2},
        {3, "alpha/beta", 30, ac3},
        {4, "canon congruence", 30, ac4},
        {5, "modular axioms", 30, ac5},
        {6, "stability and KP census", 5, ac6},
        {7, "presentation soundness", 30, ac7},
        {8, "presentation completeness (4,2,1)", 120, ac8},
        {9, "Frobenius and Cardy checks", 5, ac9},
        {10, "End well-definedness", 5, ac10},
    };
    int failed = 0;
    for (const auto& [id, name, limit, run] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.expect(secs < limit, "too slow");
        std::printf("AC%-2d %s  %-36s %8.3fs  %s\n", id, o.pass ? "PASS" : "FAIL", name, secs, o.note.str().c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
