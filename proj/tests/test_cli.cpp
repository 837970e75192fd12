#include <sstream>

#include "doctest.h"
#include "ocalc/cli.hpp"
#include "ocalc/json_io.hpp"
#include "ocalc/presentation.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
    int code;
    std::vector<std::string> lines;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r{run_cli(args, out, err), {}, err.str()};
    std::istringstream in(out.str());
    for (std::string l; std::getline(in, l);) r.lines.push_back(l);
    return r;
}

}  // namespace

TEST_CASE("enumerate lists the cyclic orders") {
    const auto r = run({"enumerate", "--open", "p,q,r", "--closed", "", "--twice-genus", "0"});
    CHECK(r.code == 0);
    REQUIRE(r.lines.size() == 3);
    CHECK(surface_from_json(parse_json(r.lines[0])) == S("(p q r)", 0));
    CHECK(surface_from_json(parse_json(r.lines[1])) == S("(p r q)", 0));
    CHECK(r.lines[2] == "# 2 elements");
}

TEST_CASE("canon collapses nests") {
    const auto r = run({"canon", R"({"nests":[{"open":[["q"]],"g":0},{"open":[["r"]],"g":0}],"g":0,"closed":[]})"});
    CHECK(r.code == 0);
    CHECK(nested_from_json(parse_json(r.lines.at(0))) == N({{"(q)(r)", 0}}, 0));
}

TEST_CASE("surface operations") {
    auto r = run({"compose", R"({"open":[["u","q","a"]],"g":0})", "a", R"({"open":[["b","v","r"]],"g":0})", "b"});
    CHECK(r.code == 0);
    CHECK(surface_from_json(parse_json(r.lines.at(0))) == S("(u q v r)", 0));
    r = run({"contract", R"({"open":[["u"],["v"]],"g":0})", "u", "v", "--format", "text"});
    CHECK(r.lines.at(0) == to_string(S("()", 1)));
    r = run({"genus", R"({"open":[],"g":0,"closed":["d","e","f"]})"});
    CHECK(parse_json(r.lines.at(0))["twice_genus"] == 1);
    r = run({"beta", R"({"open":[["q"],["r"]],"g":1})"});
    CHECK(nested_from_json(parse_json(r.lines.at(0))) == N({{"(q)(r)", 1}}, 0));
    r = run({"alpha", r.lines.at(0)});
    CHECK(surface_from_json(parse_json(r.lines.at(0))) == S("(q)(r)", 1));
    r = run({"classify", R"({"open":[[],[],[]],"g":0})"});
    const auto tags = parse_json(r.lines.at(0))["tags"];
    CHECK(std::find(tags.begin(), tags.end(), "stable") != tags.end());
    CHECK(std::find(tags.begin(), tags.end(), "KP") == tags.end());
}

TEST_CASE("terms") {
    const std::string lhs =
        R"({"xi":[{"comp":[{"gen":"mu","legs":["u","q","a"]},{"gen":"mu","legs":["b","v","r"]},"a","b"]},"u","v"]})";
    const std::string rhs = R"({"comp":[{"gen":"phi","legs":["q","c"]},{"gen":"phi","legs":["r","d"]},"c","d"]})";
    auto r = run({"eval-term", lhs});
    CHECK(r.code == 0);
    CHECK(surface_from_json(parse_json(r.lines.at(0))["surface"]) == S("(q)(r)", 0));

    r = run({"rewrite", lhs, "--axiom", "cardy", "--path", ""});
    CHECK(r.code == 0);
    CHECK(eval_term(term_from_json(parse_json(r.lines.at(0))["term"])).surface == S("(q)(r)", 0));

    r = run({"rewrite", lhs, "--list"});
    CHECK(r.code == 0);
    CHECK(r.lines.back().find("legal steps") != std::string::npos);

    r = run({"rewrite", lhs, "--axiom", "a1", "--path", "0.0"});
    CHECK(r.code == 2);

    CHECK(run({"frobenius", "compare", lhs, rhs, "m2"}).code == 0);
    r = run({"frobenius", "compare", lhs, rhs, "m2:2"});
    CHECK(r.code == 1);
    CHECK(parse_json(r.lines.at(0)).contains("witness"));
    r = run({"frobenius", "eval-term", rhs, "scalar"});
    CHECK(parse_json(r.lines.at(0))["values"] == Json::array({1}));
}

TEST_CASE("frobenius check exit codes") {
    auto r = run({"frobenius", "check", "m2"});
    CHECK(r.code == 0);
    CHECK(r.lines.back() == "# PASS");
    r = run({"frobenius", "check", "m2:2"});
    CHECK(r.code == 1);
    CHECK(parse_json(r.lines.at(8))["check"] == "cardy");
    CHECK(parse_json(r.lines.at(8))["pass"] == false);
    CHECK(run({"frobenius", "check", to_json(scalar_data()).dump()}).code == 0);
}

TEST_CASE("closure report") {
    const auto r = run({"closure", "--budget-open", "3", "--budget-closed", "1", "--budget-genus", "0", "--report"});
    CHECK(r.code == 0);
    CHECK(parse_json(r.lines.at(0))["missing"].empty());
    CHECK(r.lines.back() == "# PASS");
}

TEST_CASE("property suite is reproducible") {
    const auto a = run({"check-axioms", "--seed", "7", "--iters", "50"});
    const auto b = run({"check-axioms", "--seed", "7", "--iters", "50"});
    CHECK(a.code == 0);
    CHECK(a.lines == b.lines);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nope"}).code == 2);
    CHECK(run({"enumerate", "--open", "p", "--bogus", "1", "--twice-genus", "0"}).code == 2);
    CHECK(run({"enumerate", "--open", "p,p", "--twice-genus", "0"}).code == 2);
    CHECK(run({"genus", "{not json"}).code == 2);
    CHECK(run({"genus", "/no/such/file.json"}).code == 2);
    CHECK(run({"compose", R"({"open":[["a"]],"g":0})", "a", R"({"open":[["a"]],"g":0})", "a"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
