#include "ocalc/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ocalc/axioms.hpp"
#include "ocalc/closure.hpp"
#include "ocalc/completion.hpp"
#include "ocalc/error.hpp"
#include "ocalc/frobenius.hpp"
#include "ocalc/json_io.hpp"
#include "ocalc/presentation.hpp"

namespace ocalc {

namespace {

// Inline JSON, or a path to a file holding it.
Json load(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
    std::ifstream in(arg);
    if (!in) throw Error(Errc::Parse, "cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

bool is_nested(const Json& j) { return j.is_object() && j.contains("nests"); }

OpenClosedData load_data(const std::string& arg) {
    if (arg == "scalar") return scalar_data();
    if (arg == "m2") return matrix_data(1);
    if (arg.rfind("m2:", 0) == 0) return matrix_data(scalar_from_json(Json(arg.substr(3))));
    if (arg.rfind("diag:", 0) == 0) return diagonal_data(std::stoul(arg.substr(5)));
    return data_from_json(load(arg));
}

LabelSet split_labels(const std::string& text) {
    LabelSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            if (!out.insert(Label(item)).second) throw Error(Errc::DuplicateLabel, "label '" + item + "' repeated");
    return out;
}

class Emitter {
public:
    Emitter(std::ostream& out, const std::string& format) : out_(out), text_(format == "text") {}
    void item(const Json& j, const std::string& text) {
        out_ << (text_ ? text : j.dump()) << '\n';
    }
    void summary(const std::string& s) { out_ << "# " << s << '\n'; }

private:
    std::ostream& out_;
    bool text_;
};

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Open-closed surface calculus: operations, enumeration, presentation and algebra checks", "ocalc"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::function<int(Emitter&)> action;

    // surface and nested operations
    std::string x_arg, y_arg, u_arg, v_arg;
    auto* compose_cmd = app.add_subcommand("compose", "Glue input U of X to input V of Y");
    compose_cmd->add_option("X", x_arg)->required();
    compose_cmd->add_option("U", u_arg)->required();
    compose_cmd->add_option("Y", y_arg)->required();
    compose_cmd->add_option("V", v_arg)->required();
    compose_cmd->callback([&] {
        action = [&](Emitter& e) {
            const Json x = load(x_arg), y = load(y_arg);
            if (is_nested(x)) {
                auto r = mod_compose(nested_from_json(x), u_arg, nested_from_json(y), v_arg);
                e.item(to_json(r), to_string(r));
            } else {
                auto r = compose(surface_from_json(x), u_arg, surface_from_json(y), v_arg);
                e.item(to_json(r), to_string(r));
            }
            e.summary("composed");
            return 0;
        };
    });

    auto* contract_cmd = app.add_subcommand("contract", "Contract inputs U and V of X");
    contract_cmd->add_option("X", x_arg)->required();
    contract_cmd->add_option("U", u_arg)->required();
    contract_cmd->add_option("V", v_arg)->required();
    contract_cmd->callback([&] {
        action = [&](Emitter& e) {
            const Json x = load(x_arg);
            if (is_nested(x)) {
                auto r = mod_contract(nested_from_json(x), u_arg, v_arg);
                e.item(to_json(r), to_string(r));
            } else {
                auto r = contract(surface_from_json(x), u_arg, v_arg);
                e.item(to_json(r), to_string(r));
            }
            e.summary("contracted");
            return 0;
        };
    });

    auto* genus_cmd = app.add_subcommand("genus", "Operadic genus (reported doubled)");
    genus_cmd->add_option("X", x_arg)->required();
    genus_cmd->callback([&] {
        action = [&](Emitter& e) {
            const Json x = load(x_arg);
            const int twice = is_nested(x) ? operadic_genus(nested_from_json(x)).value
                                           : operadic_genus(surface_from_json(x)).value;
            e.item({{"twice_genus", twice}}, "2G = " + std::to_string(twice));
            e.summary("G = " + std::to_string(twice / 2) + (twice % 2 ? ".5" : ""));
            return 0;
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "Sub-structure, stability and KP tags");
    classify_cmd->add_option("X", x_arg)->required();
    classify_cmd->callback([&] {
        action = [&](Emitter& e) {
            const Json x = load(x_arg);
            Json j;
            if (is_nested(x)) {
                j = {{"tags", to_json(classify_nested(nested_from_json(x)))}};
            } else {
                const Surface s = surface_from_json(x);
                j = {{"tags", to_json(classify(s))}, {"modular_kp", is_modular_kp(s)}};
            }
            std::string text;
            for (const auto& t : j["tags"]) text += (text.empty() ? "" : " ") + t.get<std::string>();
            e.item(j, text);
            e.summary("classified");
            return 0;
        };
    });

    auto* alpha_cmd = app.add_subcommand("alpha", "Flatten a nested surface");
    alpha_cmd->add_option("X", x_arg)->required();
    alpha_cmd->callback([&] {
        action = [&](Emitter& e) {
            auto r = alpha(nested_from_json(load(x_arg)));
            e.item(to_json(r), to_string(r));
            e.summary("alpha");
            return 0;
        };
    });

    auto* beta_cmd = app.add_subcommand("beta", "Wrap a surface into a single nest");
    beta_cmd->add_option("X", x_arg)->required();
    beta_cmd->callback([&] {
        action = [&](Emitter& e) {
            auto r = beta(surface_from_json(load(x_arg)));
            e.item(to_json(r), to_string(r));
            e.summary("beta");
            return 0;
        };
    });

    auto* canon_cmd = app.add_subcommand("canon", "Normal form modulo the Cardy ideal");
    canon_cmd->add_option("X", x_arg)->required();
    canon_cmd->callback([&] {
        action = [&](Emitter& e) {
            auto r = canon_mod(nested_from_json(load(x_arg)));
            e.item(to_json(r), to_string(r));
            e.summary("canonical form");
            return 0;
        };
    });

    // enumeration and closure
    std::string open_arg, closed_arg;
    int twice_genus = 0;
    auto* enum_cmd = app.add_subcommand("enumerate", "All surfaces with the given labels and doubled genus");
    enum_cmd->add_option("--open", open_arg, "Comma-separated open labels");
    enum_cmd->add_option("--closed", closed_arg, "Comma-separated closed labels");
    enum_cmd->add_option("--twice-genus", twice_genus)->required()->check(CLI::NonNegativeNumber);
    enum_cmd->callback([&] {
        action = [&](Emitter& e) {
            const auto xs = enumerate_qoc(split_labels(open_arg), split_labels(closed_arg), {twice_genus});
            for (const auto& x : xs) e.item(to_json(x), to_string(x));
            e.summary(std::to_string(xs.size()) + " elements");
            return 0;
        };
    });

    Budget budget;
    bool report = false;
    auto* closure_cmd = app.add_subcommand("closure", "Surfaces generated by mu, omega, phi within a budget");
    closure_cmd->add_option("--budget-open,--open", budget.open)->check(CLI::NonNegativeNumber);
    closure_cmd->add_option("--budget-closed,--closed", budget.closed)->check(CLI::NonNegativeNumber);
    closure_cmd->add_option("--budget-genus,--genus", budget.genus)->check(CLI::NonNegativeNumber);
    closure_cmd->add_option("--budget-boundaries,--boundaries", budget.boundaries, "Default: open budget + 1");
    closure_cmd->add_flag("--report", report, "Compare against the KP enumeration");
    closure_cmd->callback([&] {
        action = [&](Emitter& e) {
            if (!report) {
                const auto cl = generate_closure(budget);
                for (const auto& [s, t] : cl)
                    e.item({{"surface", to_json(s)}, {"witness", to_json(t)}}, to_string(s) + "  <-  " + to_string(t));
                e.summary(std::to_string(cl.size()) + " shapes reached");
                return 0;
            }
            const auto r = kp_reachability_report(budget);
            Json missing = Json::array(), extra = Json::array(), bad = Json::array();
            for (const auto& s : r.missing) missing.push_back(to_json(s));
            for (const auto& s : r.extra) extra.push_back(to_json(s));
            for (const auto& s : r.bad_witnesses) bad.push_back(to_json(s));
            Json j = {{"expected", r.expected}, {"reached", r.reached}, {"missing", missing},
                      {"extra", extra}, {"bad_witnesses", bad}, {"pass", r.ok()}};
            e.item(j, "expected " + std::to_string(r.expected) + ", reached " + std::to_string(r.reached) +
                          ", missing " + std::to_string(r.missing.size()) + ", extra " +
                          std::to_string(r.extra.size()));
            e.summary(verdict(r.ok()));
            return r.ok() ? 0 : 1;
        };
    });

    std::uint64_t seed = 0;
    std::size_t iters = 1000;
    auto* axioms_cmd = app.add_subcommand("check-axioms", "Randomized property suite");
    axioms_cmd->add_option("--seed", seed);
    axioms_cmd->add_option("--iters", iters)->check(CLI::PositiveNumber);
    axioms_cmd->callback([&] {
        action = [&](Emitter& e) {
            std::vector<PropertyResult> results = check_surface_axioms(seed, iters);
            auto nested = check_nested_axioms(seed, iters);
            results.insert(results.end(), nested.begin(), nested.end());
            results.push_back(check_alpha_beta(3, 2, 1));
            results.push_back(check_alpha_morphism(seed, iters));
            results.push_back(check_canon_congruence(seed, iters));
            results.push_back(check_rewrite_soundness(seed, iters).result);
            results.push_back(check_end_invariance(seed, std::min<std::size_t>(iters, 200), matrix_data(1)).result);
            std::size_t failed = 0;
            for (const auto& r : results) {
                Json j = {{"property", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"pass", r.ok()}};
                if (!r.ok()) j["first_failure"] = r.first_failure;
                e.item(j, verdict(r.ok()) + " " + r.name + " (" + std::to_string(r.cases) + " cases)");
                failed += r.ok() ? 0 : 1;
            }
            e.summary(std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
                      " properties hold, seed " + std::to_string(seed));
            return failed == 0 ? 0 : 1;
        };
    });

    // presentation
    std::string term_arg;
    auto* eval_cmd = app.add_subcommand("eval-term", "Evaluate a term to its surface");
    eval_cmd->add_option("TERM", term_arg)->required();
    eval_cmd->callback([&] {
        action = [&](Emitter& e) {
            const auto r = eval_term(term_from_json(load(term_arg)));
            e.item({{"surface", to_json(r.surface)}, {"kp", r.kp}}, to_string(r.surface));
            e.summary(r.kp ? "in the KP hybrid" : "not in the KP hybrid");
            return 0;
        };
    });

    std::string axiom_arg, path_arg;
    bool backward = false, list_sites = false;
    auto* rewrite_cmd = app.add_subcommand("rewrite", "Apply one axiom at a term position");
    rewrite_cmd->add_option("TERM", term_arg)->required();
    rewrite_cmd->add_option("--axiom", axiom_arg)->check(CLI::IsMember({"a1", "a2", "a3", "a4", "cardy"}));
    rewrite_cmd->add_option("--path", path_arg, "Child indices from the root, e.g. 0.1");
    rewrite_cmd->add_flag("--backward", backward);
    rewrite_cmd->add_flag("--list", list_sites, "List the legal steps instead");
    rewrite_cmd->callback([&] {
        action = [&](Emitter& e) {
            const Term t = term_from_json(load(term_arg));
            if (list_sites) {
                const auto sites = rewrite_sites(t);
                for (const auto& s : sites)
                    e.item({{"axiom", to_string(s.axiom)}, {"path", to_string(s.position)},
                            {"direction", to_string(s.direction)}},
                           std::string(to_string(s.axiom)) + " " + to_string(s.direction) + " at '" +
                               to_string(s.position) + "'");
                e.summary(std::to_string(sites.size()) + " legal steps");
                return 0;
            }
            if (axiom_arg.empty()) throw Error(Errc::Parse, "--axiom is required unless --list is given");
            FreshLabels fresh;
            const Term r = apply_axiom(t, {parse_axiom(axiom_arg), parse_path(path_arg),
                                           backward ? Direction::Backward : Direction::Forward},
                                       fresh);
            e.item({{"term", to_json(r)}}, to_string(r));
            e.summary("rewritten");
            return 0;
        };
    });

    // algebras
    auto* frob_cmd = app.add_subcommand("frobenius", "Open-closed algebra checks");
    frob_cmd->require_subcommand(1);
    std::string data_arg, term2_arg;
    auto* check_cmd = frob_cmd->add_subcommand("check", "Axioms and the Cardy identity");
    check_cmd->add_option("DATA", data_arg, "JSON data, a file, or scalar | m2 | m2:LAMBDA | diag:N")->required();
    check_cmd->callback([&] {
        action = [&](Emitter& e) {
            const auto r = check_open_closed(load_data(data_arg));
            for (const auto& l : r.lines) {
                Json j = {{"check", l.name}, {"pass", l.pass}};
                if (!l.detail.empty()) j["detail"] = l.detail;
                e.item(j, verdict(l.pass) + " " + l.name + (l.detail.empty() ? "" : "  " + l.detail));
            }
            e.summary(verdict(r.all_pass()));
            return r.all_pass() ? 0 : 1;
        };
    });
    auto* fe_cmd = frob_cmd->add_subcommand("eval-term", "Value of a term in End_{A,B}");
    fe_cmd->add_option("TERM", term_arg)->required();
    fe_cmd->add_option("DATA", data_arg)->required();
    fe_cmd->callback([&] {
        action = [&](Emitter& e) {
            const auto f = eval_term_end(term_from_json(load(term_arg)), load_data(data_arg));
            std::string text;
            for (const auto& v : f.values) text += (text.empty() ? "" : " ") + v.get_str();
            e.item(to_json(f), text);
            e.summary(std::to_string(f.values.size()) + " entries");
            return 0;
        };
    });
    auto* cmp_cmd = frob_cmd->add_subcommand("compare", "Do two terms with the same surface agree in End_{A,B}?");
    cmp_cmd->add_option("TERM1", term_arg)->required();
    cmp_cmd->add_option("TERM2", term2_arg)->required();
    cmp_cmd->add_option("DATA", data_arg)->required();
    cmp_cmd->callback([&] {
        action = [&](Emitter& e) {
            const auto v = end_well_definedness(term_from_json(load(term_arg)), term_from_json(load(term2_arg)),
                                                load_data(data_arg));
            Json j = {{"equal", v.equal}};
            if (v.witness) j["witness"] = *v.witness;
            if (!v.detail.empty()) j["detail"] = v.detail;
            e.item(j, v.equal ? "equal" : "unequal: " + v.detail);
            e.summary(v.equal ? "equal" : "unequal");
            return v.equal ? 0 : 1;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        Emitter emitter(out, format);
        return action(emitter);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace ocalc
