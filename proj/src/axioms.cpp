#include "ocalc/axioms.hpp"

#include <algorithm>
#include <functional>

#include "ocalc/error.hpp"

namespace ocalc {

// ---------------------------------------------------------------- sampling

Multicycle Sampler::multicycle(int labels, int cycles) {
    std::vector<std::vector<Label>> words(static_cast<std::size_t>(cycles));
    for (int i = 0; i < labels; ++i) words[static_cast<std::size_t>(uniform(0, cycles - 1))].push_back(open_label());
    std::vector<Cycle> out;
    for (auto& w : words) {
        std::shuffle(w.begin(), w.end(), rng_);
        out.push_back(canonical_cycle(std::move(w)));
    }
    return Multicycle(std::move(out));
}

Surface Sampler::surface(int min_open, int min_closed) {
    for (;;) {
        const int genus = coin(0.7) ? 0 : uniform(1, 2);
        const int open = uniform(min_open, min_open + 3);
        const int closed = uniform(min_closed, min_closed + 2);
        const int cycles = uniform(open > 0 ? 1 : 0, 3);
        if (4 * genus + 2 * cycles - 2 + closed < 0) continue;
        LabelSet cs;
        for (int i = 0; i < closed; ++i) cs.insert(closed_label());
        return Surface(multicycle(open, cycles), genus, std::move(cs));
    }
}

NestedSurface Sampler::nested(int min_open, int min_closed) {
    for (;;) {
        const int nests = uniform(min_open > 0 ? 1 : 0, 3);
        const int open = nests == 0 ? 0 : uniform(min_open, min_open + 3);
        const int closed = uniform(min_closed, min_closed + 2);
        const int outer = coin(0.8) ? 0 : 1;
        // spread the open labels over the nests
        std::vector<int> counts(static_cast<std::size_t>(nests), 0);
        for (int i = 0; i < open; ++i) ++counts[static_cast<std::size_t>(uniform(0, nests - 1))];
        std::vector<Nest> ns;
        for (int n : counts) ns.emplace_back(multicycle(n, uniform(1, 2)), coin(0.8) ? 0 : 1);
        LabelSet cs;
        for (int i = 0; i < closed; ++i) cs.insert(closed_label());
        try {
            return NestedSurface(std::move(ns), outer, std::move(cs));
        } catch (const Error&) {
            continue;
        }
    }
}

namespace {

Term generator_with(Sampler& s, Color c, Label& port) {
    if (c == Color::Open) {
        if (s.coin(0.6)) {
            port = s.open_label();
            return Term::mu(port, s.open_label(), s.open_label());
        }
        port = s.open_label();
        return Term::phi(port, s.closed_label());
    }
    if (s.coin(0.5)) {
        port = s.closed_label();
        return Term::omega(port, s.closed_label(), s.closed_label());
    }
    port = s.closed_label();
    return Term::phi(s.open_label(), port);
}

std::vector<Label> of_color(const std::map<Label, Color>& free, Color c) {
    std::vector<Label> out;
    for (const auto& [l, col] : free)
        if (col == c) out.push_back(l);
    return out;
}

}  // namespace

Term Sampler::term(int generators) {
    Label port("x");
    Term t = generator_with(*this, coin() ? Color::Open : Color::Closed, port);
    for (int n = 1; n < generators;) {
        const auto free = free_labels(t);
        if (coin(0.15)) {
            const Color c = coin() ? Color::Open : Color::Closed;
            auto ls = of_color(free, c);
            if (ls.size() >= 2 && free.size() > 2) {
                std::shuffle(ls.begin(), ls.end(), rng_);
                t = Term::contract(t, ls[0], ls[1]);
            }
            continue;
        }
        std::vector<std::pair<Label, Color>> ports(free.begin(), free.end());
        if (ports.empty()) break;
        const auto [l, c] = pick(ports);
        Label other("x");
        Term g = generator_with(*this, c, other);
        t = coin() ? Term::comp(t, g, l, other) : Term::comp(g, t, other, l);
        ++n;
    }
    return t;
}

// ---------------------------------------------------------------- modular-hybrid laws

namespace {

struct SurfaceOps {
    using X = Surface;
    static X sample(Sampler& s, int o, int c) { return s.surface(o, c); }
    static X compose(const X& x, const Label& a, const X& y, const Label& b) { return ocalc::compose(x, a, y, b); }
    static X contract(const X& x, const Label& a, const Label& b) { return ocalc::contract(x, a, b); }
    static int twice(const X& x) { return operadic_genus(x).value; }
    static bool stable(const X& x) { return is_stable(x); }
    static std::string show(const X& x) { return to_string(x); }
};

struct NestedOps {
    using X = NestedSurface;
    static X sample(Sampler& s, int o, int c) { return s.nested(o, c); }
    static X compose(const X& x, const Label& a, const X& y, const Label& b) { return mod_compose(x, a, y, b); }
    static X contract(const X& x, const Label& a, const Label& b) { return mod_contract(x, a, b); }
    static int twice(const X& x) { return operadic_genus(x).value; }
    static bool stable(const X& x) { return is_stable(x); }
    static std::string show(const X& x) { return to_string(x); }
};

template <class X>
std::vector<Label> labels_of(const X& x, Color c) {
    if (c == Color::Closed) return {x.closed().begin(), x.closed().end()};
    auto o = x.open_labels();
    return {o.begin(), o.end()};
}

// Sample with at least `n` labels of color `c` (plus `n2` of `c2`).
template <class Ops>
typename Ops::X sample_with(Sampler& s, Color c, int n, Color c2 = Color::Open, int n2 = 0) {
    int open = 0, closed = 0;
    (c == Color::Open ? open : closed) += n;
    (c2 == Color::Open ? open : closed) += n2;
    return Ops::sample(s, open, closed);
}

// Distinct labels of color c from x, shuffled.
template <class X>
std::vector<Label> draw(Sampler& s, const X& x, Color c, std::size_t n) {
    auto ls = labels_of(x, c);
    std::shuffle(ls.begin(), ls.end(), s.engine());
    if (ls.size() > n) ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(n), ls.end());
    return ls;
}

Color any_color(Sampler& s) { return s.coin() ? Color::Open : Color::Closed; }

template <class Ops>
void run_law(PropertyResult& r, std::size_t iters, const std::function<void(PropertyResult&)>& body) {
    for (std::size_t i = 0; i < iters; ++i) {
        ++r.cases;
        try {
            body(r);
        } catch (const Error& e) {
            r.fail(std::string("unexpected error: ") + e.what());
        }
    }
}

template <class Ops>
std::vector<PropertyResult> modular_laws(std::uint64_t seed, std::size_t iters, const std::string& prefix) {
    using X = typename Ops::X;
    Sampler s(seed);
    std::vector<PropertyResult> out;
    auto law = [&](const std::string& name, const std::function<void(PropertyResult&)>& body) {
        PropertyResult r{prefix + name};
        run_law<Ops>(r, iters, body);
        out.push_back(std::move(r));
    };

    law("associativity_sequential", [&](PropertyResult& r) {
        const Color c1 = any_color(s), c2 = any_color(s);
        const X x = sample_with<Ops>(s, c1, 1);
        const X y = c1 == c2 ? sample_with<Ops>(s, c1, 2) : sample_with<Ops>(s, c1, 1, c2, 1);
        const X z = sample_with<Ops>(s, c2, 1);
        const Label a = draw(s, x, c1, 1)[0];
        const Label b = draw(s, y, c1, 1)[0];
        auto cs = labels_of(y, c2);
        cs.erase(std::remove(cs.begin(), cs.end(), b), cs.end());
        const Label c = s.pick(cs);
        const Label d = draw(s, z, c2, 1)[0];
        const X lhs = Ops::compose(Ops::compose(x, a, y, b), c, z, d);
        const X rhs = Ops::compose(x, a, Ops::compose(y, c, z, d), b);
        if (lhs != rhs) r.fail(Ops::show(lhs) + " != " + Ops::show(rhs));
    });

    law("associativity_parallel", [&](PropertyResult& r) {
        const Color c1 = any_color(s), c2 = any_color(s);
        const X x = c1 == c2 ? sample_with<Ops>(s, c1, 2) : sample_with<Ops>(s, c1, 1, c2, 1);
        const X y = sample_with<Ops>(s, c1, 1);
        const X z = sample_with<Ops>(s, c2, 1);
        const Label a = draw(s, x, c1, 1)[0];
        auto cs = labels_of(x, c2);
        cs.erase(std::remove(cs.begin(), cs.end(), a), cs.end());
        const Label c = s.pick(cs);
        const Label b = draw(s, y, c1, 1)[0];
        const Label d = draw(s, z, c2, 1)[0];
        const X lhs = Ops::compose(Ops::compose(x, a, y, b), c, z, d);
        const X rhs = Ops::compose(Ops::compose(x, c, z, d), a, y, b);
        if (lhs != rhs) r.fail(Ops::show(lhs) + " != " + Ops::show(rhs));
    });

    law("commutativity", [&](PropertyResult& r) {
        const Color c = any_color(s);
        const X x = sample_with<Ops>(s, c, 1), y = sample_with<Ops>(s, c, 1);
        const Label a = draw(s, x, c, 1)[0], b = draw(s, y, c, 1)[0];
        if (Ops::compose(x, a, y, b) != Ops::compose(y, b, x, a)) r.fail(Ops::show(x) + " , " + Ops::show(y));
    });

    law("contraction_commutation", [&](PropertyResult& r) {
        const Color c1 = any_color(s), c2 = any_color(s);
        const X x = c1 == c2 ? sample_with<Ops>(s, c1, 4) : sample_with<Ops>(s, c1, 2, c2, 2);
        std::vector<Label> p, q;
        if (c1 == c2) {
            auto ls = draw(s, x, c1, 4);
            p = {ls[0], ls[1]};
            q = {ls[2], ls[3]};
        } else {
            p = draw(s, x, c1, 2);
            q = draw(s, x, c2, 2);
        }
        const X lhs = Ops::contract(Ops::contract(x, p[0], p[1]), q[0], q[1]);
        const X rhs = Ops::contract(Ops::contract(x, q[0], q[1]), p[0], p[1]);
        if (lhs != rhs) r.fail(Ops::show(x));
    });

    law("interchange_outer", [&](PropertyResult& r) {
        // ξ_{a,b}(x ∘_{u,v} y) = (ξ_{a,b} x) ∘_{u,v} y
        const Color cu = any_color(s), ca = any_color(s);
        const X x = cu == ca ? sample_with<Ops>(s, cu, 3) : sample_with<Ops>(s, cu, 1, ca, 2);
        const X y = sample_with<Ops>(s, cu, 1);
        Label u("x"), a("x"), b("x");
        if (cu == ca) {
            auto ls = draw(s, x, cu, 3);
            u = ls[0], a = ls[1], b = ls[2];
        } else {
            u = draw(s, x, cu, 1)[0];
            auto ls = draw(s, x, ca, 2);
            a = ls[0], b = ls[1];
        }
        const Label v = draw(s, y, cu, 1)[0];
        const X lhs = Ops::contract(Ops::compose(x, u, y, v), a, b);
        const X rhs = Ops::compose(Ops::contract(x, a, b), u, y, v);
        if (lhs != rhs) r.fail(Ops::show(x) + " , " + Ops::show(y));
    });

    law("interchange_double", [&](PropertyResult& r) {
        // ξ_{a,b}(x ∘_{u,v} y) = ξ_{u,v}(x ∘_{a,b} y)
        const Color cu = any_color(s), ca = any_color(s);
        const X x = cu == ca ? sample_with<Ops>(s, cu, 2) : sample_with<Ops>(s, cu, 1, ca, 1);
        const X y = cu == ca ? sample_with<Ops>(s, cu, 2) : sample_with<Ops>(s, cu, 1, ca, 1);
        Label u("x"), a("x"), v("x"), b("x");
        if (cu == ca) {
            auto lx = draw(s, x, cu, 2), ly = draw(s, y, cu, 2);
            u = lx[0], a = lx[1], v = ly[0], b = ly[1];
        } else {
            u = draw(s, x, cu, 1)[0], a = draw(s, x, ca, 1)[0];
            v = draw(s, y, cu, 1)[0], b = draw(s, y, ca, 1)[0];
        }
        const X lhs = Ops::contract(Ops::compose(x, u, y, v), a, b);
        const X rhs = Ops::contract(Ops::compose(x, a, y, b), u, v);
        if (lhs != rhs) r.fail(Ops::show(x) + " , " + Ops::show(y));
    });

    law("genus_additivity", [&](PropertyResult& r) {
        const Color c = any_color(s);
        const X x = sample_with<Ops>(s, c, 1), y = sample_with<Ops>(s, c, 1);
        const X z = Ops::compose(x, draw(s, x, c, 1)[0], y, draw(s, y, c, 1)[0]);
        if (Ops::twice(z) != Ops::twice(x) + Ops::twice(y)) r.fail(Ops::show(x) + " , " + Ops::show(y));
    });

    law("contraction_genus_shift", [&](PropertyResult& r) {
        const Color c = any_color(s);
        const X x = sample_with<Ops>(s, c, 2);
        const auto ls = draw(s, x, c, 2);
        if (Ops::twice(Ops::contract(x, ls[0], ls[1])) != Ops::twice(x) + 2) r.fail(Ops::show(x));
    });

    law("stability_closure", [&](PropertyResult& r) {
        const Color c = any_color(s);
        X x = sample_with<Ops>(s, c, 2), y = sample_with<Ops>(s, c, 1);
        while (!Ops::stable(x)) x = sample_with<Ops>(s, c, 2);
        while (!Ops::stable(y)) y = sample_with<Ops>(s, c, 1);
        const X z = Ops::compose(x, draw(s, x, c, 1)[0], y, draw(s, y, c, 1)[0]);
        const auto ls = draw(s, x, c, 2);
        const X w = Ops::contract(x, ls[0], ls[1]);
        if (!Ops::stable(z) || !Ops::stable(w)) r.fail(Ops::show(x) + " , " + Ops::show(y));
    });
    return out;
}

}  // namespace

std::vector<PropertyResult> check_surface_axioms(std::uint64_t seed, std::size_t iters) {
    auto out = modular_laws<SurfaceOps>(seed, iters, "surface.");
    Sampler s(seed ^ 0x5eedu);

    PropertyResult eq{"surface.equivariance"};
    run_law<SurfaceOps>(eq, iters, [&](PropertyResult& r) {
        const Color c = any_color(s);
        const Surface x = sample_with<SurfaceOps>(s, c, 1), y = sample_with<SurfaceOps>(s, c, 1);
        const Label a = draw(s, x, c, 1)[0], b = draw(s, y, c, 1)[0];
        std::map<Label, Label> rho;
        for (const auto& l : x.labels()) rho.emplace(l, x.color_of(l) == Color::Open ? s.open_label() : s.closed_label());
        for (const auto& l : y.labels()) rho.emplace(l, y.color_of(l) == Color::Open ? s.open_label() : s.closed_label());
        const Surface lhs = relabel(compose(x, a, y, b), rho);
        const Surface rhs = compose(relabel(x, rho), rho.at(a), relabel(y, rho), rho.at(b));
        if (lhs != rhs) r.fail(to_string(lhs) + " != " + to_string(rhs));
    });
    out.push_back(std::move(eq));

    PropertyResult kp{"surface.cyclic_kp_composition_closure"};
    run_law<SurfaceOps>(kp, iters, [&](PropertyResult& r) {
        const Color c = any_color(s);
        auto draw_kp = [&] {
            for (;;) {
                Surface x = sample_with<SurfaceOps>(s, c, 1);
                if (x.genus() == 0 && is_kp(x)) return x;
            }
        };
        const Surface x = draw_kp(), y = draw_kp();
        const Surface z = compose(x, draw(s, x, c, 1)[0], y, draw(s, y, c, 1)[0]);
        if (!is_kp(z)) r.fail(to_string(x) + " , " + to_string(y) + " -> " + to_string(z));
    });
    out.push_back(std::move(kp));
    return out;
}

std::vector<PropertyResult> check_nested_axioms(std::uint64_t seed, std::size_t iters) {
    auto out = modular_laws<NestedOps>(seed, iters, "nested.");
    Sampler s(seed ^ 0x5eedu);
    PropertyResult kp{"nested.kp_closure"};
    run_law<NestedOps>(kp, iters, [&](PropertyResult& r) {
        const Color c = any_color(s);
        auto draw_kp = [&](int n) {
            for (;;) {
                NestedSurface x = sample_with<NestedOps>(s, c, n);
                if (is_kp(x)) return x;
            }
        };
        const NestedSurface x = draw_kp(2), y = draw_kp(1);
        const NestedSurface z = mod_compose(x, draw(s, x, c, 1)[0], y, draw(s, y, c, 1)[0]);
        const auto ls = draw(s, x, c, 2);
        const NestedSurface w = mod_contract(x, ls[0], ls[1]);
        if (!is_kp(z)) r.fail(to_string(x) + " , " + to_string(y) + " -> " + to_string(z));
        if (!is_kp(w)) r.fail(to_string(x) + " -> " + to_string(w));
    });
    out.push_back(std::move(kp));
    return out;
}

// ---------------------------------------------------------------- alpha / beta / canon

PropertyResult check_alpha_beta(int max_open, int max_closed, int max_genus) {
    PropertyResult r{"alpha_beta_identity"};
    for (int o = 0; o <= max_open; ++o)
        for (int c = 0; c <= max_closed; ++c) {
            LabelSet open, closed;
            for (int i = 1; i <= o; ++i) open.emplace("p" + std::to_string(i));
            for (int i = 1; i <= c; ++i) closed.emplace("c" + std::to_string(i));
            // b <= o + 1 keeps the enumeration finite
            const int max_twice = 4 * max_genus + 2 * (o + 1) - 2 + c;
            for (int t = 0; t <= max_twice; ++t)
                for (const auto& x : enumerate_qoc(open, closed, {t})) {
                    if (x.genus() > max_genus) continue;
                    ++r.cases;
                    if (alpha(beta(x)) != x) r.fail(to_string(x));
                }
        }
    return r;
}

PropertyResult check_alpha_morphism(std::uint64_t seed, std::size_t iters) {
    PropertyResult r{"alpha_morphism"};
    Sampler s(seed);
    run_law<NestedOps>(r, iters, [&](PropertyResult& res) {
        const Color c = any_color(s);
        const NestedSurface x = sample_with<NestedOps>(s, c, 2), y = sample_with<NestedOps>(s, c, 1);
        const Label a = draw(s, x, c, 1)[0], b = draw(s, y, c, 1)[0];
        if (alpha(mod_compose(x, a, y, b)) != compose(alpha(x), a, alpha(y), b))
            res.fail("compose: " + to_string(x) + " , " + to_string(y));
        const auto ls = draw(s, x, c, 2);
        if (alpha(mod_contract(x, ls[0], ls[1])) != contract(alpha(x), ls[0], ls[1]))
            res.fail("contract: " + to_string(x));
    });
    return r;
}

PropertyResult check_canon_congruence(std::uint64_t seed, std::size_t iters) {
    PropertyResult r{"canon_congruence"};
    Sampler s(seed);
    run_law<NestedOps>(r, iters, [&](PropertyResult& res) {
        const Color c = any_color(s);
        const NestedSurface x = sample_with<NestedOps>(s, c, 2), y = sample_with<NestedOps>(s, c, 1);
        if (canon_mod(canon_mod(x)) != canon_mod(x)) res.fail("idempotence: " + to_string(x));
        const Label a = draw(s, x, c, 1)[0], b = draw(s, y, c, 1)[0];
        if (canon_mod(mod_compose(x, a, y, b)) != canon_mod(mod_compose(canon_mod(x), a, canon_mod(y), b)))
            res.fail("compose: " + to_string(x) + " , " + to_string(y));
        const auto ls = draw(s, x, c, 2);
        if (canon_mod(mod_contract(x, ls[0], ls[1])) != canon_mod(mod_contract(canon_mod(x), ls[0], ls[1])))
            res.fail("contract: " + to_string(x));
    });
    return r;
}

// ---------------------------------------------------------------- rewriting

namespace {

template <class Check>
RewriteStats rewrite_walk(const std::string& name, std::uint64_t seed, std::size_t steps, int max_generators,
                          Check&& check) {
    RewriteStats st{PropertyResult(name), {}};
    Sampler s(seed);
    FreshLabels fresh;
    while (st.result.cases < steps) {
        Term t = s.term(s.uniform(2, max_generators));
        for (int walk = 0; walk < 6 && st.result.cases < steps; ++walk) {
            const auto sites = rewrite_sites(t);
            if (sites.empty()) break;
            const RewriteStep step = s.pick(sites);
            ++st.result.cases;
            try {
                Term next = apply_axiom(t, step, fresh);
                ++st.applied[step.axiom];
                check(st.result, t, next, step);
                t = std::move(next);
            } catch (const Error& e) {
                st.result.fail(std::string("error: ") + e.what() + " on " + to_string(t));
                break;
            }
        }
    }
    return st;
}

std::string describe(const RewriteStep& step, const Term& t) {
    return std::string(to_string(step.axiom)) + " " + to_string(step.direction) + " at '" +
           to_string(step.position) + "' on " + to_string(t);
}

}  // namespace

RewriteStats check_rewrite_soundness(std::uint64_t seed, std::size_t steps) {
    return rewrite_walk("rewrite_soundness", seed, steps, 5,
                        [](PropertyResult& r, const Term& before, const Term& after, const RewriteStep& step) {
                            if (free_labels(before) != free_labels(after))
                                r.fail("interface changed: " + describe(step, before));
                            else if (eval_term(before).surface != eval_term(after).surface)
                                r.fail("surface changed: " + describe(step, before));
                        });
}

RewriteStats check_end_invariance(std::uint64_t seed, std::size_t steps, const OpenClosedData& data) {
    return rewrite_walk("end_invariance", seed, steps, 3,
                        [&](PropertyResult& r, const Term& before, const Term& after, const RewriteStep& step) {
                            if (sorted_slots(eval_term_end(before, data)) != sorted_slots(eval_term_end(after, data)))
                                r.fail("End value changed: " + describe(step, before));
                        });
}

}  // namespace ocalc
