#include "ocalc/presentation.hpp"

#include <algorithm>

#include "ocalc/error.hpp"

namespace ocalc {

namespace {

Surface eval_surface(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Mu: return Surface(Multicycle({canonical_cycle(t.legs())}), 0);
    case Term::Kind::Omega: return Surface(Multicycle(), 0, LabelSet(t.legs().begin(), t.legs().end()));
    case Term::Kind::Phi: return Surface(Multicycle({canonical_cycle({t.legs()[0]})}), 0, {t.legs()[1]});
    case Term::Kind::Comp: return compose(eval_surface(t.left()), t.u(), eval_surface(t.right()), t.v());
    case Term::Kind::Contract: return contract(eval_surface(t.body()), t.u(), t.v());
    }
    throw Error(Errc::MalformedTerm, "unknown term kind");
}

std::vector<Label> rotate(const Term& mu, const Label& l) { return canonical_cycle(mu.legs()).rotated_to(l); }

bool has_leg(const Term& g, const Label& l) {
    return std::find(g.legs().begin(), g.legs().end(), l) != g.legs().end();
}

std::vector<Label> others(const Term& g, const Label& l) {
    std::vector<Label> out;
    for (const auto& x : g.legs())
        if (x != l) out.push_back(x);
    return out;
}

bool is(const Term& t, Term::Kind k) { return t.kind() == k; }

struct Fresh {
    FreshLabels& supply;
    LabelSet avoid;
    Label operator()() {
        auto l = supply.next(avoid);
        avoid.insert(l);
        return l;
    }
};

// μ⟨pqr⟩ ∘_{r,s} μ⟨stu⟩ = μ⟨pru⟩ ∘_{r,s} μ⟨qts⟩
std::optional<Term> rewrite_a1(const Term& t, Direction dir) {
    if (!is(t, Term::Kind::Comp) || !is(t.left(), Term::Kind::Mu) || !is(t.right(), Term::Kind::Mu)) return {};
    const Label& a = t.u();
    const Label& b = t.v();
    if (!has_leg(t.left(), a) || !has_leg(t.right(), b)) return {};
    const auto wl = rotate(t.left(), a);
    const auto wr = rotate(t.right(), b);
    if (dir == Direction::Forward) {
        // wl = (r, p, q), wr = (s, t, u)
        return Term::comp(Term::mu(wl[1], a, wr[2]), Term::mu(wl[2], wr[1], b), a, b);
    }
    // wl = (r, u, p), wr = (s, q, t)
    return Term::comp(Term::mu(wl[2], wr[1], a), Term::mu(b, wr[2], wl[1]), a, b);
}

// ω{d,e,f} ∘_{f,g} ω{g,h,i} = ω{d,f,i} ∘_{f,g} ω{e,h,g}
std::optional<Term> rewrite_a2(const Term& t, Direction dir) {
    if (!is(t, Term::Kind::Comp) || !is(t.left(), Term::Kind::Omega) || !is(t.right(), Term::Kind::Omega)) return {};
    const Label& a = t.u();
    const Label& b = t.v();
    if (!has_leg(t.left(), a) || !has_leg(t.right(), b)) return {};
    const auto ol = others(t.left(), a);
    const auto orr = others(t.right(), b);
    if (dir == Direction::Forward)
        return Term::comp(Term::omega(ol[0], a, orr[1]), Term::omega(ol[1], orr[0], b), a, b);
    return Term::comp(Term::omega(ol[0], orr[0], a), Term::omega(b, orr[1], ol[1]), a, b);
}

// φ(p,g) ∘_{g,f} ω{d,e,f} = (μ⟨pqr⟩ ∘_{q,s} φ(s,d)) ∘_{r,t} φ(t,e)
std::optional<Term> rewrite_a3(const Term& t, Direction dir, Fresh& fresh) {
    if (!is(t, Term::Kind::Comp)) return {};
    if (dir == Direction::Forward) {
        if (!is(t.left(), Term::Kind::Phi) || !is(t.right(), Term::Kind::Omega)) return {};
        if (t.left().legs()[1] != t.u() || !has_leg(t.right(), t.v())) return {};
        const Label& p = t.left().legs()[0];
        const auto de = others(t.right(), t.v());
        const Label q = fresh(), r = fresh(), s = fresh(), tt = fresh();
        return Term::comp(Term::comp(Term::mu(p, q, r), Term::phi(s, de[0]), q, s), Term::phi(tt, de[1]), r, tt);
    }
    const Term& inner = t.left();
    if (!is(inner, Term::Kind::Comp) || !is(t.right(), Term::Kind::Phi)) return {};
    const Term& m = inner.left();
    const Term& phi1 = inner.right();
    if (!is(m, Term::Kind::Mu) || !is(phi1, Term::Kind::Phi)) return {};
    const Label& q = inner.u();
    const Label& r = t.u();
    if (!has_leg(m, q) || phi1.legs()[0] != inner.v()) return {};
    if (q == r || !has_leg(m, r) || t.right().legs()[0] != t.v()) return {};
    // the μ cyclic order only decides which closed leg sits where; ω is symmetric
    const Label p = others(m, q)[0] == r ? others(m, q)[1] : others(m, q)[0];
    const Label g = fresh(), f = fresh();
    return Term::comp(Term::phi(p, g), Term::omega(phi1.legs()[1], t.right().legs()[1], f), g, f);
}

// μ⟨pqr⟩ ∘_{q,s} φ(s,d) = μ⟨prq⟩ ∘_{q,s} φ(s,d)
std::optional<Term> rewrite_a4(const Term& t) {
    if (!is(t, Term::Kind::Comp) || !is(t.left(), Term::Kind::Mu) || !is(t.right(), Term::Kind::Phi)) return {};
    if (!has_leg(t.left(), t.u()) || t.right().legs()[0] != t.v()) return {};
    const auto w = rotate(t.left(), t.u());  // (q, r, p)
    return Term::comp(Term::mu(w[2], w[1], w[0]), t.right(), t.u(), t.v());
}

// ξ_{u,v}(μ⟨uqa⟩ ∘_{a,b} μ⟨bvr⟩) = φ(q,c) ∘_{c,d} φ(r,d)
std::optional<Term> rewrite_cardy(const Term& t, Direction dir, Fresh& fresh) {
    if (dir == Direction::Forward) {
        if (!is(t, Term::Kind::Contract)) return {};
        const Term& c = t.body();
        if (!is(c, Term::Kind::Comp) || !is(c.left(), Term::Kind::Mu) || !is(c.right(), Term::Kind::Mu)) return {};
        if (!has_leg(c.left(), c.u()) || !has_leg(c.right(), c.v())) return {};
        const auto wl = rotate(c.left(), c.u());   // (a, u, q)
        const auto wr = rotate(c.right(), c.v());  // (b, v, r)
        const bool direct = t.u() == wl[1] && t.v() == wr[1];
        const bool swapped = t.v() == wl[1] && t.u() == wr[1];
        if (!direct && !swapped) return {};
        const Label cc = fresh(), d = fresh();
        return Term::comp(Term::phi(wl[2], cc), Term::phi(wr[2], d), cc, d);
    }
    if (!is(t, Term::Kind::Comp) || !is(t.left(), Term::Kind::Phi) || !is(t.right(), Term::Kind::Phi)) return {};
    if (t.left().legs()[1] != t.u() || t.right().legs()[1] != t.v()) return {};
    const Label u = fresh(), v = fresh(), a = fresh(), b = fresh();
    return cardy_lhs(t.left().legs()[0], t.right().legs()[0], u, v, a, b);
}

}  // namespace

Evaluation eval_term(const Term& t) {
    free_labels(t);
    auto s = eval_surface(t);
    const bool kp = is_modular_kp(s);
    return {std::move(s), kp};
}

const char* to_string(Axiom a) {
    switch (a) {
    case Axiom::A1: return "a1";
    case Axiom::A2: return "a2";
    case Axiom::A3: return "a3";
    case Axiom::A4: return "a4";
    case Axiom::Cardy: return "cardy";
    }
    return "?";
}

const char* to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

Axiom parse_axiom(std::string_view text) {
    for (auto a : all_axioms)
        if (text == to_string(a)) return a;
    if (text == "A1") return Axiom::A1;
    if (text == "A2") return Axiom::A2;
    if (text == "A3") return Axiom::A3;
    if (text == "A4") return Axiom::A4;
    if (text == "Cardy") return Axiom::Cardy;
    throw Error(Errc::Parse, "unknown axiom '" + std::string(text) + "'");
}

Label FreshLabels::next(const LabelSet& avoid) {
    while (next_ < limit_) {
        Label l("#" + std::to_string(next_++));
        if (!avoid.contains(l)) return l;
    }
    throw Error(Errc::FreshExhausted, "fresh label supply exhausted at #" + std::to_string(limit_));
}

std::optional<Term> rewrite_site(const Term& site, Axiom axiom, Direction dir, FreshLabels& fresh,
                                 const LabelSet& avoid) {
    Fresh f{fresh, avoid};
    switch (axiom) {
    case Axiom::A1: return rewrite_a1(site, dir);
    case Axiom::A2: return rewrite_a2(site, dir);
    case Axiom::A3: return rewrite_a3(site, dir, f);
    case Axiom::A4: return rewrite_a4(site);
    case Axiom::Cardy: return rewrite_cardy(site, dir, f);
    }
    return {};
}

Term apply_axiom(const Term& t, const RewriteStep& step, FreshLabels& fresh) {
    free_labels(t);
    const Term& site = subterm(t, step.position);
    auto out = rewrite_site(site, step.axiom, step.direction, fresh, all_labels(t));
    if (!out)
        throw Error(Errc::PatternMismatch, std::string("axiom ") + to_string(step.axiom) + " (" +
                                               to_string(step.direction) + ") does not match at '" +
                                               to_string(step.position) + "': " + to_string(site));
    return replace_subterm(t, step.position, std::move(*out));
}

std::vector<RewriteStep> rewrite_sites(const Term& t) {
    std::vector<RewriteStep> out;
    const auto avoid = all_labels(t);
    for (const auto& pos : all_positions(t)) {
        const Term& site = subterm(t, pos);
        for (auto a : all_axioms)
            for (auto d : {Direction::Forward, Direction::Backward}) {
                FreshLabels scratch;
                if (rewrite_site(site, a, d, scratch, avoid)) out.push_back({a, pos, d});
            }
    }
    return out;
}

Term cardy_lhs(const Label& q, const Label& r, const Label& u, const Label& v, const Label& a, const Label& b) {
    return Term::contract(Term::comp(Term::mu(u, q, a), Term::mu(b, v, r), a, b), u, v);
}

Term cardy_rhs(const Label& q, const Label& r, const Label& c, const Label& d) {
    return Term::comp(Term::phi(q, c), Term::phi(r, d), c, d);
}

}  // namespace ocalc
