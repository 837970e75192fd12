#include "ocalc/term.hpp"

#include <algorithm>
#include <charconv>

#include "ocalc/error.hpp"

namespace ocalc {

namespace {

void require_distinct(const std::vector<Label>& legs) {
    for (std::size_t i = 0; i < legs.size(); ++i)
        for (std::size_t j = i + 1; j < legs.size(); ++j)
            if (legs[i] == legs[j]) throw Error(Errc::MalformedTerm, "generator leg '" + legs[i].token() + "' repeated");
}

}  // namespace

Term Term::mu(Label p, Label q, Label r) {
    std::vector<Label> legs{std::move(p), std::move(q), std::move(r)};
    require_distinct(legs);
    legs = canonical_cycle(std::move(legs)).word();
    return Term(std::make_shared<const Node>(Node{Kind::Mu, std::move(legs), {}}));
}

Term Term::omega(Label d, Label e, Label f) {
    std::vector<Label> legs{std::move(d), std::move(e), std::move(f)};
    require_distinct(legs);
    std::sort(legs.begin(), legs.end());
    return Term(std::make_shared<const Node>(Node{Kind::Omega, std::move(legs), {}}));
}

Term Term::phi(Label p, Label d) {
    std::vector<Label> legs{std::move(p), std::move(d)};
    require_distinct(legs);
    return Term(std::make_shared<const Node>(Node{Kind::Phi, std::move(legs), {}}));
}

Term Term::comp(Term left, Term right, Label u, Label v) {
    return Term(std::make_shared<const Node>(
        Node{Kind::Comp, {std::move(u), std::move(v)}, {std::move(left), std::move(right)}}));
}

Term Term::contract(Term body, Label u, Label v) {
    return Term(std::make_shared<const Node>(Node{Kind::Contract, {std::move(u), std::move(v)}, {std::move(body)}}));
}

const std::vector<Label>& Term::legs() const {
    if (!is_generator()) throw Error(Errc::MalformedTerm, "legs() on a non-generator");
    return node_->labels;
}

const Label& Term::u() const {
    if (is_generator()) throw Error(Errc::MalformedTerm, "u() on a generator");
    return node_->labels[0];
}

const Label& Term::v() const {
    if (is_generator()) throw Error(Errc::MalformedTerm, "v() on a generator");
    return node_->labels[1];
}

const Term& Term::left() const { return child(0); }

const Term& Term::right() const {
    if (kind() != Kind::Comp) throw Error(Errc::MalformedTerm, "right() on a non-composition");
    return child(1);
}

const Term& Term::child(std::size_t i) const {
    if (i >= node_->children.size()) throw Error(Errc::MalformedTerm, "no child " + std::to_string(i));
    return node_->children[i];
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    return a.node_->kind == b.node_->kind && a.node_->labels == b.node_->labels &&
           a.node_->children == b.node_->children;
}

std::string to_string(const Term& t) {
    auto join = [](const std::vector<Label>& ls) {
        std::string out;
        for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? " " : "") + ls[i].token();
        return out;
    };
    switch (t.kind()) {
    case Term::Kind::Mu: return "mu(" + join(t.legs()) + ")";
    case Term::Kind::Omega: return "omega(" + join(t.legs()) + ")";
    case Term::Kind::Phi: return "phi(" + join(t.legs()) + ")";
    case Term::Kind::Comp:
        return "comp(" + to_string(t.left()) + ", " + to_string(t.right()) + ", " + t.u().token() + ", " +
               t.v().token() + ")";
    case Term::Kind::Contract:
        return "xi(" + to_string(t.body()) + ", " + t.u().token() + ", " + t.v().token() + ")";
    }
    return "?";
}

namespace {

std::map<Label, Color> free_labels_rec(const Term& t, LabelSet& seen) {
    auto claim = [&](const Label& l) {
        if (!seen.insert(l).second) throw Error(Errc::MalformedTerm, "label '" + l.token() + "' used twice");
    };
    std::map<Label, Color> out;
    switch (t.kind()) {
    case Term::Kind::Mu:
    case Term::Kind::Omega: {
        const Color c = t.kind() == Term::Kind::Mu ? Color::Open : Color::Closed;
        for (const auto& l : t.legs()) {
            claim(l);
            out.emplace(l, c);
        }
        return out;
    }
    case Term::Kind::Phi:
        claim(t.legs()[0]);
        claim(t.legs()[1]);
        out.emplace(t.legs()[0], Color::Open);
        out.emplace(t.legs()[1], Color::Closed);
        return out;
    case Term::Kind::Comp: {
        auto l = free_labels_rec(t.left(), seen);
        auto r = free_labels_rec(t.right(), seen);
        auto lu = l.find(t.u());
        auto rv = r.find(t.v());
        if (lu == l.end()) throw Error(Errc::MalformedTerm, "'" + t.u().token() + "' is not free in the left operand");
        if (rv == r.end()) throw Error(Errc::MalformedTerm, "'" + t.v().token() + "' is not free in the right operand");
        if (lu->second != rv->second)
            throw Error(Errc::MalformedTerm, "cannot glue '" + t.u().token() + "' to '" + t.v().token() + "' across colors");
        l.erase(lu);
        r.erase(rv);
        l.merge(r);
        return l;
    }
    case Term::Kind::Contract: {
        auto b = free_labels_rec(t.body(), seen);
        if (t.u() == t.v()) throw Error(Errc::MalformedTerm, "contraction of '" + t.u().token() + "' with itself");
        auto bu = b.find(t.u());
        auto bv = b.find(t.v());
        if (bu == b.end() || bv == b.end())
            throw Error(Errc::MalformedTerm, "contracted labels must be free in the body");
        if (bu->second != bv->second)
            throw Error(Errc::MalformedTerm, "cannot contract '" + t.u().token() + "' with '" + t.v().token() + "' across colors");
        b.erase(t.u());
        b.erase(t.v());
        return b;
    }
    }
    return out;
}

void collect(const Term& t, LabelSet& out) {
    if (t.is_generator()) {
        out.insert(t.legs().begin(), t.legs().end());
        return;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) collect(t.child(i), out);
}

}  // namespace

std::map<Label, Color> free_labels(const Term& t) {
    LabelSet seen;
    return free_labels_rec(t, seen);
}

LabelSet all_labels(const Term& t) {
    LabelSet out;
    collect(t, out);
    return out;
}

Term rename_labels(const Term& t, const std::function<Label(const Label&)>& rename) {
    switch (t.kind()) {
    case Term::Kind::Mu: {
        // keep the cyclic order of the written legs, not their sorted rotation
        const auto& l = t.legs();
        return Term::mu(rename(l[0]), rename(l[1]), rename(l[2]));
    }
    case Term::Kind::Omega: return Term::omega(rename(t.legs()[0]), rename(t.legs()[1]), rename(t.legs()[2]));
    case Term::Kind::Phi: return Term::phi(rename(t.legs()[0]), rename(t.legs()[1]));
    case Term::Kind::Comp:
        return Term::comp(rename_labels(t.left(), rename), rename_labels(t.right(), rename), rename(t.u()),
                          rename(t.v()));
    case Term::Kind::Contract: return Term::contract(rename_labels(t.body(), rename), rename(t.u()), rename(t.v()));
    }
    return t;
}

std::size_t generator_count(const Term& t) {
    if (t.is_generator()) return 1;
    std::size_t n = 0;
    for (std::size_t i = 0; i < t.arity(); ++i) n += generator_count(t.child(i));
    return n;
}

TermPath parse_path(std::string_view text) {
    TermPath out;
    if (text.empty() || text == ".") return out;
    std::size_t i = 0;
    while (i <= text.size()) {
        auto dot = text.find('.', i);
        if (dot == std::string_view::npos) dot = text.size();
        auto piece = text.substr(i, dot - i);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw Error(Errc::Parse, "bad term path '" + std::string(text) + "'");
        out.push_back(value);
        i = dot + 1;
    }
    return out;
}

std::string to_string(const TermPath& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "." : "") + std::to_string(p[i]);
    return out;
}

const Term& subterm(const Term& t, const TermPath& p) {
    const Term* cur = &t;
    for (auto i : p) {
        if (cur->is_generator() || i >= cur->arity())
            throw Error(Errc::PatternMismatch, "path " + to_string(p) + " leaves the term");
        cur = &cur->child(i);
    }
    return *cur;
}

namespace {

Term replace_rec(const Term& t, const TermPath& p, std::size_t depth, Term replacement) {
    if (depth == p.size()) return replacement;
    if (t.is_generator() || p[depth] >= t.arity())
        throw Error(Errc::PatternMismatch, "path " + to_string(p) + " leaves the term");
    if (t.kind() == Term::Kind::Contract)
        return Term::contract(replace_rec(t.body(), p, depth + 1, std::move(replacement)), t.u(), t.v());
    if (p[depth] == 0)
        return Term::comp(replace_rec(t.left(), p, depth + 1, std::move(replacement)), t.right(), t.u(), t.v());
    return Term::comp(t.left(), replace_rec(t.right(), p, depth + 1, std::move(replacement)), t.u(), t.v());
}

void positions_rec(const Term& t, TermPath& cur, std::vector<TermPath>& out) {
    out.push_back(cur);
    if (t.is_generator()) return;
    for (std::size_t i = 0; i < t.arity(); ++i) {
        cur.push_back(i);
        positions_rec(t.child(i), cur, out);
        cur.pop_back();
    }
}

}  // namespace

Term replace_subterm(const Term& t, const TermPath& p, Term replacement) {
    return replace_rec(t, p, 0, std::move(replacement));
}

std::vector<TermPath> all_positions(const Term& t) {
    std::vector<TermPath> out;
    TermPath cur;
    positions_rec(t, cur, out);
    return out;
}

}  // namespace ocalc
