#include "ocalc/completion.hpp"

#include <algorithm>

#include "ocalc/error.hpp"

namespace ocalc {

Nest::Nest(Multicycle boundaries, int genus) : boundaries_(std::move(boundaries)), genus_(genus) {
    if (boundaries_.trivial()) throw Error(Errc::InvalidGenus, "a nest needs at least one boundary cycle");
    if (genus_ < 0) throw Error(Errc::InvalidGenus, "nest genus must be non-negative");
}

std::strong_ordering operator<=>(const Nest& a, const Nest& b) {
    if (auto c = a.boundaries_ <=> b.boundaries_; c != 0) return c;
    return a.genus_ <=> b.genus_;
}

NestedSurface::NestedSurface(std::vector<Nest> nests, int outer_genus, LabelSet closed)
    : nests_(std::move(nests)), outer_genus_(outer_genus), closed_(std::move(closed)) {
    if (outer_genus_ < 0) throw Error(Errc::InvalidGenus, "outer genus must be non-negative");
    std::vector<Label> all(closed_.begin(), closed_.end());
    for (const auto& n : nests_) {
        auto ls = n.boundaries().labels();
        all.insert(all.end(), ls.begin(), ls.end());
    }
    std::sort(all.begin(), all.end());
    if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end())
        throw Error(Errc::DuplicateLabel, "label '" + it->token() + "' used twice");
    if (operadic_genus(*this).value < 0)
        throw Error(Errc::InvalidGenus, "negative operadic genus for " + to_string(*this));
    std::sort(nests_.begin(), nests_.end());
}

LabelSet NestedSurface::open_labels() const {
    LabelSet out;
    for (const auto& n : nests_) {
        auto ls = n.boundaries().labels();
        out.insert(ls.begin(), ls.end());
    }
    return out;
}

LabelSet NestedSurface::labels() const {
    auto out = open_labels();
    out.insert(closed_.begin(), closed_.end());
    return out;
}

std::size_t NestedSurface::open_count() const {
    std::size_t n = 0;
    for (const auto& nest : nests_) n += nest.boundaries().label_count();
    return n;
}

std::size_t NestedSurface::cycle_count() const {
    std::size_t n = 0;
    for (const auto& nest : nests_) n += nest.boundaries().size();
    return n;
}

std::optional<std::size_t> NestedSurface::nest_of(const Label& l) const {
    for (std::size_t i = 0; i < nests_.size(); ++i)
        if (nests_[i].boundaries().contains(l)) return i;
    return std::nullopt;
}

std::optional<Color> NestedSurface::color_of(const Label& l) const {
    if (closed_.contains(l)) return Color::Closed;
    if (nest_of(l)) return Color::Open;
    return std::nullopt;
}

std::strong_ordering operator<=>(const NestedSurface& a, const NestedSurface& b) {
    if (auto c = a.outer_genus_ <=> b.outer_genus_; c != 0) return c;
    if (auto c = a.nests_.size() <=> b.nests_.size(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.nests_.begin(), a.nests_.end(), b.nests_.begin(),
                                                        b.nests_.end());
        c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.closed_.begin(), a.closed_.end(), b.closed_.begin(),
                                                  b.closed_.end());
}

std::string to_string(const Nest& n) {
    return "[" + to_string(n.boundaries()) + "]_" + std::to_string(n.genus());
}

std::string to_string(const NestedSurface& x) {
    std::string out = "[";
    if (x.nests().empty()) out += "@";
    for (const auto& n : x.nests()) out += to_string(n);
    out += "]_" + std::to_string(x.outer_genus()) + "{";
    bool first = true;
    for (const auto& c : x.closed()) {
        if (!first) out += ",";
        out += c.token();
        first = false;
    }
    return out + "}";
}

TwiceGenus operadic_genus(const NestedSurface& x) {
    const int a = static_cast<int>(x.nests().size());
    int twice = 4 * x.outer_genus() + 2 * a - 2 + static_cast<int>(x.closed().size());
    for (const auto& n : x.nests()) twice += n.twice_genus();
    return {twice};
}

// ---------------------------------------------------------------- structure operations

namespace {

void require_color(const NestedSurface& x, const Label& l, Color want) {
    auto c = x.color_of(l);
    if (!c) throw Error(Errc::MissingLabel, "label '" + l.token() + "' not in " + to_string(x));
    if (*c != want)
        throw Error(Errc::WrongColor, "label '" + l.token() + "' is " + to_string(*c) + ", expected " +
                                          to_string(want));
}

void require_disjoint(const NestedSurface& x, const NestedSurface& y) {
    auto ly = y.labels();
    for (const auto& l : x.labels())
        if (ly.contains(l)) throw Error(Errc::LabelClash, "label '" + l.token() + "' occurs on both sides");
}

Surface as_surface(const Nest& n) { return Surface(n.boundaries(), n.genus()); }
Nest as_nest(const Surface& s) { return Nest(s.boundaries(), s.genus()); }

std::vector<Nest> all_but(const std::vector<Nest>& ns, std::size_t i, std::size_t j = SIZE_MAX) {
    std::vector<Nest> out;
    for (std::size_t k = 0; k < ns.size(); ++k)
        if (k != i && k != j) out.push_back(ns[k]);
    return out;
}

}  // namespace

NestedSurface mod_compose_open(const NestedSurface& x, const Label& u, const NestedSurface& y, const Label& v) {
    require_color(x, u, Color::Open);
    require_color(y, v, Color::Open);
    require_disjoint(x, y);
    const auto i = *x.nest_of(u);
    const auto j = *y.nest_of(v);
    auto nests = all_but(x.nests(), i);
    auto rest = all_but(y.nests(), j);
    nests.insert(nests.end(), rest.begin(), rest.end());
    nests.push_back(as_nest(compose_open(as_surface(x.nests()[i]), u, as_surface(y.nests()[j]), v)));
    LabelSet closed = x.closed();
    closed.insert(y.closed().begin(), y.closed().end());
    return NestedSurface(std::move(nests), x.outer_genus() + y.outer_genus(), std::move(closed));
}

NestedSurface mod_compose_closed(const NestedSurface& x, const Label& u, const NestedSurface& y, const Label& v) {
    require_color(x, u, Color::Closed);
    require_color(y, v, Color::Closed);
    require_disjoint(x, y);
    auto nests = x.nests();
    nests.insert(nests.end(), y.nests().begin(), y.nests().end());
    LabelSet closed = x.closed();
    closed.insert(y.closed().begin(), y.closed().end());
    closed.erase(u);
    closed.erase(v);
    return NestedSurface(std::move(nests), x.outer_genus() + y.outer_genus(), std::move(closed));
}

NestedSurface mod_compose(const NestedSurface& x, const Label& u, const NestedSurface& y, const Label& v) {
    auto c = x.color_of(u);
    if (!c) throw Error(Errc::MissingLabel, "label '" + u.token() + "' not in " + to_string(x));
    return *c == Color::Open ? mod_compose_open(x, u, y, v) : mod_compose_closed(x, u, y, v);
}

NestedSurface mod_contract(const NestedSurface& x, const Label& u, const Label& v) {
    if (u == v) throw Error(Errc::SameLabel, "cannot contract '" + u.token() + "' with itself");
    auto cu = x.color_of(u);
    auto cv = x.color_of(v);
    if (!cu) throw Error(Errc::MissingLabel, "label '" + u.token() + "' not in " + to_string(x));
    if (!cv) throw Error(Errc::MissingLabel, "label '" + v.token() + "' not in " + to_string(x));
    if (*cu != *cv) throw Error(Errc::WrongColor, "cannot contract an open with a closed input");

    if (*cu == Color::Closed) {
        auto closed = x.closed();
        closed.erase(u);
        closed.erase(v);
        return NestedSurface(x.nests(), x.outer_genus() + 1, std::move(closed));
    }
    const auto i = *x.nest_of(u);
    const auto j = *x.nest_of(v);
    if (i == j) {
        auto nests = all_but(x.nests(), i);
        nests.push_back(as_nest(contract_open(as_surface(x.nests()[i]), u, v)));
        return NestedSurface(std::move(nests), x.outer_genus(), x.closed());
    }
    auto nests = all_but(x.nests(), i, j);
    nests.push_back(as_nest(compose_open(as_surface(x.nests()[i]), u, as_surface(x.nests()[j]), v)));
    return NestedSurface(std::move(nests), x.outer_genus() + 1, x.closed());
}

// ---------------------------------------------------------------- embedding and normal forms

NestedSurface embed(const Surface& x) {
    if (x.genus() != 0) throw Error(Errc::InvalidGenus, "only genus-zero surfaces embed; got " + to_string(x));
    std::vector<Nest> nests;
    for (const auto& c : x.boundaries().cycles()) nests.emplace_back(Multicycle({c}), 0);
    return NestedSurface(std::move(nests), 0, x.closed());
}

Surface alpha(const NestedSurface& x) {
    std::vector<Cycle> cycles;
    int genus = x.outer_genus();
    for (const auto& n : x.nests()) {
        cycles.insert(cycles.end(), n.boundaries().cycles().begin(), n.boundaries().cycles().end());
        genus += n.genus();
    }
    return Surface(Multicycle(std::move(cycles)), genus, x.closed());
}

NestedSurface beta(const Surface& x) {
    if (x.boundaries().trivial()) return NestedSurface({}, x.genus(), x.closed());
    return NestedSurface({Nest(x.boundaries(), x.genus())}, 0, x.closed());
}

NestedSurface canon_mod(const NestedSurface& x) { return beta(alpha(x)); }

bool is_stable(const NestedSurface& x) {
    int g = x.outer_genus();
    for (const auto& n : x.nests()) g += n.genus();
    return 4 * g + 2 * static_cast<int>(x.cycle_count()) + 2 * static_cast<int>(x.closed().size()) +
               static_cast<int>(x.open_count()) >
           4;
}

bool is_kp(const NestedSurface& x) {
    if (!is_stable(x)) return false;
    if (x.outer_genus() != 0) return true;
    const auto a = x.nests().size();
    const auto trivial = static_cast<std::size_t>(
        std::count_if(x.nests().begin(), x.nests().end(), [](const Nest& n) { return n.trivial(); }));
    const auto c = x.closed().size();
    const bool type_i = c == 0 && a >= 3 && trivial == a;
    bool type_ii = false;
    if (c == 0 && a >= 2 && trivial == a - 1) {
        for (const auto& n : x.nests())
            if (!n.trivial() && n.boundaries().label_count() >= 1) type_ii = true;
    }
    const bool type_iii = c == 1 && a >= 2 && trivial == a;
    return !(type_i || type_ii || type_iii);
}

TagSet classify_nested(const NestedSurface& x) {
    TagSet tags;
    if (is_stable(x)) tags.insert(Tag::Stable);
    if (is_kp(x)) tags.insert(Tag::KP);
    return tags;
}

}  // namespace ocalc
