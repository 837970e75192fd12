#include "ocalc/surfaces.hpp"

#include <algorithm>

#include "ocalc/error.hpp"

namespace ocalc {

const char* to_string(Color c) { return c == Color::Open ? "open" : "closed"; }

Surface::Surface(Multicycle boundaries, int genus, LabelSet closed)
    : boundaries_(std::move(boundaries)), genus_(genus), closed_(std::move(closed)) {
    if (genus_ < 0) throw Error(Errc::InvalidGenus, "geometric genus must be non-negative");
    for (const auto& c : closed_)
        if (boundaries_.contains(c))
            throw Error(Errc::DuplicateLabel, "label '" + c.token() + "' is both open and closed");
    if (operadic_genus(*this).value < 0)
        throw Error(Errc::InvalidGenus, "negative operadic genus for " + to_string(*this));
}

LabelSet Surface::labels() const {
    LabelSet out = open_labels();
    out.insert(closed_.begin(), closed_.end());
    return out;
}

std::optional<Color> Surface::color_of(const Label& l) const {
    if (closed_.contains(l)) return Color::Closed;
    if (boundaries_.contains(l)) return Color::Open;
    return std::nullopt;
}

std::strong_ordering operator<=>(const Surface& a, const Surface& b) {
    if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
    if (auto c = a.boundaries_ <=> b.boundaries_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.closed_.begin(), a.closed_.end(), b.closed_.begin(),
                                                  b.closed_.end());
}

std::string to_string(const Surface& x) {
    std::string out = "[" + to_string(x.boundaries()) + "]_" + std::to_string(x.genus()) + "{";
    bool first = true;
    for (const auto& c : x.closed()) {
        if (!first) out += ",";
        out += c.token();
        first = false;
    }
    return out + "}";
}

Biarity biarity(const Surface& x) { return {x.boundaries(), x.closed()}; }

TwiceGenus operadic_genus(const Surface& x) {
    return {4 * x.genus() + 2 * static_cast<int>(x.boundary_count()) - 2 + static_cast<int>(x.closed().size())};
}

namespace {

void require_color(const Surface& x, const Label& l, Color want) {
    auto c = x.color_of(l);
    if (!c) throw Error(Errc::MissingLabel, "label '" + l.token() + "' not in " + to_string(x));
    if (*c != want)
        throw Error(Errc::WrongColor, "label '" + l.token() + "' is " + to_string(*c) + ", expected " +
                                          to_string(want));
}

void require_disjoint(const Surface& x, const Surface& y) {
    auto ly = y.labels();
    for (const auto& l : x.labels())
        if (ly.contains(l)) throw Error(Errc::LabelClash, "label '" + l.token() + "' occurs on both sides");
}

LabelSet closed_union(const Surface& x, const Surface& y) {
    LabelSet out = x.closed();
    out.insert(y.closed().begin(), y.closed().end());
    return out;
}

}  // namespace

Surface compose_open(const Surface& x, const Label& a, const Surface& y, const Label& b) {
    require_color(x, a, Color::Open);
    require_color(y, b, Color::Open);
    require_disjoint(x, y);
    return Surface(merge_multicycles(x.boundaries(), a, y.boundaries(), b), x.genus() + y.genus(),
                   closed_union(x, y));
}

Surface compose_closed(const Surface& x, const Label& a, const Surface& y, const Label& b) {
    require_color(x, a, Color::Closed);
    require_color(y, b, Color::Closed);
    require_disjoint(x, y);
    auto closed = closed_union(x, y);
    closed.erase(a);
    closed.erase(b);
    return Surface(disjoint_union(x.boundaries(), y.boundaries()), x.genus() + y.genus(), std::move(closed));
}

Surface compose(const Surface& x, const Label& a, const Surface& y, const Label& b) {
    auto c = x.color_of(a);
    if (!c) throw Error(Errc::MissingLabel, "label '" + a.token() + "' not in " + to_string(x));
    return *c == Color::Open ? compose_open(x, a, y, b) : compose_closed(x, a, y, b);
}

Surface contract_open(const Surface& x, const Label& u, const Label& v) {
    if (u == v) throw Error(Errc::SameLabel, "cannot contract '" + u.token() + "' with itself");
    require_color(x, u, Color::Open);
    require_color(x, v, Color::Open);
    auto [m, same] = contract_multicycle(x.boundaries(), u, v);
    return Surface(std::move(m), same ? x.genus() : x.genus() + 1, x.closed());
}

Surface contract_closed(const Surface& x, const Label& u, const Label& v) {
    if (u == v) throw Error(Errc::SameLabel, "cannot contract '" + u.token() + "' with itself");
    require_color(x, u, Color::Closed);
    require_color(x, v, Color::Closed);
    auto closed = x.closed();
    closed.erase(u);
    closed.erase(v);
    return Surface(x.boundaries(), x.genus() + 1, std::move(closed));
}

Surface contract(const Surface& x, const Label& u, const Label& v) {
    auto c = x.color_of(u);
    if (!c) throw Error(Errc::MissingLabel, "label '" + u.token() + "' not in " + to_string(x));
    return *c == Color::Open ? contract_open(x, u, v) : contract_closed(x, u, v);
}

Surface premodular_contract_open(const Surface& x, const Label& u, const Label& v) {
    require_color(x, u, Color::Open);
    require_color(x, v, Color::Open);
    if (x.boundaries().find(u) != x.boundaries().find(v))
        throw Error(Errc::DifferentPancake,
                    "'" + u.token() + "' and '" + v.token() + "' lie on different boundary cycles");
    return contract_open(x, u, v);
}

Surface relabel(const Surface& x, const std::map<Label, Label>& rho) {
    auto image = [&](const Label& l) {
        auto it = rho.find(l);
        return it == rho.end() ? l : it->second;
    };
    LabelSet seen;
    for (const auto& l : x.labels()) {
        Label t = image(l);
        if (!seen.insert(t).second) throw Error(Errc::LabelClash, "relabeling is not injective at '" + t.token() + "'");
        if (auto c = x.color_of(t); c && *c != *x.color_of(l))
            throw Error(Errc::WrongColor, "relabeling sends '" + l.token() + "' across colors");
    }
    std::vector<Cycle> cycles;
    for (const auto& c : x.boundaries().cycles()) {
        std::vector<Label> w;
        for (const auto& l : c.word()) w.push_back(image(l));
        cycles.push_back(canonical_cycle(std::move(w)));
    }
    LabelSet closed;
    for (const auto& l : x.closed()) closed.insert(image(l));
    return Surface(Multicycle(std::move(cycles)), x.genus(), std::move(closed));
}

// ---------------------------------------------------------------- classification

const char* to_string(Tag t) {
    switch (t) {
    case Tag::Ass: return "Ass";
    case Tag::Com: return "Com";
    case Tag::QO: return "QO";
    case Tag::QC: return "QC";
    case Tag::OC: return "OC";
    case Tag::Stable: return "stable";
    case Tag::KP: return "KP";
    }
    return "?";
}

std::vector<std::string> TagSet::names() const {
    std::vector<std::string> out;
    for (auto t : {Tag::Ass, Tag::Com, Tag::QO, Tag::QC, Tag::OC, Tag::Stable, Tag::KP})
        if (has(t)) out.emplace_back(to_string(t));
    return out;
}

bool is_stable(const Surface& x) {
    const int b = static_cast<int>(x.boundary_count());
    const int c = static_cast<int>(x.closed().size());
    const int o = static_cast<int>(x.open_count());
    return 4 * x.genus() + 2 * b + 2 * c + o > 4;
}

bool is_kp(const Surface& x) {
    if (!is_stable(x)) return false;
    if (x.genus() > 0) return true;
    const auto b = x.boundary_count();
    const auto empties = x.boundaries().empty_cycle_count();
    const auto c = x.closed().size();
    const bool type_i = c == 0 && b >= 3 && empties == b;
    const bool type_ii = c == 0 && b >= 2 && empties == b - 1;
    const bool type_iii = c == 1 && b >= 2 && empties == b;
    return !(type_i || type_ii || type_iii);
}

bool is_modular_kp(const Surface& x) { return is_stable(x); }

TagSet classify(const Surface& x) {
    TagSet tags;
    const auto b = x.boundary_count();
    const bool no_closed = x.closed().empty();
    if (b == 1 && x.genus() == 0 && no_closed) tags.insert(Tag::Ass);
    if (b == 0 && x.genus() == 0 && x.closed().size() >= 2) tags.insert(Tag::Com);
    if (no_closed && b >= 1) tags.insert(Tag::QO);
    if (b == 0) tags.insert(Tag::QC);
    if (x.genus() == 0) tags.insert(Tag::OC);
    if (is_stable(x)) tags.insert(Tag::Stable);
    if (is_kp(x)) tags.insert(Tag::KP);
    return tags;
}

}  // namespace ocalc
