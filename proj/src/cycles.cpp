#include "ocalc/cycles.hpp"

#include <algorithm>
#include <cctype>

#include "ocalc/error.hpp"

namespace ocalc {

Label::Label(std::string token) : token_(std::move(token)) {
    if (token_.empty()) throw Error(Errc::EmptyLabel, "labels must be nonempty");
}

// ---------------------------------------------------------------- Cycle

std::optional<std::size_t> Cycle::position(const Label& l) const {
    auto it = std::find(word_.begin(), word_.end(), l);
    if (it == word_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - word_.begin());
}

std::vector<Label> Cycle::rotated_to(const Label& l) const {
    auto pos = position(l);
    if (!pos) throw Error(Errc::MissingLabel, "label '" + l.token() + "' not in " + to_string(*this));
    std::vector<Label> out(word_.begin() + static_cast<std::ptrdiff_t>(*pos), word_.end());
    out.insert(out.end(), word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(*pos));
    return out;
}

std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(), b.word_.begin(),
                                                  b.word_.end());
}

Cycle canonical_cycle(std::vector<Label> word) {
    std::vector<Label> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::DuplicateLabel, "repeated label in cyclic word");
    Cycle c;
    if (!word.empty()) std::rotate(word.begin(), std::min_element(word.begin(), word.end()), word.end());
    c.word_ = std::move(word);
    return c;
}

namespace {

void require_disjoint(const std::vector<Label>& x, const std::vector<Label>& y) {
    for (const auto& l : x)
        if (std::find(y.begin(), y.end(), l) != y.end())
            throw Error(Errc::LabelClash, "label '" + l.token() + "' occurs on both sides");
}

}  // namespace

Cycle merge_cycles(const Cycle& c1, const Label& a, const Cycle& c2, const Label& b) {
    require_disjoint(c1.word(), c2.word());
    // rotated_to(a) starts at a; the merged word is everything after a in c1
    // followed by everything after b in c2.
    auto w1 = c1.rotated_to(a);
    auto w2 = c2.rotated_to(b);
    std::vector<Label> merged(w1.begin() + 1, w1.end());
    merged.insert(merged.end(), w2.begin() + 1, w2.end());
    return canonical_cycle(std::move(merged));
}

std::pair<Cycle, Cycle> cut_cycle(const Cycle& c, const Label& u, const Label& v) {
    if (u == v) throw Error(Errc::SameLabel, "cannot cut at a single label '" + u.token() + "'");
    auto w = c.rotated_to(u);
    auto it = std::find(w.begin(), w.end(), v);
    if (it == w.end()) throw Error(Errc::MissingLabel, "label '" + v.token() + "' not in " + to_string(c));
    return {canonical_cycle(std::vector<Label>(w.begin() + 1, it)),
            canonical_cycle(std::vector<Label>(it + 1, w.end()))};
}

// ---------------------------------------------------------------- Multicycle

Multicycle::Multicycle(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
    std::vector<Label> all;
    for (const auto& c : cycles_) all.insert(all.end(), c.word().begin(), c.word().end());
    std::sort(all.begin(), all.end());
    if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end())
        throw Error(Errc::DuplicateLabel, "label '" + it->token() + "' appears in two cycles");
    std::sort(cycles_.begin(), cycles_.end());
}

LabelSet Multicycle::labels() const {
    LabelSet out;
    for (const auto& c : cycles_) out.insert(c.word().begin(), c.word().end());
    return out;
}

std::size_t Multicycle::label_count() const {
    std::size_t n = 0;
    for (const auto& c : cycles_) n += c.size();
    return n;
}

std::size_t Multicycle::empty_cycle_count() const {
    return static_cast<std::size_t>(
        std::count_if(cycles_.begin(), cycles_.end(), [](const Cycle& c) { return c.empty(); }));
}

std::optional<std::size_t> Multicycle::find(const Label& l) const {
    for (std::size_t i = 0; i < cycles_.size(); ++i)
        if (cycles_[i].contains(l)) return i;
    return std::nullopt;
}

std::strong_ordering operator<=>(const Multicycle& a, const Multicycle& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.cycles_.begin(), a.cycles_.end(),
                                                  b.cycles_.begin(), b.cycles_.end());
}

Multicycle disjoint_union(const Multicycle& m1, const Multicycle& m2) {
    std::vector<Cycle> cs = m1.cycles();
    cs.insert(cs.end(), m2.cycles().begin(), m2.cycles().end());
    return Multicycle(std::move(cs));
}

namespace {

std::size_t host_of(const Multicycle& m, const Label& l) {
    auto i = m.find(l);
    if (!i) throw Error(Errc::MissingLabel, "label '" + l.token() + "' not in " + to_string(m));
    return *i;
}

std::vector<Cycle> without(const std::vector<Cycle>& cs, std::size_t i, std::size_t j = SIZE_MAX) {
    std::vector<Cycle> out;
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (k != i && k != j) out.push_back(cs[k]);
    return out;
}

}  // namespace

Multicycle merge_multicycles(const Multicycle& m1, const Label& a, const Multicycle& m2,
                             const Label& b) {
    std::size_t i = host_of(m1, a);
    std::size_t j = host_of(m2, b);
    for (const auto& l : m1.labels())
        if (m2.contains(l)) throw Error(Errc::LabelClash, "label '" + l.token() + "' occurs on both sides");
    auto cs = without(m1.cycles(), i);
    auto rest = without(m2.cycles(), j);
    cs.insert(cs.end(), rest.begin(), rest.end());
    cs.push_back(merge_cycles(m1.cycles()[i], a, m2.cycles()[j], b));
    return Multicycle(std::move(cs));
}

MulticycleContraction contract_multicycle(const Multicycle& m, const Label& u, const Label& v) {
    if (u == v) throw Error(Errc::SameLabel, "cannot contract '" + u.token() + "' with itself");
    std::size_t i = host_of(m, u);
    std::size_t j = host_of(m, v);
    if (i == j) {
        auto cs = without(m.cycles(), i);
        auto [first, second] = cut_cycle(m.cycles()[i], u, v);
        cs.push_back(std::move(first));
        cs.push_back(std::move(second));
        return {Multicycle(std::move(cs)), true};
    }
    auto cs = without(m.cycles(), i, j);
    cs.push_back(merge_cycles(m.cycles()[i], u, m.cycles()[j], v));
    return {Multicycle(std::move(cs)), false};
}

// ---------------------------------------------------------------- text syntax

std::string to_string(const Cycle& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += c.word()[i].token();
    }
    return out + ")";
}

std::string to_string(const Multicycle& m) {
    if (m.trivial()) return "@";
    std::string out;
    for (const auto& c : m.cycles()) out += to_string(c);
    return out;
}

namespace {

std::vector<Label> split_tokens(std::string_view body) {
    std::vector<Label> out;
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        std::size_t j = i;
        while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
        if (j > i) out.emplace_back(std::string(body.substr(i, j - i)));
        i = j;
    }
    return out;
}

}  // namespace

Cycle parse_cycle(std::string_view text) {
    auto m = parse_multicycle(text);
    if (m.size() != 1) throw Error(Errc::Parse, "expected exactly one cycle in '" + std::string(text) + "'");
    return m.cycles().front();
}

Multicycle parse_multicycle(std::string_view text) {
    std::vector<Cycle> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '@') {
        ++i;
        skip_ws();
        if (i != text.size()) throw Error(Errc::Parse, "trailing text after '@'");
        return Multicycle();
    }
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw Error(Errc::Parse, "expected '(' in '" + std::string(text) + "'");
        auto close = text.find(')', i);
        if (close == std::string_view::npos) throw Error(Errc::Parse, "unbalanced '('");
        auto body = text.substr(i + 1, close - i - 1);
        if (body.find('(') != std::string_view::npos) throw Error(Errc::Parse, "nested '('");
        cycles.push_back(canonical_cycle(split_tokens(body)));
        i = close + 1;
    }
    if (cycles.empty()) throw Error(Errc::Parse, "empty multicycle text; use '@' for the trivial one");
    return Multicycle(std::move(cycles));
}

}  // namespace ocalc
