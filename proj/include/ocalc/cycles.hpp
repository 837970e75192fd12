#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ocalc {

/// A nonempty text token naming an input. Labels are ordered byte-lexicographically.
class Label {
public:
    Label(std::string token);
    Label(const char* token) : Label(std::string(token)) {}

    const std::string& token() const noexcept { return token_; }

    friend bool operator==(const Label&, const Label&) = default;
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        return a.token_.compare(b.token_) <=> 0;
    }

private:
    std::string token_;
};

using LabelSet = std::set<Label>;

/// A cyclic word of distinct labels, stored as the rotation that starts at
/// its minimal label. The default value is the empty cycle.
class Cycle {
public:
    Cycle() = default;

    const std::vector<Label>& word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }
    bool contains(const Label& l) const { return position(l).has_value(); }
    std::optional<std::size_t> position(const Label& l) const;

    /// The word read cyclically starting at `l`.
    std::vector<Label> rotated_to(const Label& l) const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
    /// Shorter cycles first, then lexicographic on the canonical word.
    friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b);

private:
    friend Cycle canonical_cycle(std::vector<Label> word);
    std::vector<Label> word_;
};

Cycle canonical_cycle(std::vector<Label> word);

/// Pancake merging: rotate `c1` to end at `a`, `c2` to start at `b`,
/// concatenate and drop `a`, `b`.
Cycle merge_cycles(const Cycle& c1, const Label& a, const Cycle& c2, const Label& b);

/// Pancake cutting: removes `u`, `v` and returns the two arcs between them,
/// the arc after `u` first.
std::pair<Cycle, Cycle> cut_cycle(const Cycle& c, const Label& u, const Label& v);

/// An unordered multiset of cycles on pairwise disjoint label sets. Empty
/// cycles are kept with multiplicity; the empty multiset is the trivial
/// multicycle.
class Multicycle {
public:
    Multicycle() = default;
    explicit Multicycle(std::vector<Cycle> cycles);

    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
    std::size_t size() const noexcept { return cycles_.size(); }
    bool trivial() const noexcept { return cycles_.empty(); }

    LabelSet labels() const;
    std::size_t label_count() const;
    std::size_t empty_cycle_count() const;
    /// Index of the cycle holding `l`.
    std::optional<std::size_t> find(const Label& l) const;
    bool contains(const Label& l) const { return find(l).has_value(); }

    friend bool operator==(const Multicycle&, const Multicycle&) = default;
    friend std::strong_ordering operator<=>(const Multicycle& a, const Multicycle& b);

private:
    std::vector<Cycle> cycles_;
};

/// Multiset union of two multicycles on disjoint label sets.
Multicycle disjoint_union(const Multicycle& m1, const Multicycle& m2);

Multicycle merge_multicycles(const Multicycle& m1, const Label& a, const Multicycle& m2,
                             const Label& b);

struct MulticycleContraction {
    Multicycle result;
    bool same_pancake;
};

MulticycleContraction contract_multicycle(const Multicycle& m, const Label& u, const Label& v);

// Debug syntax: "(p q r)", "(p q r)()(s)", and "@" for the trivial multicycle.
std::string to_string(const Cycle& c);
std::string to_string(const Multicycle& m);
Cycle parse_cycle(std::string_view text);
Multicycle parse_multicycle(std::string_view text);

}  // namespace ocalc
