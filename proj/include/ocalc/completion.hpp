#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ocalc/surfaces.hpp"

namespace ocalc {

/// A nontrivial quantum-open element ⌊O_i⌋_{g_i}: at least one boundary cycle.
class Nest {
public:
    Nest(Multicycle boundaries, int genus);

    const Multicycle& boundaries() const noexcept { return boundaries_; }
    int genus() const noexcept { return genus_; }
    /// 2G_i = 4g_i + 2b_i - 2
    int twice_genus() const { return 4 * genus_ + 2 * static_cast<int>(boundaries_.size()) - 2; }
    /// ⌊⟨⟩⌋_0
    bool trivial() const { return genus_ == 0 && boundaries_.size() == 1 && boundaries_.cycles()[0].empty(); }

    friend bool operator==(const Nest&, const Nest&) = default;
    friend std::strong_ordering operator<=>(const Nest& a, const Nest& b);

private:
    Multicycle boundaries_;
    int genus_;
};

/// An element ⌊V_1⋯V_a⌋_g[C] of the modular completion: a multiset of nests,
/// an outer genus and a set of closed labels. With no nests it is ∅_g[C],
/// which requires 4g - 2 + |C| >= 0.
class NestedSurface {
public:
    NestedSurface(std::vector<Nest> nests, int outer_genus, LabelSet closed = {});

    const std::vector<Nest>& nests() const noexcept { return nests_; }
    int outer_genus() const noexcept { return outer_genus_; }
    const LabelSet& closed() const noexcept { return closed_; }

    LabelSet open_labels() const;
    LabelSet labels() const;
    std::size_t open_count() const;
    std::size_t cycle_count() const;
    std::optional<Color> color_of(const Label& l) const;
    std::optional<std::size_t> nest_of(const Label& l) const;

    friend bool operator==(const NestedSurface&, const NestedSurface&) = default;
    friend std::strong_ordering operator<=>(const NestedSurface& a, const NestedSurface& b);

private:
    std::vector<Nest> nests_;
    int outer_genus_;
    LabelSet closed_;
};

std::string to_string(const Nest& n);
std::string to_string(const NestedSurface& x);

/// Σ 2G_i + 4g + 2a - 2 + |C|, which reduces to 4g - 2 + |C| when a = 0.
TwiceGenus operadic_genus(const NestedSurface& x);

NestedSurface mod_compose_open(const NestedSurface& x, const Label& u, const NestedSurface& y, const Label& v);
NestedSurface mod_compose_closed(const NestedSurface& x, const Label& u, const NestedSurface& y, const Label& v);
NestedSurface mod_compose(const NestedSurface& x, const Label& u, const NestedSurface& y, const Label& v);
NestedSurface mod_contract(const NestedSurface& x, const Label& u, const Label& v);

/// Genus-zero surfaces into the completion, one nest per boundary cycle.
NestedSurface embed(const Surface& x);

/// Flattens nests into one boundary multicycle and sums all genera.
Surface alpha(const NestedSurface& x);

/// Wraps all boundaries in a single nest carrying the whole genus.
NestedSurface beta(const Surface& x);

/// beta(alpha(x)): equal values iff congruent modulo the Cardy ideal.
NestedSurface canon_mod(const NestedSurface& x);

/// 4(g + Σ g_i) + 2b + 2|C| + |O| > 4, b the total cycle count.
bool is_stable(const NestedSurface& x);

/// Stable and, when g = 0 and C = ∅ or |C| = 1, not one of:
/// (i) a >= 3 trivial nests, C = ∅;
/// (ii) a >= 2 nests, all trivial but one which has at least one input, C = ∅;
/// (iii) a >= 2 trivial nests with one closed input.
bool is_kp(const NestedSurface& x);

/// Only Tag::Stable and Tag::KP are reported.
TagSet classify_nested(const NestedSurface& x);

}  // namespace ocalc
