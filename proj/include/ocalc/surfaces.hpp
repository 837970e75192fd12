#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ocalc/cycles.hpp"

namespace ocalc {

enum class Color { Open, Closed };

const char* to_string(Color c);

/// Twice the operadic genus, so that half-integral genera stay integral.
struct TwiceGenus {
    int value = 0;
    friend auto operator<=>(const TwiceGenus&, const TwiceGenus&) = default;
};

/// An element ⌊o_1⋯o_b⌋_g[C] of the quantum open-closed hybrid: a boundary
/// multicycle on the open labels, a geometric genus and a set of closed labels.
///
/// Construction enforces disjointness of open and closed labels and
/// 4g + 2b - 2 + |C| >= 0, i.e. a non-negative operadic genus.
class Surface {
public:
    Surface(Multicycle boundaries, int genus, LabelSet closed = {});

    const Multicycle& boundaries() const noexcept { return boundaries_; }
    int genus() const noexcept { return genus_; }
    const LabelSet& closed() const noexcept { return closed_; }

    std::size_t boundary_count() const noexcept { return boundaries_.size(); }
    std::size_t open_count() const { return boundaries_.label_count(); }
    LabelSet open_labels() const { return boundaries_.labels(); }
    LabelSet labels() const;
    std::optional<Color> color_of(const Label& l) const;

    friend bool operator==(const Surface&, const Surface&) = default;
    friend std::strong_ordering operator<=>(const Surface& a, const Surface& b);

private:
    Multicycle boundaries_;
    int genus_;
    LabelSet closed_;
};

std::string to_string(const Surface& x);

/// The open part is the boundary multicycle, the closed part the set C.
struct Biarity {
    Multicycle open_part;
    LabelSet closed_part;
    friend bool operator==(const Biarity&, const Biarity&) = default;
};

Biarity biarity(const Surface& x);

TwiceGenus operadic_genus(const Surface& x);

Surface compose_open(const Surface& x, const Label& a, const Surface& y, const Label& b);
Surface compose_closed(const Surface& x, const Label& a, const Surface& y, const Label& b);
/// Dispatches on the color of `a` in `x`; `b` must have the same color in `y`.
Surface compose(const Surface& x, const Label& a, const Surface& y, const Label& b);

Surface contract_open(const Surface& x, const Label& u, const Label& v);
Surface contract_closed(const Surface& x, const Label& u, const Label& v);
Surface contract(const Surface& x, const Label& u, const Label& v);

/// The contraction admitted in a premodular hybrid: `u` and `v` must sit on
/// the same boundary cycle, otherwise throws Errc::DifferentPancake.
Surface premodular_contract_open(const Surface& x, const Label& u, const Label& v);

/// Renames labels; labels absent from `rho` are fixed. `rho` must be injective
/// on the labels of `x` and must not move a label across colors.
Surface relabel(const Surface& x, const std::map<Label, Label>& rho);

enum class Tag : std::uint8_t { Ass, Com, QO, QC, OC, Stable, KP };

const char* to_string(Tag t);

class TagSet {
public:
    void insert(Tag t) { bits_ |= mask(t); }
    bool has(Tag t) const { return (bits_ & mask(t)) != 0; }
    std::vector<std::string> names() const;
    friend bool operator==(const TagSet&, const TagSet&) = default;

private:
    static std::uint8_t mask(Tag t) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(t)); }
    std::uint8_t bits_ = 0;
};

/// 4g + 2b + 2|C| + |O| > 4.
bool is_stable(const Surface& x);

/// Stable, and at genus zero not one of the three discarded families:
/// all boundaries empty with b >= 3 and C = ∅; all but one boundary empty,
/// b >= 2, C = ∅; all boundaries empty, b >= 2 and |C| = 1.
bool is_kp(const Surface& x);

/// Membership in the modular Kaufmann-Penner hybrid, the contraction closure
/// of the cyclic KP part. A stable x is the image of its single-nest form,
/// which no discard rule hits, so this is plain stability. It differs from
/// is_kp only on the genus-zero discarded families, which arise as
/// same-boundary contractions, e.g. ξ_{p,q}⌊⟨p,q,r⟩⌋_0 = ⌊⟨⟩⟨r⟩⌋_0.
bool is_modular_kp(const Surface& x);

TagSet classify(const Surface& x);

/// Every element of QOC(O, C; G), each exactly once, in canonical order.
std::vector<Surface> enumerate_qoc(const LabelSet& open, const LabelSet& closed, TwiceGenus twice_genus);

/// All multicycles on `labels` with exactly `blocks` cycles, empty cycles allowed.
std::vector<Multicycle> multicycles_with_blocks(const std::vector<Label>& labels, std::size_t blocks);

}  // namespace ocalc
