#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ocalc/surfaces.hpp"

namespace ocalc {

/// An expression over the generators μ (open pair of pants), ω (closed pair
/// of pants) and φ (open-closed morphism), built with ∘-compositions and
/// ξ-contractions. Terms are immutable and share subtrees.
///
/// μ legs are stored in canonical cyclic rotation, ω legs sorted; φ legs are
/// (open, closed).
class Term {
public:
    enum class Kind { Mu, Omega, Phi, Comp, Contract };

    static Term mu(Label p, Label q, Label r);
    static Term omega(Label d, Label e, Label f);
    static Term phi(Label p, Label d);
    static Term comp(Term left, Term right, Label u, Label v);
    static Term contract(Term body, Label u, Label v);

    Kind kind() const noexcept { return node_->kind; }
    bool is_generator() const noexcept { return kind() == Kind::Mu || kind() == Kind::Omega || kind() == Kind::Phi; }

    const std::vector<Label>& legs() const;
    const Label& u() const;
    const Label& v() const;
    const Term& left() const;
    const Term& right() const;
    const Term& body() const { return left(); }
    std::size_t arity() const noexcept { return node_->children.size(); }
    const Term& child(std::size_t i) const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        Kind kind;
        std::vector<Label> labels;  // generator legs, or {u, v}
        std::vector<Term> children;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const Term& t);

/// Free labels with their colors. Throws Errc::MalformedTerm on a repeated
/// label, a gluing label missing from its subterm, or a color mismatch.
std::map<Label, Color> free_labels(const Term& t);

/// Every generator leg in the term, free or glued.
LabelSet all_labels(const Term& t);

/// Applies `rename` to every label occurrence.
Term rename_labels(const Term& t, const std::function<Label(const Label&)>& rename);

std::size_t generator_count(const Term& t);

/// Child indices from the root: 0/1 are the left/right of a composition, 0 the
/// body of a contraction.
using TermPath = std::vector<std::size_t>;

TermPath parse_path(std::string_view text);
std::string to_string(const TermPath& p);
const Term& subterm(const Term& t, const TermPath& p);
Term replace_subterm(const Term& t, const TermPath& p, Term replacement);
/// All positions in preorder.
std::vector<TermPath> all_positions(const Term& t);

}  // namespace ocalc
