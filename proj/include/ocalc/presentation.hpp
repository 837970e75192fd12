#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ocalc/surfaces.hpp"
#include "ocalc/term.hpp"

namespace ocalc {

struct Evaluation {
    Surface surface;
    bool kp;
};

/// μ ↦ ⌊⟨p,q,r⟩⌋_0, ω ↦ ∅_0[{d,e,f}], φ ↦ ⌊⟨p⟩⌋_0[{d}], extended along
/// compositions and contractions.
Evaluation eval_term(const Term& t);

enum class Axiom { A1, A2, A3, A4, Cardy };
enum class Direction { Forward, Backward };

inline constexpr Axiom all_axioms[] = {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::Cardy};

const char* to_string(Axiom a);
const char* to_string(Direction d);
Axiom parse_axiom(std::string_view text);

/// Deterministic supply of internal labels "#0", "#1", ... skipping any label
/// in `avoid`. `limit` bounds the counter; running past it throws
/// Errc::FreshExhausted.
class FreshLabels {
public:
    explicit FreshLabels(std::size_t start = 0, std::size_t limit = SIZE_MAX) : next_(start), limit_(limit) {}
    Label next(const LabelSet& avoid);
    std::size_t counter() const noexcept { return next_; }

private:
    std::size_t next_;
    std::size_t limit_;
};

struct RewriteStep {
    Axiom axiom;
    TermPath position;
    Direction direction = Direction::Forward;
};

/// Replaces the subterm at `step.position` by the other side of the axiom.
/// Throws Errc::PatternMismatch when the subterm does not match.
Term apply_axiom(const Term& t, const RewriteStep& step, FreshLabels& fresh);

/// The rewrite of a single site, or nullopt if it does not match.
std::optional<Term> rewrite_site(const Term& site, Axiom axiom, Direction dir, FreshLabels& fresh,
                                 const LabelSet& avoid);

/// Every legal (axiom, position, direction) for `t`.
std::vector<RewriteStep> rewrite_sites(const Term& t);

/// The two sides of the Cardy relation with the given boundary labels:
/// ξ_{u,v}(μ⟨u,q,a⟩ ∘_{a,b} μ⟨b,v,r⟩) and φ(q,c) ∘_{c,d} φ(r,d).
Term cardy_lhs(const Label& q, const Label& r, const Label& u = "u", const Label& v = "v", const Label& a = "a",
               const Label& b = "b");
Term cardy_rhs(const Label& q, const Label& r, const Label& c = "c", const Label& d = "d");

}  // namespace ocalc
