#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ocalc/surfaces.hpp"
#include "ocalc/term.hpp"

namespace ocalc {

/// Bounds on the surfaces kept by generate_closure. A negative `boundaries`
/// means open + 1.
struct Budget {
    int open = 0;
    int closed = 0;
    int genus = 0;
    int boundaries = -1;

    int boundary_bound() const { return boundaries < 0 ? open + 1 : boundaries; }
};

/// A surface modulo label bijection: sorted boundary lengths, genus, |C|.
struct Shape {
    std::vector<int> lengths;
    int genus = 0;
    int closed = 0;

    int open() const;
    int twice_genus() const;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

Shape shape_of(const Surface& x);

/// The shape's representative, with open labels o1, o2, ... laid out cycle by
/// cycle in `lengths` order and closed labels c1, c2, ...
Surface representative(const Shape& s);

std::string to_string(const Shape& s);

/// Breadth-first closure of μ, ω, φ under composition and contraction. Keys
/// are representatives of every reached shape within `budget`; values are
/// witness terms whose evaluation is exactly the key.
std::map<Surface, Term> generate_closure(const Budget& budget);

struct ReachabilityReport {
    std::vector<Shape> missing;          // modular KP within budget, not reached
    std::vector<Shape> extra;            // reached, not modular KP within budget
    std::vector<Shape> bad_witnesses;    // witness does not evaluate to its key
    std::size_t expected = 0;
    std::size_t reached = 0;

    bool ok() const { return missing.empty() && extra.empty() && bad_witnesses.empty(); }
};

ReachabilityReport kp_reachability_report(const Budget& budget);

}  // namespace ocalc
