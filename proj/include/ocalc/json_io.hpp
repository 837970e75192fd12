#pragma once

#include "json.hpp"

#include "ocalc/closure.hpp"
#include "ocalc/completion.hpp"
#include "ocalc/frobenius.hpp"
#include "ocalc/surfaces.hpp"
#include "ocalc/term.hpp"

namespace ocalc {

using Json = nlohmann::json;

// Surface:  {"open": [["p","q"], []], "g": 0, "closed": ["c"]}
// Nested:   {"nests": [{"open": [["q"]], "g": 0}], "g": 0, "closed": []}
// Term:     {"gen": "mu", "legs": [...]}, {"comp": [t1, t2, "u", "v"]}, {"xi": [t, "u", "v"]}
// Algebra:  {"dim": n, "mult": [[[...]]], "form": [[...]]};  data: {"A": .., "B": .., "f": [[...]]}
// Scalars are integers or "p/q" strings.
// All parsers throw Errc::Parse on malformed input.

Json to_json(const Cycle& c);
Json to_json(const Multicycle& m);
Json to_json(const Surface& x);
Json to_json(const Nest& n);
Json to_json(const NestedSurface& x);
Json to_json(const Term& t);
Json to_json(const Scalar& s);
Json to_json(const Matrix& m);
Json to_json(const FrobeniusAlgebra& a);
Json to_json(const OpenClosedData& d);
Json to_json(const MultilinearForm& f);
Json to_json(const Shape& s);
Json to_json(const CheckReport& r);
Json to_json(const TagSet& t);

Multicycle multicycle_from_json(const Json& j);
Surface surface_from_json(const Json& j);
NestedSurface nested_from_json(const Json& j);
Term term_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
FrobeniusAlgebra algebra_from_json(const Json& j);
OpenClosedData data_from_json(const Json& j);

/// Parses JSON text, wrapping parser failures in Errc::Parse.
Json parse_json(const std::string& text);

}  // namespace ocalc
