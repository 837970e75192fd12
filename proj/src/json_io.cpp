#include "ocalc/json_io.hpp"

#include "ocalc/error.hpp"

namespace ocalc {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
    throw Error(Errc::Parse, what + ": " + j.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'", j);
    return j.at(key);
}

Label label_from_json(const Json& j) {
    if (!j.is_string()) bad("label must be a string", j);
    return Label(j.get<std::string>());
}

int int_from_json(const Json& j) {
    if (!j.is_number_integer()) bad("expected an integer", j);
    return j.get<int>();
}

LabelSet labels_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array of labels", j);
    LabelSet out;
    for (const auto& x : j)
        if (!out.insert(label_from_json(x)).second) throw Error(Errc::DuplicateLabel, "label repeated: " + j.dump());
    return out;
}

Json labels_to_json(const LabelSet& s) {
    Json out = Json::array();
    for (const auto& l : s) out.push_back(l.token());
    return out;
}

std::size_t size_from_json(const Json& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) bad("expected a size", j);
    return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Cycle& c) {
    Json out = Json::array();
    for (const auto& l : c.word()) out.push_back(l.token());
    return out;
}

Json to_json(const Multicycle& m) {
    Json out = Json::array();
    for (const auto& c : m.cycles()) out.push_back(to_json(c));
    return out;
}

Json to_json(const Surface& x) {
    return {{"open", to_json(x.boundaries())}, {"g", x.genus()}, {"closed", labels_to_json(x.closed())}};
}

Json to_json(const Nest& n) { return {{"open", to_json(n.boundaries())}, {"g", n.genus()}}; }

Json to_json(const NestedSurface& x) {
    Json nests = Json::array();
    for (const auto& n : x.nests()) nests.push_back(to_json(n));
    return {{"nests", nests}, {"g", x.outer_genus()}, {"closed", labels_to_json(x.closed())}};
}

Json to_json(const Term& t) {
    auto legs = [&] {
        Json out = Json::array();
        for (const auto& l : t.legs()) out.push_back(l.token());
        return out;
    };
    switch (t.kind()) {
    case Term::Kind::Mu: return {{"gen", "mu"}, {"legs", legs()}};
    case Term::Kind::Omega: return {{"gen", "omega"}, {"legs", legs()}};
    case Term::Kind::Phi: return {{"gen", "phi"}, {"legs", legs()}};
    case Term::Kind::Comp:
        return {{"comp", Json::array({to_json(t.left()), to_json(t.right()), t.u().token(), t.v().token()})}};
    case Term::Kind::Contract:
        return {{"xi", Json::array({to_json(t.body()), t.u().token(), t.v().token()})}};
    }
    return nullptr;
}

Json to_json(const Scalar& s) {
    if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
    return s.get_str();
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Json to_json(const FrobeniusAlgebra& a) {
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        Json plane = Json::array();
        for (std::size_t j = 0; j < a.dim; ++j) {
            Json row = Json::array();
            for (std::size_t k = 0; k < a.dim; ++k) row.push_back(to_json(a.m(i, j, k)));
            plane.push_back(row);
        }
        mult.push_back(plane);
    }
    return {{"dim", a.dim}, {"mult", mult}, {"form", to_json(a.form)}};
}

Json to_json(const OpenClosedData& d) { return {{"A", to_json(d.A)}, {"B", to_json(d.B)}, {"f", to_json(d.f)}}; }

Json to_json(const MultilinearForm& f) {
    Json slots = Json::array();
    for (const auto& s : f.slots) slots.push_back({{"label", s.label.token()}, {"color", to_string(s.color)}});
    Json values = Json::array();
    for (const auto& v : f.values) values.push_back(to_json(v));
    return {{"slots", slots}, {"dims", f.dims}, {"values", values}};
}

Json to_json(const Shape& s) { return {{"lengths", s.lengths}, {"g", s.genus}, {"closed", s.closed}}; }

Json to_json(const CheckReport& r) {
    Json lines = Json::array();
    for (const auto& l : r.lines) {
        Json line = {{"check", l.name}, {"pass", l.pass}};
        if (!l.detail.empty()) line["detail"] = l.detail;
        lines.push_back(line);
    }
    return {{"lines", lines}, {"pass", r.all_pass()}};
}

Json to_json(const TagSet& t) { return t.names(); }

Multicycle multicycle_from_json(const Json& j) {
    if (!j.is_array()) bad("multicycle must be an array of cycles", j);
    std::vector<Cycle> cycles;
    for (const auto& c : j) {
        if (!c.is_array()) bad("cycle must be an array of labels", c);
        std::vector<Label> word;
        for (const auto& l : c) word.push_back(label_from_json(l));
        cycles.push_back(canonical_cycle(std::move(word)));
    }
    return Multicycle(std::move(cycles));
}

Surface surface_from_json(const Json& j) {
    const LabelSet closed = j.contains("closed") ? labels_from_json(j.at("closed")) : LabelSet{};
    return Surface(multicycle_from_json(field(j, "open")), int_from_json(field(j, "g")), closed);
}

NestedSurface nested_from_json(const Json& j) {
    const Json& ns = field(j, "nests");
    if (!ns.is_array()) bad("nests must be an array", ns);
    std::vector<Nest> nests;
    for (const auto& n : ns) nests.emplace_back(multicycle_from_json(field(n, "open")), int_from_json(field(n, "g")));
    const LabelSet closed = j.contains("closed") ? labels_from_json(j.at("closed")) : LabelSet{};
    return NestedSurface(std::move(nests), int_from_json(field(j, "g")), closed);
}

Term term_from_json(const Json& j) {
    if (!j.is_object()) bad("term must be an object", j);
    if (j.contains("gen")) {
        const Json& legs = field(j, "legs");
        if (!legs.is_array()) bad("legs must be an array", j);
        std::vector<Label> ls;
        for (const auto& l : legs) ls.push_back(label_from_json(l));
        const auto gen = j.at("gen");
        if (gen == "mu" && ls.size() == 3) return Term::mu(ls[0], ls[1], ls[2]);
        if (gen == "omega" && ls.size() == 3) return Term::omega(ls[0], ls[1], ls[2]);
        if (gen == "phi" && ls.size() == 2) return Term::phi(ls[0], ls[1]);
        bad("unknown generator or wrong number of legs", j);
    }
    if (j.contains("comp")) {
        const Json& c = j.at("comp");
        if (!c.is_array() || c.size() != 4) bad("comp takes [left, right, u, v]", j);
        return Term::comp(term_from_json(c[0]), term_from_json(c[1]), label_from_json(c[2]), label_from_json(c[3]));
    }
    if (j.contains("xi")) {
        const Json& c = j.at("xi");
        if (!c.is_array() || c.size() != 3) bad("xi takes [body, u, v]", j);
        return Term::contract(term_from_json(c[0]), label_from_json(c[1]), label_from_json(c[2]));
    }
    bad("term needs one of gen, comp, xi", j);
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) {
        Scalar s;
        if (s.set_str(j.get<std::string>(), 10) != 0 || s.get_den() == 0) bad("bad rational", j);
        s.canonicalize();
        return s;
    }
    bad("scalar must be an integer or a \"p/q\" string", j);
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix must be a nonempty array of rows", j);
    Matrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) bad("ragged matrix", j);
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

FrobeniusAlgebra algebra_from_json(const Json& j) {
    FrobeniusAlgebra a;
    a.dim = size_from_json(field(j, "dim"));
    const Json& mult = field(j, "mult");
    if (!mult.is_array() || mult.size() != a.dim) throw Error(Errc::ShapeMismatch, "mult must be dim x dim x dim");
    a.mult.resize(a.dim * a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (!mult[i].is_array() || mult[i].size() != a.dim)
            throw Error(Errc::ShapeMismatch, "mult must be dim x dim x dim");
        for (std::size_t k = 0; k < a.dim; ++k) {
            if (!mult[i][k].is_array() || mult[i][k].size() != a.dim)
                throw Error(Errc::ShapeMismatch, "mult must be dim x dim x dim");
            for (std::size_t l = 0; l < a.dim; ++l) a.m(i, k, l) = scalar_from_json(mult[i][k][l]);
        }
    }
    a.form = matrix_from_json(field(j, "form"));
    return a;
}

OpenClosedData data_from_json(const Json& j) {
    return {algebra_from_json(field(j, "A")), algebra_from_json(field(j, "B")), matrix_from_json(field(j, "f"))};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(Errc::Parse, e.what());
    }
}

}  // namespace ocalc
