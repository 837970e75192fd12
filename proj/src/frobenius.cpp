#include "ocalc/frobenius.hpp"

#include <algorithm>
#include <numeric>

#include "ocalc/error.hpp"
#include "ocalc/presentation.hpp"

namespace ocalc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "matrix product of incompatible shapes");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Scalar FrobeniusAlgebra::trilinear(std::size_t i, std::size_t j, std::size_t k) const {
    Scalar s = 0;
    for (std::size_t m = 0; m < dim; ++m)
        if (this->m(i, j, m) != 0) s += this->m(i, j, m) * form(m, k);
    return s;
}

Matrix copairing(const Matrix& form) {
    const std::size_t n = form.rows();
    if (form.cols() != n) throw Error(Errc::ShapeMismatch, "form is not square");
    Matrix a = form;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw Error(Errc::SingularForm, "form is degenerate");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Scalar p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Scalar factor = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

bool CheckReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

const CheckLine& CheckReport::line(const std::string& name) const {
    for (const auto& l : lines)
        if (l.name == name) return l;
    throw Error(Errc::MissingLabel, "no check line '" + name + "'");
}

// ---------------------------------------------------------------- axiom checks

namespace {

void require_shape(const FrobeniusAlgebra& x, const char* name) {
    if (x.dim == 0) throw Error(Errc::ShapeMismatch, std::string(name) + ": dimension must be positive");
    if (x.mult.size() != x.dim * x.dim * x.dim)
        throw Error(Errc::ShapeMismatch, std::string(name) + ": mult needs dim^3 entries");
    if (x.form.rows() != x.dim || x.form.cols() != x.dim)
        throw Error(Errc::ShapeMismatch, std::string(name) + ": form must be dim x dim");
}

void require_shape(const OpenClosedData& d) {
    require_shape(d.A, "A");
    require_shape(d.B, "B");
    if (d.f.rows() != d.A.dim || d.f.cols() != d.B.dim)
        throw Error(Errc::ShapeMismatch, "f must be dim(A) x dim(B)");
}

std::string at(std::initializer_list<std::size_t> idx) {
    std::string out = "first failure at (";
    bool first = true;
    for (auto i : idx) {
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return out + ")";
}

CheckLine symmetric(const FrobeniusAlgebra& x, const std::string& name) {
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j)
            if (x.form(i, j) != x.form(j, i)) return {name, false, at({i, j})};
    return {name, true, ""};
}

CheckLine associative(const FrobeniusAlgebra& x, const std::string& name) {
    const std::size_t n = x.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t out = 0; out < n; ++out) {
                    Scalar lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += x.m(i, j, m) * x.m(m, k, out);
                        rhs += x.m(j, k, m) * x.m(i, m, out);
                    }
                    if (lhs != rhs) return {name, false, at({i, j, k})};
                }
    return {name, true, ""};
}

CheckLine cyclic(const FrobeniusAlgebra& x, const std::string& name, bool fully_symmetric) {
    const std::size_t n = x.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar t = x.trilinear(i, j, k);
                if (t != x.trilinear(j, k, i)) return {name, false, at({i, j, k})};
                if (fully_symmetric && t != x.trilinear(j, i, k)) return {name, false, at({i, j, k})};
            }
    return {name, true, ""};
}

// f(b_i) as a vector in A
std::vector<Scalar> image(const OpenClosedData& d, std::size_t i) {
    std::vector<Scalar> v(d.A.dim);
    for (std::size_t x = 0; x < d.A.dim; ++x) v[x] = d.f(x, i);
    return v;
}

std::vector<Scalar> product(const FrobeniusAlgebra& a, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(a.dim);
    for (std::size_t x = 0; x < a.dim; ++x) {
        if (u[x] == 0) continue;
        for (std::size_t y = 0; y < a.dim; ++y) {
            if (v[y] == 0) continue;
            for (std::size_t k = 0; k < a.dim; ++k) out[k] += u[x] * v[y] * a.m(x, y, k);
        }
    }
    return out;
}

std::vector<Scalar> basis(std::size_t dim, std::size_t i) {
    std::vector<Scalar> v(dim);
    v[i] = 1;
    return v;
}

CheckLine multiplicative(const OpenClosedData& d) {
    for (std::size_t i = 0; i < d.B.dim; ++i)
        for (std::size_t j = 0; j < d.B.dim; ++j) {
            std::vector<Scalar> lhs(d.A.dim);
            for (std::size_t m = 0; m < d.B.dim; ++m)
                for (std::size_t x = 0; x < d.A.dim; ++x) lhs[x] += d.B.m(i, j, m) * d.f(x, m);
            if (lhs != product(d.A, image(d, i), image(d, j))) return {"f.multiplicative", false, at({i, j})};
        }
    return {"f.multiplicative", true, ""};
}

CheckLine central(const OpenClosedData& d) {
    for (std::size_t i = 0; i < d.B.dim; ++i)
        for (std::size_t a = 0; a < d.A.dim; ++a) {
            const auto fb = image(d, i);
            const auto e = basis(d.A.dim, a);
            if (product(d.A, fb, e) != product(d.A, e, fb)) return {"f.central", false, at({i, a})};
        }
    return {"f.central", true, ""};
}

}  // namespace

std::pair<Matrix, Matrix> cardy_sides(const OpenClosedData& d) {
    require_shape(d);
    const std::size_t n = d.A.dim;
    const Matrix ga = copairing(d.A.form);
    const Matrix gb = copairing(d.B.form);
    // ea_ek[a][k] = e_a·e_k as a vector
    std::vector<std::vector<std::vector<Scalar>>> prod(n, std::vector<std::vector<Scalar>>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < n; ++k) prod[a][k] = product(d.A, basis(n, a), basis(n, k));
    auto beta = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
        Scalar s = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (u[x] != 0 && v[y] != 0) s += u[x] * d.A.form(x, y) * v[y];
        return s;
    };
    Matrix left(n, n), right(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (ga(k, l) != 0) left(a, b) += ga(k, l) * beta(prod[a][k], prod[b][l]);
    // phi(a, m) = β_A(e_a, f(c_m))
    Matrix phi(n, d.B.dim);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t m = 0; m < d.B.dim; ++m) phi(a, m) = beta(basis(n, a), image(d, m));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t m = 0; m < d.B.dim; ++m)
                for (std::size_t k = 0; k < d.B.dim; ++k) right(a, b) += gb(m, k) * phi(a, m) * phi(b, k);
    return {left, right};
}

CheckReport check_open_closed(const OpenClosedData& d) {
    require_shape(d);
    CheckReport r;
    r.lines.push_back(symmetric(d.A, "A.form_symmetric"));
    r.lines.push_back(associative(d.A, "A.associative"));
    r.lines.push_back(cyclic(d.A, "A.frobenius", false));
    r.lines.push_back(symmetric(d.B, "B.form_symmetric"));
    r.lines.push_back(associative(d.B, "B.associative"));
    r.lines.push_back(cyclic(d.B, "B.commutative_frobenius", true));
    r.lines.push_back(multiplicative(d));
    r.lines.push_back(central(d));
    const auto [left, right] = cardy_sides(d);
    CheckLine cardy{"cardy", true, ""};
    for (std::size_t a = 0; a < left.rows() && cardy.pass; ++a)
        for (std::size_t b = 0; b < left.cols(); ++b)
            if (left(a, b) != right(a, b)) {
                cardy = {"cardy", false,
                         at({a, b}) + ": " + left(a, b).get_str() + " vs " + right(a, b).get_str()};
                break;
            }
    r.lines.push_back(cardy);
    return r;
}

// ---------------------------------------------------------------- End_{A,B}

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
    return s;
}

std::size_t volume(const std::vector<std::size_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void advance(std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < dims[i]) return;
        idx[i] = 0;
    }
}

std::size_t slot_index(const MultilinearForm& x, const Label& l) {
    for (std::size_t i = 0; i < x.slots.size(); ++i)
        if (x.slots[i].label == l) return i;
    throw Error(Errc::MalformedTerm, "no slot '" + l.token() + "'");
}

MultilinearForm generator(std::vector<Slot> slots, std::vector<std::size_t> dims) {
    MultilinearForm out{std::move(slots), std::move(dims), {}};
    out.values.resize(volume(out.dims));
    return out;
}

// Σ_{k,l} x[.., k@i, ..] g(k,l) y[.., l@j, ..]
MultilinearForm glue(const MultilinearForm& x, std::size_t i, const MultilinearForm& y, std::size_t j,
                     const Matrix& g) {
    const std::size_t d = x.dims[i];
    // xg[.., l@i, ..] = Σ_k x[.., k@i, ..] g(k,l)
    MultilinearForm xg = x;
    const auto sx = strides_of(x.dims);
    const auto sy = strides_of(y.dims);
    std::vector<std::size_t> idx(x.dims.size(), 0);
    for (std::size_t flat = 0; flat < x.values.size(); ++flat, advance(idx, x.dims)) {
        const std::size_t base = flat - idx[i] * sx[i];
        Scalar s = 0;
        for (std::size_t k = 0; k < d; ++k)
            if (g(k, idx[i]) != 0) s += x.values[base + k * sx[i]] * g(k, idx[i]);
        xg.values[flat] = s;
    }
    MultilinearForm out;
    for (std::size_t a = 0; a < x.slots.size(); ++a)
        if (a != i) {
            out.slots.push_back(x.slots[a]);
            out.dims.push_back(x.dims[a]);
        }
    for (std::size_t b = 0; b < y.slots.size(); ++b)
        if (b != j) {
            out.slots.push_back(y.slots[b]);
            out.dims.push_back(y.dims[b]);
        }
    out.values.resize(volume(out.dims));
    std::vector<std::size_t> r(out.dims.size(), 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat, advance(r, out.dims)) {
        std::size_t ox = 0, oy = 0, p = 0;
        for (std::size_t a = 0; a < x.slots.size(); ++a)
            if (a != i) ox += r[p++] * sx[a];
        for (std::size_t b = 0; b < y.slots.size(); ++b)
            if (b != j) oy += r[p++] * sy[b];
        Scalar s = 0;
        for (std::size_t l = 0; l < d; ++l) s += xg.values[ox + l * sx[i]] * y.values[oy + l * sy[j]];
        out.values[flat] = s;
    }
    return out;
}

// Σ_{k,l} x[.., k@i, .., l@j, ..] g(k,l)
MultilinearForm self_glue(const MultilinearForm& x, std::size_t i, std::size_t j, const Matrix& g) {
    const auto sx = strides_of(x.dims);
    MultilinearForm out;
    for (std::size_t a = 0; a < x.slots.size(); ++a)
        if (a != i && a != j) {
            out.slots.push_back(x.slots[a]);
            out.dims.push_back(x.dims[a]);
        }
    out.values.resize(volume(out.dims));
    std::vector<std::size_t> r(out.dims.size(), 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat, advance(r, out.dims)) {
        std::size_t base = 0, p = 0;
        for (std::size_t a = 0; a < x.slots.size(); ++a)
            if (a != i && a != j) base += r[p++] * sx[a];
        Scalar s = 0;
        for (std::size_t k = 0; k < x.dims[i]; ++k)
            for (std::size_t l = 0; l < x.dims[j]; ++l)
                if (g(k, l) != 0) s += x.values[base + k * sx[i] + l * sx[j]] * g(k, l);
        out.values[flat] = s;
    }
    return out;
}

struct EndContext {
    const OpenClosedData& data;
    Matrix ga, gb;
};

MultilinearForm eval_end(const Term& t, const EndContext& c) {
    const auto& A = c.data.A;
    const auto& B = c.data.B;
    switch (t.kind()) {
    case Term::Kind::Mu:
    case Term::Kind::Omega: {
        const bool open = t.kind() == Term::Kind::Mu;
        const auto& alg = open ? A : B;
        const Color col = open ? Color::Open : Color::Closed;
        const auto& l = t.legs();
        auto out = generator({{l[0], col}, {l[1], col}, {l[2], col}}, {alg.dim, alg.dim, alg.dim});
        std::size_t flat = 0;
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t j = 0; j < alg.dim; ++j)
                for (std::size_t k = 0; k < alg.dim; ++k) out.values[flat++] = alg.trilinear(i, j, k);
        return out;
    }
    case Term::Kind::Phi: {
        auto out = generator({{t.legs()[0], Color::Open}, {t.legs()[1], Color::Closed}}, {A.dim, B.dim});
        for (std::size_t p = 0; p < A.dim; ++p)
            for (std::size_t d = 0; d < B.dim; ++d) {
                Scalar s = 0;
                for (std::size_t i = 0; i < A.dim; ++i) s += A.form(p, i) * c.data.f(i, d);
                out.values[p * B.dim + d] = s;
            }
        return out;
    }
    case Term::Kind::Comp: {
        auto x = eval_end(t.left(), c);
        auto y = eval_end(t.right(), c);
        const auto i = slot_index(x, t.u());
        const auto j = slot_index(y, t.v());
        return glue(x, i, y, j, x.slots[i].color == Color::Open ? c.ga : c.gb);
    }
    case Term::Kind::Contract: {
        auto x = eval_end(t.body(), c);
        const auto i = slot_index(x, t.u());
        const auto j = slot_index(x, t.v());
        return self_glue(x, i, j, x.slots[i].color == Color::Open ? c.ga : c.gb);
    }
    }
    throw Error(Errc::MalformedTerm, "unknown term kind");
}

}  // namespace

MultilinearForm sorted_slots(const MultilinearForm& f) {
    std::vector<std::size_t> perm(f.slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return f.slots[a].label < f.slots[b].label; });
    MultilinearForm out;
    for (auto p : perm) {
        out.slots.push_back(f.slots[p]);
        out.dims.push_back(f.dims[p]);
    }
    out.values.resize(f.values.size());
    const auto old_strides = strides_of(f.dims);
    std::vector<std::size_t> idx(out.dims.size(), 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat, advance(idx, out.dims)) {
        std::size_t old = 0;
        for (std::size_t s = 0; s < perm.size(); ++s) old += idx[s] * old_strides[perm[s]];
        out.values[flat] = f.values[old];
    }
    return out;
}

MultilinearForm eval_term_end(const Term& t, const OpenClosedData& data) {
    require_shape(data);
    free_labels(t);
    EndContext c{data, copairing(data.A.form), copairing(data.B.form)};
    return eval_end(t, c);
}

Verdict end_well_definedness(const Term& t1, const Term& t2, const OpenClosedData& data) {
    if (free_labels(t1) != free_labels(t2))
        throw Error(Errc::ShapeMismatch, "terms have different free labels");
    if (eval_term(t1).surface != eval_term(t2).surface)
        throw Error(Errc::ShapeMismatch, "terms evaluate to different surfaces");
    const auto f1 = sorted_slots(eval_term_end(t1, data));
    const auto f2 = sorted_slots(eval_term_end(t2, data));
    for (std::size_t i = 0; i < f1.values.size(); ++i)
        if (f1.values[i] != f2.values[i])
            return {false, i, "index " + std::to_string(i) + ": " + f1.values[i].get_str() + " vs " +
                                  f2.values[i].get_str()};
    return {true, std::nullopt, ""};
}

// ---------------------------------------------------------------- sample data

namespace {

FrobeniusAlgebra field(const Scalar& lambda) {
    FrobeniusAlgebra k{1, {Scalar(1)}, Matrix(1, 1)};
    k.form(0, 0) = lambda;
    return k;
}

}  // namespace

OpenClosedData scalar_data() {
    OpenClosedData d{field(1), field(1), Matrix::identity(1)};
    return d;
}

OpenClosedData matrix_data(const Scalar& lambda) {
    // E_ab has index 2a + b; E_ab E_cd = δ_bc E_ad and tr(E_ab E_cd) = δ_bc δ_ad
    FrobeniusAlgebra m2{4, std::vector<Scalar>(64), Matrix(4, 4)};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    if (b == c) m2.m(2 * a + b, 2 * c + d, 2 * a + d) = 1;
                    if (b == c && a == d) m2.form(2 * a + b, 2 * c + d) = 1;
                }
    Matrix f(4, 1);
    f(0, 0) = 1;
    f(3, 0) = 1;
    return {m2, field(lambda), f};
}

OpenClosedData diagonal_data(std::size_t n) {
    FrobeniusAlgebra a{n, std::vector<Scalar>(n * n * n), Matrix::identity(n)};
    for (std::size_t i = 0; i < n; ++i) a.m(i, i, i) = 1;
    return {a, a, Matrix::identity(n)};
}

}  // namespace ocalc
