#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ocalc/surfaces.hpp"
#include "ocalc/term.hpp"

namespace ocalc {

using Scalar = mpq_class;

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// A finite-dimensional algebra with a bilinear form. `mult` holds the
/// structure constants: e_i·e_j = Σ_k m(i,j,k) e_k.
struct FrobeniusAlgebra {
    std::size_t dim = 0;
    std::vector<Scalar> mult;  // dim^3, index (i*dim + j)*dim + k
    Matrix form;

    const Scalar& m(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
    Scalar& m(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
    /// β(e_i·e_j, e_k)
    Scalar trilinear(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Open algebra A, closed algebra B and f: B → A as a dim(A)×dim(B) matrix
/// whose column d is f(b_d).
struct OpenClosedData {
    FrobeniusAlgebra A;
    FrobeniusAlgebra B;
    Matrix f;
};

/// Inverse of a symmetric nondegenerate form. Throws Errc::SingularForm.
Matrix copairing(const Matrix& form);

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_pass() const;
    const CheckLine& line(const std::string& name) const;
};

/// The two sides of the Cardy identity as dim(A)×dim(A) matrices:
/// left(a,b) = Σ β_A⁻¹(k,l) β_A(e_a e_k, e_b e_l),
/// right(a,b) = Σ β_B⁻¹(m,n) β_A(e_a, f(c_m)) β_A(f(c_n), e_b).
std::pair<Matrix, Matrix> cardy_sides(const OpenClosedData& data);

/// Lines, in order: A.form_symmetric, A.associative, A.frobenius,
/// B.form_symmetric, B.associative, B.commutative_frobenius,
/// f.multiplicative, f.central, cardy. Throws Errc::ShapeMismatch on
/// inconsistent dimensions and Errc::SingularForm on a degenerate form.
CheckReport check_open_closed(const OpenClosedData& data);

struct Slot {
    Label label;
    Color color;
    friend bool operator==(const Slot&, const Slot&) = default;
};

/// A multilinear form on ⊗A^{open slots} ⊗ B^{closed slots}, stored densely
/// in row-major order over `slots`.
struct MultilinearForm {
    std::vector<Slot> slots;
    std::vector<std::size_t> dims;
    std::vector<Scalar> values;

    friend bool operator==(const MultilinearForm&, const MultilinearForm&) = default;
};

/// The same form with slots sorted by label.
MultilinearForm sorted_slots(const MultilinearForm& f);

/// μ ↦ β_A(e_i e_j, e_k), ω ↦ β_B(b_i b_j, b_k), φ ↦ β_A(e_p, f(b_d));
/// gluings and contractions go through the copairing of their color.
MultilinearForm eval_term_end(const Term& t, const OpenClosedData& data);

struct Verdict {
    bool equal;
    std::optional<std::size_t> witness;  // flat index into the label-sorted forms
    std::string detail;
};

/// Compares the End-values of two terms with the same free labels and the
/// same surface. Throws Errc::ShapeMismatch otherwise.
Verdict end_well_definedness(const Term& t1, const Term& t2, const OpenClosedData& data);

/// Ready-made data sets.
OpenClosedData scalar_data();
/// A = M_2 in basis E11, E12, E21, E22 with the trace form, B = 𝕜 with
/// β_B(1,1) = lambda, f(1) = identity.
OpenClosedData matrix_data(const Scalar& lambda = 1);
/// A = B = 𝕜^n, coordinatewise product, identity forms, f = id.
OpenClosedData diagonal_data(std::size_t n);

}  // namespace ocalc
