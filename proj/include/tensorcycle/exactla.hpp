#pragma once

// Dense exact linear algebra over a FieldSpec.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "tensorcycle/field.hpp"

namespace tcyc {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t index);
Vector int_vector(FieldSpec field, std::initializer_list<long> values);
bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);

class Matrix {
public:
    explicit Matrix(FieldSpec field = FieldSpec::rationals(), std::size_t rows = 0, std::size_t cols = 0);

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols);
    static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows);

    FieldSpec field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_vectors() const;

    Matrix transpose() const;
    Vector apply(const Vector& x) const;
    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    /// Rows [begin, end) stacked on top of each other.
    Matrix row_range(std::size_t begin, std::size_t end) const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Stacks a on top of b; column counts must match.
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots chosen leftmost column first, topmost
/// nonzero row first, so the result is reproducible.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of F^n identified by its RREF basis (rows).
class Subspace {
public:
    explicit Subspace(FieldSpec field = FieldSpec::rationals(), std::size_t ambient_dim = 0);

    static Subspace zero(FieldSpec field, std::size_t ambient_dim) { return Subspace(field, ambient_dim); }
    static Subspace full(FieldSpec field, std::size_t ambient_dim);
    static Subspace span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& generators);
    static Subspace row_space(const Matrix& m);

    FieldSpec field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Matrix basis_;
};

Subspace kernel_basis(const Matrix& m);
/// Column space of m, as a subspace of F^{rows}.
Subspace image_basis(const Matrix& m);
/// Zassenhaus stacked-block intersection.
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool member(const Subspace& s, const Vector& v);

/// Solves m x = b; returns one solution or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Exact determinant. Over Q this is fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix.
Scalar determinant(const Matrix& m);

struct PsdCertificate {
    bool psd = false;
    /// Diagonal pivots of the greedy LDL^T, in elimination order (PSD case).
    std::vector<Scalar> pivots;
    /// Elimination order of the pivots.
    std::vector<std::size_t> order;
    /// Witness v with v^T m v < 0 (NotPSD case).
    Vector witness;
    Scalar witness_value;
};

/// LDL^T with greedy diagonal pivoting over Q. Throws NotSymmetric, and
/// FieldMismatch over finite fields.
PsdCertificate psd_certificate(const Matrix& m);

Scalar quadratic_form(const Matrix& m, const Vector& v);

/// Coefficients c_0..c_n of det(lambda I - m), ascending powers; c_n = 1.
/// Faddeev-LeVerrier recurrence over Q.
std::vector<Scalar> char_poly(const Matrix& m);

struct Eigenvalue {
    Scalar value;
    std::size_t multiplicity = 0;
};

struct Spectrum {
    /// True when the characteristic polynomial splits over Q.
    bool full = false;
    /// Ascending eigenvalues (only when full).
    std::vector<Eigenvalue> eigenvalues;
    std::size_t rank = 0;
    bool psd = false;
};

/// Rational eigenvalues of a symmetric rational matrix. When the spectrum does
/// not split over Q the result carries only rank and the PSD verdict.
Spectrum rational_spectrum(const Matrix& m);

}  // namespace tcyc
