#ifndef LIEQUIV_MATRIX_HPP
#define LIEQUIV_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "liequiv/rational.hpp"

namespace liequiv {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// E_{ij}: single 1 at (i, j).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
    static Matrix diagonal(std::span<const Rational> entries);
    /// Outer product a·bᵀ.
    static Matrix outer(std::span<const Rational> a, std::span<const Rational> b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Row-major flattening.
    const std::vector<Rational>& flat() const { return data_; }
    static Matrix from_flat(std::size_t rows, std::size_t cols, std::span<const Rational> data);

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;

    bool is_zero() const;
    bool is_symmetric() const;
    std::size_t nonzero_count() const;

    Matrix transpose() const;
    Rational trace() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& scalar);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend RationalVector operator*(const Matrix& a, std::span<const Rational> v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// [a, b] = ab − ba.
Matrix commutator(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

// ---------------------------------------------------------------------------
// Exact elimination

struct RowEchelon {
    Matrix reduced;                  ///< reduced row-echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row-echelon form.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m·x = 0}. Vectors are returned as the rows of their own
/// reduced echelon form, so each has leading entry 1 and the list is
/// canonical for the kernel.
std::vector<RationalVector> nullspace(const Matrix& m);

/// Canonical basis (reduced echelon rows) of the span of the given vectors.
std::vector<RationalVector> canonical_basis(std::span<const RationalVector> vectors);

Rational determinant(const Matrix& m);

/// Throws DegenerateMetric if singular.
Matrix inverse(const Matrix& m);

/// Unique solution of a·x = b; throws DegenerateMetric if a is singular.
RationalVector solve(const Matrix& a, std::span<const Rational> b);

/// Incrementally maintained echelon basis, used for rank growth and
/// span-membership tests.
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    /// Adds v if independent of the current span; returns whether it grew.
    bool insert(std::span<const Rational> v);
    bool contains(std::span<const Rational> v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }

private:
    RationalVector reduce(std::span<const Rational> v) const;

    std::size_t ambient_dim_;
    std::vector<RationalVector> rows_;  // each normalized: pivot entry 1
    std::vector<std::size_t> pivots_;
};

}  // namespace liequiv

#endif
