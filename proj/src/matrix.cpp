#include "liequiv/matrix.hpp"

#include <sstream>
#include <utility>

#include "liequiv/errors.hpp"

namespace liequiv {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::outer(std::span<const Rational> a, std::span<const Rational> b) {
    Matrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, std::span<const Rational> data) {
    if (data.size() != rows * cols) throw DimensionMismatch("flat data size does not match shape");
    Matrix m(rows, cols);
    std::copy(data.begin(), data.end(), m.data_.begin());
    return m;
}

RationalVector Matrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector Matrix::column(std::size_t c) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::size_t Matrix::nonzero_count() const {
    std::size_t count = 0;
    for (const auto& x : data_)
        if (x != 0) ++count;
    return count;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RationalVector operator*(const Matrix& a, std::span<const Rational> v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
    RationalVector out(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << to_string(m(i, j));
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
        const Rational inv = 1 / m(lead_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col) == 0) continue;
            const Rational factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(lead_row, j);
        }
        out.pivots.push_back(col);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<RationalVector> canonical_basis(std::span<const RationalVector> vectors) {
    if (vectors.empty()) return {};
    const std::size_t dim = vectors.front().size();
    Matrix m(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim) throw DimensionMismatch("canonical_basis: ragged vectors");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
    }
    const RowEchelon e = rref(std::move(m));
    std::vector<RationalVector> out;
    out.reserve(e.rank());
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r));
    return out;
}

std::vector<RationalVector> nullspace(const Matrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> kernel;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        kernel.push_back(std::move(v));
    }
    return canonical_basis(kernel);
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const Rational factor = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelon e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DegenerateMetric("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

RationalVector solve(const Matrix& a, std::span<const Rational> b) {
    if (!a.is_square() || a.rows() != b.size()) throw DimensionMismatch("solve: shape mismatch");
    const std::size_t n = a.rows();
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const RowEchelon e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DegenerateMetric("solve: singular system");
    return e.reduced.column(n);
}

RationalVector IncrementalSpan::reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatch("IncrementalSpan: wrong vector length");
    RationalVector r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational factor = r[pivots_[k]];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            if (rows_[k][j] != 0) r[j] -= factor * rows_[k][j];
    }
    return r;
}

bool IncrementalSpan::insert(std::span<const Rational> v) {
    RationalVector r = reduce(v);
    std::size_t pivot = 0;
    while (pivot < ambient_dim_ && r[pivot] == 0) ++pivot;
    if (pivot == ambient_dim_) return false;
    const Rational inv = 1 / r[pivot];
    for (auto& x : r) x *= inv;
    // Keep existing rows reduced in the new pivot column.
    for (auto& row : rows_) {
        const Rational factor = row[pivot];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j) row[j] -= factor * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

bool IncrementalSpan::contains(std::span<const Rational> v) const {
    for (const auto& x : reduce(v))
        if (x != 0) return false;
    return true;
}

}  // namespace liequiv
