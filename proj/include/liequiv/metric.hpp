#ifndef LIEQUIV_METRIC_HPP
#define LIEQUIV_METRIC_HPP

#include <cstddef>
#include <span>
#include <utility>

#include "liequiv/algebra.hpp"
#include "liequiv/matrix.hpp"

namespace liequiv {

/// Constant symmetric nondegenerate matrix s_ij = g(e_i, e_j) of a
/// left-invariant metric. Construction checks both properties exactly.
class MetricMatrix {
public:
    /// Throws AsymmetricMetric, DegenerateMetric or DimensionMismatch.
    explicit MetricMatrix(Matrix entries);

    std::size_t dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }
    const Matrix& inverse() const { return inverse_; }
    const Rational& det() const { return det_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    /// g(x, y) = xᵀ S y
    Rational inner(std::span<const Rational> x, std::span<const Rational> y) const;

    friend bool operator==(const MetricMatrix& a, const MetricMatrix& b) {
        return a.entries_ == b.entries_;
    }

private:
    Matrix entries_;
    Matrix inverse_;
    Rational det_;
};

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester inertia by exact symmetric congruence reduction. Works on any
/// symmetric matrix; a degenerate one throws DegenerateMetric.
Signature signature(const Matrix& symmetric);
Signature signature(const MetricMatrix& s);

/// (S·v)ᵀ
Covector dual_covector(const MetricMatrix& s, std::span<const Rational> v);

/// Metric adjoint A* = S⁻¹ Aᵀ S, so that g(A*x, y) = g(x, Ay).
Matrix star(const MetricMatrix& s, const Matrix& a);

struct LambdaSplit {
    Matrix skew;  ///< in Λ⁻(S) = so(S): S X + Xᵀ S = 0
    Matrix sym;   ///< in Λ⁺(S): S X − Xᵀ S = 0
};

/// A = (A − A*)/2 + (A + A*)/2.
LambdaSplit lambda_split(const MetricMatrix& s, const Matrix& a);

/// S X + Xᵀ S; zero iff X ∈ Λ⁻(S).
Matrix skew_residual(const Matrix& s, const Matrix& x);
/// S X − Xᵀ S; zero iff X ∈ Λ⁺(S).
Matrix sym_residual(const Matrix& s, const Matrix& x);

/// A = |det S̄ / det S|^{1/(n+1)} · S̄⁻¹ S, with the irrational scale kept as
/// base and exponent.
struct ATensor {
    Matrix rational_part;
    Rational scale_base;
    Rational scale_exponent;

    double scale() const;
    /// Floating-point A, entry by entry.
    std::vector<double> evaluate() const;
};

ATensor tensor_A(const MetricMatrix& s, const MetricMatrix& sbar);

/// (1 / (2(n+1))) · log|det S̄ / det S|. Constant over the group, so its
/// differential vanishes.
double phi_constant(const MetricMatrix& s, const MetricMatrix& sbar);

/// Same formula from an already-known determinant ratio.
double phi_from_det_ratio(double det_ratio, std::size_t n);

}  // namespace liequiv

#endif
