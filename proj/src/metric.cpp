#include "liequiv/metric.hpp"

#include <cmath>

#include "liequiv/errors.hpp"

namespace liequiv {

MetricMatrix::MetricMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_square() || entries_.rows() == 0)
        throw DimensionMismatch("metric matrix must be square and non-empty");
    if (!entries_.is_symmetric()) throw AsymmetricMetric("metric matrix is not symmetric");
    det_ = determinant(entries_);
    if (det_ == 0) throw DegenerateMetric("metric matrix is degenerate (det = 0)");
    inverse_ = liequiv::inverse(entries_);
}

Rational MetricMatrix::inner(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("inner: vector length");
    const RationalVector sy = entries_ * y;
    Rational total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * sy[i];
    return total;
}

Signature signature(const Matrix& symmetric) {
    if (!symmetric.is_symmetric()) throw AsymmetricMetric("signature of a non-symmetric matrix");
    Matrix a = symmetric;
    const std::size_t n = a.rows();
    Signature sig;
    // Lagrange reduction: each step applies a congruence A -> Pᵀ A P that
    // clears one row and column, recording the sign of the split-off pivot.
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && a(pivot, pivot) == 0) ++pivot;
        if (pivot == n) {
            // No nonzero diagonal left: find an off-diagonal a(p', q) != 0
            // and replace e_{p'} by e_{p'} + e_q, which makes a(p',p') = 2a(p',q).
            bool found = false;
            for (std::size_t i = p; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j) {
                    if (a(i, j) == 0) continue;
                    for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
                    for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
                    pivot = i;
                    found = true;
                }
            if (!found) throw DegenerateMetric("matrix is degenerate");
        }
        if (pivot != p) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(pivot, k), a(p, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(a(k, pivot), a(k, p));
        }
        const Rational d = a(p, p);
        for (std::size_t r = p + 1; r < n; ++r) {
            if (a(r, p) == 0) continue;
            const Rational f = a(r, p) / d;
            for (std::size_t k = p; k < n; ++k) a(r, k) -= f * a(p, k);
            for (std::size_t k = p; k < n; ++k) a(k, r) -= f * a(k, p);
        }
        if (d > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

Signature signature(const MetricMatrix& s) { return signature(s.matrix()); }

Covector dual_covector(const MetricMatrix& s, std::span<const Rational> v) {
    if (v.size() != s.dim()) throw DimensionMismatch("dual_covector: vector length != dim");
    return Covector{s.matrix() * v};
}

Matrix star(const MetricMatrix& s, const Matrix& a) {
    if (a.rows() != s.dim() || a.cols() != s.dim()) throw DimensionMismatch("star: shape");
    return s.inverse() * a.transpose() * s.matrix();
}

LambdaSplit lambda_split(const MetricMatrix& s, const Matrix& a) {
    const Matrix a_star = star(s, a);
    const Rational half(1, 2);
    return {(a - a_star) * half, (a + a_star) * half};
}

Matrix skew_residual(const Matrix& s, const Matrix& x) { return s * x + x.transpose() * s; }

Matrix sym_residual(const Matrix& s, const Matrix& x) { return s * x - x.transpose() * s; }

double ATensor::scale() const {
    return std::pow(to_double(scale_base), to_double(scale_exponent));
}

std::vector<double> ATensor::evaluate() const {
    const double c = scale();
    std::vector<double> out;
    out.reserve(rational_part.flat().size());
    for (const auto& x : rational_part.flat()) out.push_back(c * to_double(x));
    return out;
}

ATensor tensor_A(const MetricMatrix& s, const MetricMatrix& sbar) {
    if (s.dim() != sbar.dim()) throw DimensionMismatch("tensor_A: dimensions differ");
    return {sbar.inverse() * s.matrix(), abs(sbar.det() / s.det()),
            Rational(1, static_cast<long>(s.dim() + 1))};
}

double phi_from_det_ratio(double det_ratio, std::size_t n) {
    return std::log(std::fabs(det_ratio)) / (2.0 * static_cast<double>(n + 1));
}

double phi_constant(const MetricMatrix& s, const MetricMatrix& sbar) {
    if (s.dim() != sbar.dim()) throw DimensionMismatch("phi_constant: dimensions differ");
    return phi_from_det_ratio(to_double(abs(sbar.det() / s.det())), s.dim());
}

}  // namespace liequiv
