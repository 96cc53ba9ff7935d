#include "liequiv/connection.hpp"

#include "liequiv/errors.hpp"

namespace liequiv {

Matrix ConnectionForms::evaluate(std::span<const Rational> v) const {
    if (v.size() != dim()) throw DimensionMismatch("ConnectionForms::evaluate: vector length");
    Matrix m(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k)
        if (v[k] != 0) m += omega[k] * v[k];
    return m;
}

bool ResidualReport::all_zero() const {
    for (const auto& r : residuals)
        if (!r.is_zero()) return false;
    return true;
}

std::vector<std::size_t> ResidualReport::nonzero_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < residuals.size(); ++k)
        if (!residuals[k].is_zero()) out.push_back(k);
    return out;
}

ConnectionForms levi_civita(const LieAlgebra& alg, const MetricMatrix& s) {
    const std::size_t n = alg.dim();
    if (s.dim() != n) throw DimensionMismatch("levi_civita: metric and algebra dimensions differ");
    if (const auto report = validate(alg); !report.ok())
        throw InvalidAlgebra("levi_civita: structure constants do not define a Lie algebra\n" +
                             report.describe());

    // gc[i][j][l] = g([e_i, e_j], e_l)
    std::vector<Rational> gc(n * n * n, Rational(0));
    auto at = [n](std::size_t i, std::size_t j, std::size_t l) { return (i * n + j) * n + l; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                const Rational& c = alg.structure(i, j, m);
                if (c == 0) continue;
                for (std::size_t l = 0; l < n; ++l) gc[at(i, j, l)] += c * s(m, l);
            }

    ConnectionForms out{std::vector<Matrix>(n, Matrix(n, n))};
    const Rational half(1, 2);
    RationalVector lowered(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l)
                lowered[l] = half * (gc[at(j, k, l)] - gc[at(k, l, j)] + gc[at(l, j, k)]);
            // S · (∇_{e_j} e_k) = lowered
            const RationalVector column = s.inverse() * lowered;
            for (std::size_t i = 0; i < n; ++i) out.omega[j](i, k) = column[i];
        }
    return out;
}

ResidualReport check_compatibility(const Matrix& s, const ConnectionForms& omega) {
    if (!s.is_square() || omega.dim() != s.rows())
        throw DimensionMismatch("check_compatibility: dimensions differ");
    ResidualReport report;
    for (const auto& w : omega.omega) {
        if (w.rows() != s.rows() || w.cols() != s.rows())
            throw DimensionMismatch("check_compatibility: connection matrix shape");
        report.residuals.push_back(skew_residual(s, w));
    }
    return report;
}

ResidualReport check_compatibility(const MetricMatrix& s, const ConnectionForms& omega) {
    return check_compatibility(s.matrix(), omega);
}

ResidualReport check_torsion_free(const LieAlgebra& alg, const ConnectionForms& omega) {
    const std::size_t n = alg.dim();
    if (omega.dim() != n) throw DimensionMismatch("check_torsion_free: dimensions differ");
    ResidualReport report{std::vector<Matrix>(n, Matrix(n, n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                report.residuals[i](j, k) =
                    alg.structure(j, k, i) - omega[j](i, k) + omega[k](i, j);
    return report;
}

LieAlgebra algebra_from_connection(const ConnectionForms& omega) {
    const std::size_t n = omega.dim();
    LieAlgebra alg(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                alg.set_structure(j, k, i, omega[j](i, k) - omega[k](i, j));
    return alg;
}

}  // namespace liequiv
