#include "liequiv/parallel.hpp"

#include "liequiv/errors.hpp"

namespace liequiv {

std::vector<Vector> parallel_vectors(const ConnectionForms& omega) {
    const std::size_t n = omega.dim();
    if (n == 0) return {};
    Matrix stacked(n * n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = omega[k](i, j);
    return nullspace(stacked);
}

std::string to_string(CausalType type) {
    switch (type) {
        case CausalType::Null: return "null";
        case CausalType::Spacelike: return "spacelike";
        case CausalType::Timelike: return "timelike";
    }
    return "unknown";
}

CausalClass causal_type(const MetricMatrix& s, std::span<const Rational> v) {
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) throw InvalidArgument("causal_type: zero vector");
    const Rational norm = s.inner(v, v);
    const CausalType type =
        norm == 0 ? CausalType::Null : (norm > 0 ? CausalType::Spacelike : CausalType::Timelike);
    return {type, norm};
}

Matrix AffineFamily::member(const Rational& lambda, const Rational& mu) const {
    return metric * lambda + dual_square * mu;
}

AffineFamily affine_family(const MetricMatrix& s, const ConnectionForms& omega,
                           std::span<const Rational> v) {
    if (v.size() != s.dim() || omega.dim() != s.dim())
        throw DimensionMismatch("affine_family: dimensions differ");
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) throw InvalidArgument("affine_family: zero vector");
    for (const auto& w : omega.omega)
        for (const auto& x : w * v)
            if (x != 0) throw InvalidArgument("affine_family: vector is not parallel");
    const Covector dual = dual_covector(s, v);
    AffineFamily family{s.matrix(), Matrix::outer(dual.coeffs, dual.coeffs)};
    // ω_k v = 0 makes v* ⊗ v* parallel; check it anyway.
    for (const auto& w : omega.omega)
        if (!skew_residual(family.dual_square, w).is_zero())
            throw InvariantViolation("affine_family: v* ⊗ v* is not parallel");
    return family;
}

std::vector<Vector> orthogonal_complement(const MetricMatrix& s, std::span<const Rational> v) {
    const Covector dual = dual_covector(s, v);
    Matrix row(1, s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) row(0, j) = dual.coeffs[j];
    return nullspace(row);
}

bool DecomposabilityReport::split_certified() const {
    for (const auto& e : entries)
        if (e.evidence == SplitEvidence::DeRhamSplit) return true;
    return false;
}

DecomposabilityReport decomposability_evidence(const MetricMatrix& s, const ConnectionForms& omega) {
    DecomposabilityReport report;
    for (auto& v : parallel_vectors(omega)) {
        const CausalClass c = causal_type(s, v);
        const SplitEvidence evidence =
            c.type == CausalType::Null ? SplitEvidence::NullNoSplit : SplitEvidence::DeRhamSplit;
        report.entries.push_back({std::move(v), c, evidence});
    }
    if (report.entries.empty())
        report.summary = "no parallel-field evidence";
    else if (report.split_certified())
        report.summary = "local de Rham split certified by non-null parallel field";
    else
        report.summary = "v in v^perp (null parallel field), no split implied";
    return report;
}

ParallelReport parallel_report(const MetricMatrix& s, const ConnectionForms& omega) {
    ParallelReport report;
    report.basis = parallel_vectors(omega);
    const std::size_t m = report.basis.size();
    report.gram = Matrix(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        report.causal.push_back(causal_type(s, report.basis[a]));
        report.families.push_back(affine_family(s, omega, report.basis[a]));
        for (std::size_t b = 0; b < m; ++b)
            report.gram(a, b) = s.inner(report.basis[a], report.basis[b]);
    }
    report.decomposition = decomposability_evidence(s, omega);
    return report;
}

}  // namespace liequiv
