#include "liequiv/curvature.hpp"

#include <algorithm>

#include "liequiv/equiv.hpp"
#include "liequiv/errors.hpp"

namespace liequiv {

CurvatureOperators::CurvatureOperators(std::size_t n, std::vector<Matrix> upper)
    : n_(n), upper_(std::move(upper)) {
    if (upper_.size() != n * (n - 1) / 2)
        throw DimensionMismatch("CurvatureOperators: wrong number of operators");
}

std::size_t CurvatureOperators::index(std::size_t i, std::size_t j) const {
    // position of (i, j), i < j, in lexicographic order
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

Matrix CurvatureOperators::operator()(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw DimensionMismatch("curvature index out of range");
    if (i == j) return Matrix(n_, n_);
    if (i < j) return upper_[index(i, j)];
    return -upper_[index(j, i)];
}

bool CurvatureOperators::is_flat() const { return nonzero_count() == 0; }

std::size_t CurvatureOperators::nonzero_count() const {
    std::size_t count = 0;
    for (const auto& r : upper_)
        if (!r.is_zero()) ++count;
    return count;
}

ResidualReport CurvatureOperators::skew_residuals(const Matrix& s) const {
    ResidualReport report;
    for (const auto& r : upper_) report.residuals.push_back(skew_residual(s, r));
    return report;
}

bool CurvatureOperators::satisfies_bianchi() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                const Matrix rij = (*this)(i, j), rjk = (*this)(j, k), rki = (*this)(k, i);
                for (std::size_t row = 0; row < n_; ++row)
                    if (rij(row, k) + rjk(row, i) + rki(row, j) != 0) return false;
            }
    return true;
}

CurvatureOperators curvature(const LieAlgebra& alg, const ConnectionForms& omega) {
    const std::size_t n = alg.dim();
    if (omega.dim() != n) throw DimensionMismatch("curvature: dimensions differ");
    std::vector<Matrix> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix r = commutator(omega[i], omega[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (alg.structure(i, j, k) != 0) r -= omega[k] * alg.structure(i, j, k);
            upper.push_back(std::move(r));
        }
    return CurvatureOperators(n, std::move(upper));
}

Rational curvature_form(const MetricMatrix& s, const CurvatureOperators& r, std::size_t i,
                        std::size_t j) {
    const std::size_t n = s.dim();
    const Vector ei = basis_vector(n, i), ej = basis_vector(n, j);
    return s.inner(r(i, j) * std::span<const Rational>(ej), ei);
}

bool HolonomyAlgebra::contains(const Matrix& m) const {
    const std::size_t n = m.rows();
    IncrementalSpan span(n * n);
    for (const auto& b : basis) span.insert(b.flat());
    return span.contains(m.flat());
}

bool HolonomyAlgebra::closed_under_commutator() const {
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!contains(commutator(basis[a], basis[b]))) return false;
    return true;
}

bool HolonomyAlgebra::closed_under(const ConnectionForms& omega) const {
    for (const auto& w : omega.omega)
        for (const auto& h : basis)
            if (!contains(commutator(w, h))) return false;
    return true;
}

bool HolonomyAlgebra::inside_skew(const Matrix& s) const {
    for (const auto& h : basis)
        if (!skew_residual(s, h).is_zero()) return false;
    return true;
}

HolonomyAlgebra infinitesimal_holonomy(const LieAlgebra& alg, const ConnectionForms& omega,
                                       const CurvatureOperators& r) {
    const std::size_t n = alg.dim();
    if (omega.dim() != n || r.dim() != n)
        throw DimensionMismatch("infinitesimal_holonomy: dimensions differ");
    HolonomyAlgebra hol;
    hol.ambient_skew_dim = n * (n - 1) / 2;

    IncrementalSpan span(n * n);
    std::vector<Matrix> generators;
    for (const auto& op : r.upper())
        if (span.insert(op.flat())) generators.push_back(op);

    std::size_t processed = 0;  // generators[0, processed) already bracketed with ω
    while (true) {
        const std::size_t before = generators.size();
        ++hol.saturation_rounds;
        const std::size_t frontier = generators.size();
        for (std::size_t g = processed; g < frontier; ++g)
            for (const auto& w : omega.omega) {
                Matrix c = commutator(w, generators[g]);
                if (span.insert(c.flat())) generators.push_back(std::move(c));
            }
        const std::size_t internal = generators.size();
        for (std::size_t a = 0; a < internal; ++a)
            for (std::size_t b = std::max(a + 1, processed); b < internal; ++b) {
                Matrix c = commutator(generators[a], generators[b]);
                if (span.insert(c.flat())) generators.push_back(std::move(c));
            }
        processed = frontier;
        if (generators.size() == before && processed == generators.size()) break;
        if (generators.size() > n * n)
            throw InvariantViolation("infinitesimal_holonomy: rank exceeded n^2");
    }

    std::vector<RationalVector> flats;
    for (const auto& g : generators) flats.push_back(g.flat());
    for (const auto& v : canonical_basis(flats)) hol.basis.push_back(Matrix::from_flat(n, n, v));
    return hol;
}

ObstructionReport check_holonomy_obstruction(std::size_t aff_dim, const HolonomyAlgebra& hol) {
    ObstructionReport report;
    report.aff_dim = aff_dim;
    report.hol_dim = hol.dim();
    report.full_dim = hol.ambient_skew_dim;
    report.rigid = aff_dim == 1;
    report.hol_full = hol.full();
    report.consistent = report.rigid || !report.hol_full;
    if (!report.consistent)
        report.verdict = "VIOLATION: non-rigid metric with full holonomy (internal error)";
    else if (report.rigid)
        report.verdict = "vacuous: metric is invariantly rigid";
    else
        report.verdict = "consistent: non-rigid metric has holonomy of dim " +
                         std::to_string(report.hol_dim) + " < " + std::to_string(report.full_dim);
    return report;
}

ObstructionReport check_holonomy_obstruction(const MetricMatrix& s, const ConnectionForms& omega) {
    const LieAlgebra alg = algebra_from_connection(omega);
    const AffSpace space = aff_space(s, omega);
    const CurvatureOperators r = curvature(alg, omega);
    return check_holonomy_obstruction(space.dim(), infinitesimal_holonomy(alg, omega, r));
}

}  // namespace liequiv
