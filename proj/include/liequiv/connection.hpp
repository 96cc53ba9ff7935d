#ifndef LIEQUIV_CONNECTION_HPP
#define LIEQUIV_CONNECTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "liequiv/algebra.hpp"
#include "liequiv/matrix.hpp"
#include "liequiv/metric.hpp"

namespace liequiv {

/// Levi-Civita connection in the left-invariant frame.
///
/// Index convention, used everywhere: omega[k](i, j) = ω^i_j(e_k), so
///   ∇_{e_k} e_j = Σ_i omega[k](i, j) e_i.
/// Row is the upper index.
struct ConnectionForms {
    std::vector<Matrix> omega;

    std::size_t dim() const { return omega.size(); }
    const Matrix& operator[](std::size_t k) const { return omega[k]; }

    /// ω(v) = Σ_k v^k ω_k, i.e. the matrix of ∇_v.
    Matrix evaluate(std::span<const Rational> v) const;

    friend bool operator==(const ConnectionForms&, const ConnectionForms&) = default;
};

/// Exact residuals, one matrix per index.
struct ResidualReport {
    std::vector<Matrix> residuals;

    bool all_zero() const;
    /// Indices (0-based) whose residual matrix is nonzero.
    std::vector<std::size_t> nonzero_indices() const;
};

/// Unique metric, torsion-free connection of (alg, S), computed from the
/// Koszul formula for left-invariant fields:
///   2 g(∇_{e_j} e_k, e_l) = g([e_j,e_k],e_l) − g([e_k,e_l],e_j) + g([e_l,e_j],e_k).
/// Throws InvalidAlgebra or DimensionMismatch.
ConnectionForms levi_civita(const LieAlgebra& alg, const MetricMatrix& s);

/// residuals[k] = S ω_k + ω_kᵀ S.
ResidualReport check_compatibility(const Matrix& s, const ConnectionForms& omega);
ResidualReport check_compatibility(const MetricMatrix& s, const ConnectionForms& omega);

/// residuals[i](j, k) = c^i_{jk} − (ω_j)^i_k + (ω_k)^i_j.
ResidualReport check_torsion_free(const LieAlgebra& alg, const ConnectionForms& omega);

/// Structure constants read back from a torsion-free connection:
/// c^i_{jk} = (ω_j)^i_k − (ω_k)^i_j.
LieAlgebra algebra_from_connection(const ConnectionForms& omega);

}  // namespace liequiv

#endif
