#ifndef LIEQUIV_CURVATURE_HPP
#define LIEQUIV_CURVATURE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "liequiv/algebra.hpp"
#include "liequiv/connection.hpp"
#include "liequiv/matrix.hpp"
#include "liequiv/metric.hpp"

namespace liequiv {

/// Curvature operators R(e_i, e_j) = ∇_{e_i}∇_{e_j} − ∇_{e_j}∇_{e_i} − ∇_{[e_i,e_j]},
/// which on left-invariant fields is [ω_i, ω_j] − Σ_k c^k_{ij} ω_k.
class CurvatureOperators {
public:
    CurvatureOperators(std::size_t n, std::vector<Matrix> upper);

    std::size_t dim() const { return n_; }
    /// R(e_i, e_j) for any i, j; R(e_j, e_i) = −R(e_i, e_j), R(e_i, e_i) = 0.
    Matrix operator()(std::size_t i, std::size_t j) const;
    /// Operators for i < j in lexicographic order.
    const std::vector<Matrix>& upper() const { return upper_; }

    bool is_flat() const;
    /// Number of pairs i < j with R(e_i, e_j) != 0.
    std::size_t nonzero_count() const;

    /// S R_ij + R_ijᵀ S for every i < j.
    ResidualReport skew_residuals(const Matrix& s) const;
    /// R_ij e_k + R_jk e_i + R_ki e_j, flattened; zero iff the first Bianchi
    /// identity holds.
    bool satisfies_bianchi() const;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t n_;
    std::vector<Matrix> upper_;
};

CurvatureOperators curvature(const LieAlgebra& alg, const ConnectionForms& omega);

/// g(R(x, y) y, x), unnormalized sectional quantity.
Rational curvature_form(const MetricMatrix& s, const CurvatureOperators& r, std::size_t i,
                        std::size_t j);

/// Infinitesimal holonomy algebra: the smallest subspace containing every
/// R_ij that is closed under [ω_k, ·] and under the matrix commutator.
/// For analytic (in particular left-invariant) metrics it coincides with the
/// Lie algebra of the restricted holonomy group.
struct HolonomyAlgebra {
    /// Canonical (reduced echelon over the n² flattening) basis.
    std::vector<Matrix> basis;
    std::size_t ambient_skew_dim = 0;  ///< n(n−1)/2
    std::size_t saturation_rounds = 0;

    std::size_t dim() const { return basis.size(); }
    bool full() const { return dim() == ambient_skew_dim; }

    bool contains(const Matrix& m) const;
    bool closed_under_commutator() const;
    bool closed_under(const ConnectionForms& omega) const;
    /// Every basis element lies in Λ⁻(S).
    bool inside_skew(const Matrix& s) const;
};

/// Breadth-first saturation: each round adjoins [ω_k, H] for all basis H and
/// all k, then [H, H'] for all pairs, until the rank stops growing.
HolonomyAlgebra infinitesimal_holonomy(const LieAlgebra& alg, const ConnectionForms& omega,
                                       const CurvatureOperators& r);

struct ObstructionReport {
    std::size_t aff_dim = 0;
    std::size_t hol_dim = 0;
    std::size_t full_dim = 0;
    bool rigid = false;
    bool hol_full = false;
    /// (aff_dim > 1) ⇒ (hol_dim < full_dim)
    bool consistent = true;
    std::string verdict;
};

/// Structure constants are recovered from ω through the torsion identity.
ObstructionReport check_holonomy_obstruction(const MetricMatrix& s, const ConnectionForms& omega);
ObstructionReport check_holonomy_obstruction(std::size_t aff_dim, const HolonomyAlgebra& hol);

}  // namespace liequiv

#endif
