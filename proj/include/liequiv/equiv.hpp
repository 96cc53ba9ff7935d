#ifndef LIEQUIV_EQUIV_HPP
#define LIEQUIV_EQUIV_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "liequiv/algebra.hpp"
#include "liequiv/connection.hpp"
#include "liequiv/matrix.hpp"
#include "liequiv/metric.hpp"
#include "liequiv/polynomial.hpp"

namespace liequiv {

/// Coordinates on Sym(n): pairs (i, j), i <= j, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> sym_coordinates(std::size_t n);
/// Symmetric matrix with the given Sym(n) coordinates.
Matrix from_sym_coordinates(std::size_t n, std::span<const Rational> coords);
RationalVector to_sym_coordinates(const Matrix& symmetric);

/// The space aff(S) = { S̄ symmetric : S̄ ω_k + ω_kᵀ S̄ = 0 for all k }.
struct AffSpace {
    /// Presented basis: the reference S first, then echelon elements that
    /// stay independent of the ones before them.
    std::vector<Matrix> basis;
    /// Reduced echelon basis over the Sym(n) coordinates, leading entry 1.
    std::vector<Matrix> echelon;
    bool contains_reference = false;

    std::size_t dim() const { return echelon.size(); }
    bool contains(const Matrix& symmetric) const;
};

/// Residual of the defining equation, one matrix per k.
ResidualReport aff_residual(const Matrix& sbar, const ConnectionForms& omega);

/// Throws InvariantViolation if ω is not metric for S.
AffSpace aff_space(const MetricMatrix& s, const ConnectionForms& omega);
/// Also checks ω against the structure constants of alg.
AffSpace aff_space(const LieAlgebra& alg, const MetricMatrix& s, const ConnectionForms& omega);

struct RigidityVerdict {
    bool rigid = false;
    AffSpace space;
};

RigidityVerdict is_invariantly_rigid(const MetricMatrix& s, const ConnectionForms& omega);

struct SliceSample {
    RationalVector coords;
    Rational det;
    std::optional<Signature> signature;  ///< empty when det = 0
};

struct SliceReport {
    /// det(Σ t_k basis[k]) over the presented basis.
    Polynomial det;
    std::vector<SliceSample> samples;
    /// At least one sample point lands on det = 0.
    bool degenerate_members_sampled = false;
};

SliceReport nondegenerate_slice(const AffSpace& space);

/// levi_civita(alg, S) == levi_civita(alg, S̄). For left-invariant metrics
/// this is the same as geodesic equivalence.
bool verify_affine_equivalence(const LieAlgebra& alg, const MetricMatrix& s,
                               const MetricMatrix& sbar);

}  // namespace liequiv

#endif
