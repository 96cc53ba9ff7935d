#ifndef LIEQUIV_PARALLEL_HPP
#define LIEQUIV_PARALLEL_HPP

#include <span>
#include <string>
#include <vector>

#include "liequiv/algebra.hpp"
#include "liequiv/connection.hpp"
#include "liequiv/matrix.hpp"
#include "liequiv/metric.hpp"

namespace liequiv {

/// Left-invariant parallel fields: the joint kernel of all ω_k
/// (∇_{e_k} v = ω_k v for constant coefficients). Canonical echelon basis.
std::vector<Vector> parallel_vectors(const ConnectionForms& omega);

enum class CausalType { Null, Spacelike, Timelike };

std::string to_string(CausalType type);

struct CausalClass {
    CausalType type;
    Rational norm;  ///< g(v, v)
};

/// Spacelike for g(v,v) > 0, timelike for < 0. Throws InvalidArgument for v = 0.
CausalClass causal_type(const MetricMatrix& s, std::span<const Rational> v);

/// Generators of the family λ S + μ (S v)(S v)ᵀ.
struct AffineFamily {
    Matrix metric;
    Matrix dual_square;  ///< v* ⊗ v*
    Matrix member(const Rational& lambda, const Rational& mu) const;
};

/// Throws InvalidArgument unless v is nonzero and ω_k v = 0 for all k.
AffineFamily affine_family(const MetricMatrix& s, const ConnectionForms& omega,
                           std::span<const Rational> v);

/// v^⊥ = {x : vᵀ S x = 0}, as a canonical basis.
std::vector<Vector> orthogonal_complement(const MetricMatrix& s, std::span<const Rational> v);

enum class SplitEvidence { DeRhamSplit, NullNoSplit, NoParallelField };

struct DecompositionEntry {
    Vector vector;
    CausalClass causal;
    SplitEvidence evidence;
};

struct DecomposabilityReport {
    std::vector<DecompositionEntry> entries;
    std::string summary;
    bool split_certified() const;
};

DecomposabilityReport decomposability_evidence(const MetricMatrix& s, const ConnectionForms& omega);

struct ParallelReport {
    std::vector<Vector> basis;
    std::vector<CausalClass> causal;
    std::vector<AffineFamily> families;
    Matrix gram;  ///< g(v_a, v_b) over the basis
    DecomposabilityReport decomposition;
};

ParallelReport parallel_report(const MetricMatrix& s, const ConnectionForms& omega);

}  // namespace liequiv

#endif
