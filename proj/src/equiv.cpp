#include "liequiv/equiv.hpp"

#include <algorithm>

#include "liequiv/errors.hpp"

namespace liequiv {

std::vector<std::pair<std::size_t, std::size_t>> sym_coordinates(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> coords;
    coords.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) coords.emplace_back(i, j);
    return coords;
}

Matrix from_sym_coordinates(std::size_t n, std::span<const Rational> coords) {
    if (coords.size() != n * (n + 1) / 2) throw DimensionMismatch("Sym(n) coordinate count");
    Matrix m(n, n);
    std::size_t p = 0;
    for (const auto& [i, j] : sym_coordinates(n)) {
        m(i, j) = coords[p];
        m(j, i) = coords[p];
        ++p;
    }
    return m;
}

RationalVector to_sym_coordinates(const Matrix& symmetric) {
    if (!symmetric.is_symmetric()) throw AsymmetricMetric("to_sym_coordinates: not symmetric");
    RationalVector out;
    for (const auto& [i, j] : sym_coordinates(symmetric.rows())) out.push_back(symmetric(i, j));
    return out;
}

bool AffSpace::contains(const Matrix& symmetric) const {
    if (echelon.empty()) return symmetric.is_zero();
    if (!symmetric.is_symmetric()) return false;
    const std::size_t n = echelon.front().rows();
    IncrementalSpan span(n * (n + 1) / 2);
    for (const auto& b : echelon) span.insert(to_sym_coordinates(b));
    return span.contains(to_sym_coordinates(symmetric));
}

ResidualReport aff_residual(const Matrix& sbar, const ConnectionForms& omega) {
    return check_compatibility(sbar, omega);
}

AffSpace aff_space(const MetricMatrix& s, const ConnectionForms& omega) {
    const std::size_t n = s.dim();
    if (!check_compatibility(s, omega).all_zero())
        throw InvariantViolation("aff_space: connection is not compatible with the metric");

    // Linear map Sym(n) -> (Sym(n))^n, B -> (B ω_k + ω_kᵀ B)_k. Each image is
    // symmetric, so only the upper triangle gives equations.
    const auto coords = sym_coordinates(n);
    const std::size_t unknowns = coords.size();
    Matrix system(n * unknowns, unknowns);
    for (std::size_t p = 0; p < unknowns; ++p) {
        const auto [i, j] = coords[p];
        Matrix b(n, n);
        b(i, j) = 1;
        b(j, i) = 1;
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix image = skew_residual(b, omega[k]);
            for (std::size_t q = 0; q < unknowns; ++q)
                system(k * unknowns + q, p) = image(coords[q].first, coords[q].second);
        }
    }

    AffSpace space;
    for (const auto& v : nullspace(system)) space.echelon.push_back(from_sym_coordinates(n, v));

    IncrementalSpan presented(unknowns);
    const RationalVector reference = to_sym_coordinates(s.matrix());
    presented.insert(reference);
    space.basis.push_back(s.matrix());
    for (const auto& b : space.echelon)
        if (presented.insert(to_sym_coordinates(b))) space.basis.push_back(b);

    space.contains_reference = space.contains(s.matrix());
    if (!space.contains_reference || space.basis.size() != space.echelon.size())
        throw InvariantViolation("aff_space: reference metric is not in its own aff space");
    return space;
}

AffSpace aff_space(const LieAlgebra& alg, const MetricMatrix& s, const ConnectionForms& omega) {
    if (!check_torsion_free(alg, omega).all_zero())
        throw InvariantViolation("aff_space: connection is not torsion-free for the algebra");
    return aff_space(s, omega);
}

RigidityVerdict is_invariantly_rigid(const MetricMatrix& s, const ConnectionForms& omega) {
    AffSpace space = aff_space(s, omega);
    const bool rigid = space.dim() == 1;
    return {rigid, std::move(space)};
}

namespace {

std::vector<RationalVector> slice_candidates(std::size_t d) {
    std::vector<RationalVector> out;
    auto push = [&](RationalVector v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    };
    for (std::size_t k = 0; k < d; ++k) {
        RationalVector v(d, Rational(0));
        v[k] = 1;
        push(std::move(v));
    }
    push(RationalVector(d, Rational(1)));
    RationalVector alternating(d), ramp(d), reference_heavy(d, Rational(1));
    for (std::size_t k = 0; k < d; ++k) {
        alternating[k] = (k % 2 == 0) ? 1 : -1;
        ramp[k] = static_cast<long>(k + 1);
    }
    reference_heavy[0] = 2;
    push(alternating);
    push(ramp);
    push(reference_heavy);
    return out;
}

}  // namespace

SliceReport nondegenerate_slice(const AffSpace& space) {
    if (space.basis.empty()) throw InvalidArgument("nondegenerate_slice: empty space");
    SliceReport report;
    report.det = determinant_polynomial(space.basis);
    const std::size_t n = space.basis.front().rows();
    for (auto& coords : slice_candidates(space.basis.size())) {
        Matrix member(n, n);
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0) member += space.basis[k] * coords[k];
        SliceSample sample{coords, report.det.evaluate(coords), std::nullopt};
        if (sample.det != 0)
            sample.signature = signature(member);
        else
            report.degenerate_members_sampled = true;
        report.samples.push_back(std::move(sample));
    }
    return report;
}

bool verify_affine_equivalence(const LieAlgebra& alg, const MetricMatrix& s,
                               const MetricMatrix& sbar) {
    if (s.dim() != sbar.dim()) throw DimensionMismatch("verify_affine_equivalence: dimensions");
    return levi_civita(alg, s) == levi_civita(alg, sbar);
}

}  // namespace liequiv
