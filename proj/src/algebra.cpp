#include "liequiv/algebra.hpp"

#include <sstream>

#include "liequiv/errors.hpp"

namespace liequiv {

Vector basis_vector(std::size_t n, std::size_t index) {
    if (index >= n) throw DimensionMismatch("basis vector index out of range");
    Vector v(n, Rational(0));
    v[index] = 1;
    return v;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), c_(dim * dim * dim, Rational(0)) {
    if (dim == 0) throw InvalidArgument("Lie algebra dimension must be positive");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value) {
    if (i >= dim_ || j >= dim_ || value.size() != dim_)
        throw DimensionMismatch("set_bracket: index or value length out of range");
    if (i == j) {
        for (const auto& x : value)
            if (x != 0) throw InvalidAlgebra("[e_i, e_i] must vanish");
        return;
    }
    for (std::size_t k = 0; k < dim_; ++k) {
        c_[(i * dim_ + j) * dim_ + k] = value[k];
        c_[(j * dim_ + i) * dim_ + k] = -value[k];
    }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = structure(i, j, k);
    return v;
}

Matrix LieAlgebra::ad(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = structure(i, j, k);
    return m;
}

Vector bracket(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> y) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length != dim");
    Vector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (alg.structure(i, j, k) != 0) out[k] += xy * alg.structure(i, j, k);
        }
    }
    return out;
}

ValidationReport validate(const LieAlgebra& alg) {
    ValidationReport report;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational sum = alg.structure(i, j, k) + alg.structure(j, i, k);
                if (sum != 0)
                    report.violations.push_back(
                        {Violation::Kind::Antisymmetry, {i + 1, j + 1, k + 1}, sum});
            }
    // Σ_m c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj}; the sum is
    // alternating in (i, j, k) once antisymmetry holds, so i < j < k suffices
    // unless antisymmetry already failed.
    const bool antisymmetric = report.ok();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = antisymmetric ? i + 1 : 0; j < n; ++j)
            for (std::size_t k = antisymmetric ? j + 1 : 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational sum = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        sum += alg.structure(i, j, m) * alg.structure(m, k, l);
                        sum += alg.structure(j, k, m) * alg.structure(m, i, l);
                        sum += alg.structure(k, i, m) * alg.structure(m, j, l);
                    }
                    if (sum != 0)
                        report.violations.push_back(
                            {Violation::Kind::Jacobi, {i + 1, j + 1, k + 1, l + 1}, sum});
                }
    return report;
}

std::string ValidationReport::describe() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        if (v.kind == Violation::Kind::Antisymmetry) {
            os << "antisymmetry violated: c^" << v.indices[2] << "_{" << v.indices[0] << ","
               << v.indices[1] << "} + c^" << v.indices[2] << "_{" << v.indices[1] << ","
               << v.indices[0] << "} = " << to_string(v.residual) << '\n';
        } else {
            os << "Jacobi violated at (" << v.indices[0] << "," << v.indices[1] << ","
               << v.indices[2] << "), component e" << v.indices[3] << ": "
               << to_string(v.residual) << '\n';
        }
    }
    return os.str();
}

}  // namespace liequiv
