#ifndef LIEQUIV_ALGEBRA_HPP
#define LIEQUIV_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liequiv/matrix.hpp"
#include "liequiv/rational.hpp"

namespace liequiv {

/// Coefficients of a vector in the frame {e_1..e_n}.
using Vector = RationalVector;

/// Coefficients of a covector in the coframe {e^1..e^n}.
struct Covector {
    RationalVector coeffs;
    friend bool operator==(const Covector&, const Covector&) = default;
};

/// Unit vector e_{index+1} (0-based index).
Vector basis_vector(std::size_t n, std::size_t index);

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = Σ_k c^k_{ij} e_k. Indices are 0-based here; the text format
/// and reports are 1-based.
class LieAlgebra {
public:
    explicit LieAlgebra(std::size_t dim, std::string name = {});

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// c^k_{ij}
    const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    /// Sets [e_i, e_j] = value and [e_j, e_i] = −value.
    void set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value);

    /// Sets a single constant without touching its antisymmetric partner.
    /// Only useful for building deliberately invalid data.
    void set_structure(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
        c_[(i * dim_ + j) * dim_ + k] = value;
    }

    /// [e_i, e_j]
    Vector bracket_basis(std::size_t i, std::size_t j) const;

    /// ad(e_i) as an n×n matrix: column j is [e_i, e_j].
    Matrix ad(std::size_t i) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::size_t dim_;
    std::string name_;
    std::vector<Rational> c_;
};

Vector bracket(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> y);

struct Violation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind;
    /// 1-based indices: (i, j, k) for antisymmetry of c^k_{ij}, (i, j, k, l)
    /// for the l-th component of the Jacobi sum over (e_i, e_j, e_k).
    std::vector<std::size_t> indices;
    Rational residual;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

ValidationReport validate(const LieAlgebra& alg);

}  // namespace liequiv

#endif
