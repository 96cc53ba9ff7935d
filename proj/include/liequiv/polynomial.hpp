#ifndef LIEQUIV_POLYNOMIAL_HPP
#define LIEQUIV_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "liequiv/matrix.hpp"
#include "liequiv/rational.hpp"

namespace liequiv {

/// Multivariate polynomial with rational coefficients in variables t1..t_d.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

    static Polynomial constant(std::size_t variables, const Rational& c);
    /// The single variable t_{index+1}.
    static Polynomial variable(std::size_t variables, std::size_t index);

    std::size_t variables() const { return variables_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;

    Rational evaluate(std::span<const Rational> point) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void add_term(const Exponents& e, const Rational& c);

    std::size_t variables_;
    std::map<Exponents, Rational> terms_;
};

/// Human-readable form, highest total degree first, e.g. "t1*t3 - t2^2".
std::string to_string(const Polynomial& p);

/// Matrix whose entries are polynomials.
using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// det(Σ_k t_k · basis[k]) as a polynomial in t_1..t_d.
Polynomial determinant_polynomial(std::span<const Matrix> basis);

/// Determinant by cofactor expansion with minors memoized over column subsets.
Polynomial determinant(const PolynomialMatrix& m, std::size_t variables);

}  // namespace liequiv

#endif
