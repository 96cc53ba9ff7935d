#include "liequiv/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "liequiv/errors.hpp"

namespace liequiv {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
    Polynomial p(variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
    if (index >= variables) throw InvalidArgument("polynomial variable index out of range");
    Polynomial p(variables);
    Exponents e(variables, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != variables_) throw DimensionMismatch("polynomial evaluation point");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < variables_; ++i)
            for (unsigned p = 0; p < e[i]; ++p) term *= point[i];
        total += term;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (variables_ != other.variables_) throw DimensionMismatch("polynomial variable count");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (variables_ != other.variables_) throw DimensionMismatch("polynomial variable count");
    for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.variables_ != b.variables_) throw DimensionMismatch("polynomial variable count");
    Polynomial out(a.variables_);
    Polynomial::Exponents e(a.variables_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, Rational(ca * cb));
        }
    return out;
}

Polynomial operator*(Polynomial a, const Rational& s) {
    if (s == 0) return Polynomial(a.variables_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Polynomial::Exponents, Rational>> terms(p.terms().begin(),
                                                                  p.terms().end());
    auto degree = [](const Polynomial::Exponents& e) {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    };
    // Graded lexicographic, t1 > t2 > ...
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        const auto da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool is_constant = degree(e) == 0;
        bool wrote = false;
        if (mag != 1 || is_constant) {
            os << to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << 't' << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

Polynomial determinant(const PolynomialMatrix& m, std::size_t variables) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(variables, Rational(1));
    if (n > 20) throw InvalidArgument("polynomial determinant limited to n <= 20");
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("polynomial determinant of non-square matrix");

    // minor(cols) = determinant of rows [n - |cols|, n) restricted to cols.
    std::unordered_map<unsigned, Polynomial> memo;
    memo.emplace(0u, Polynomial::constant(variables, Rational(1)));
    for (std::size_t size = 1; size <= n; ++size) {
        const std::size_t row = n - size;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
            Polynomial acc(variables);
            int position = 0;
            for (std::size_t col = 0; col < n; ++col) {
                if (!(mask & (1u << col))) continue;
                const Polynomial& entry = m[row][col];
                if (!entry.is_zero()) {
                    Polynomial term = entry * memo.at(mask & ~(1u << col));
                    if (position % 2 == 0)
                        acc += term;
                    else
                        acc -= term;
                }
                ++position;
            }
            memo.emplace(mask, std::move(acc));
        }
    }
    return memo.at((1u << n) - 1);
}

Polynomial determinant_polynomial(std::span<const Matrix> basis) {
    if (basis.empty()) throw InvalidArgument("determinant_polynomial: empty basis");
    const std::size_t n = basis.front().rows();
    const std::size_t d = basis.size();
    PolynomialMatrix m(n, std::vector<Polynomial>(n, Polynomial(d)));
    for (std::size_t k = 0; k < d; ++k) {
        if (basis[k].rows() != n || basis[k].cols() != n)
            throw DimensionMismatch("determinant_polynomial: basis shapes differ");
        const Polynomial t = Polynomial::variable(d, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (basis[k](i, j) != 0) m[i][j] += t * basis[k](i, j);
    }
    return determinant(m, d);
}

}  // namespace liequiv
