#ifndef LIEQUIV_ERRORS_HPP
#define LIEQUIV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liequiv {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A metric matrix with zero determinant (or a singular operand where an
/// inverse is required).
class DegenerateMetric : public Error {
public:
    using Error::Error;
};

class AsymmetricMetric : public Error {
public:
    using Error::Error;
};

/// Structure constants that fail antisymmetry or the Jacobi identity.
class InvalidAlgebra : public Error {
public:
    using Error::Error;
};

/// Bad argument that is not a shape problem (catalog parameters, zero vector, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold by construction did not. Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace liequiv

#endif
