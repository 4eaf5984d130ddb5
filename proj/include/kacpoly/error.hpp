#pragma once

#include <stdexcept>
#include <string>

namespace kacpoly {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that cannot be interpreted: malformed files, mismatched keys,
// out-of-range arguments. The CLI maps this family to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    explicit ParseError(const std::string& what) : InputError(what) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

class KeyMismatch : public InputError {
public:
    using InputError::InputError;
};

class BoxMismatch : public InputError {
public:
    using InputError::InputError;
};

class OutOfBox : public InputError {
public:
    using InputError::InputError;
};

// A computation produced something that the mathematics forbids. These
// signal bugs or inputs outside the validity domain; exit code 3.
class ComputationError : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotDivisible : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotPolynomial : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NotCyclotomic : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class BadConstantTerm : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class InvariantViolation : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class LimitError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class ZeroPolynomial : public ComputationError {
public:
    using ComputationError::ComputationError;
};

// Resource caps; exit code 4.
class ResourceError : public Error {
public:
    using Error::Error;
};

class TermExplosion : public ResourceError {
public:
    using ResourceError::ResourceError;
};

} // namespace kacpoly
