#pragma once

#include <stdexcept>
#include <string>

namespace trigspline {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on arguments was violated (bad index, unsupported
/// indicator pair, mismatched grid, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation could not produce a meaningful number.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A kernel denominator H vanished for the requested parameters.
class DegenerateKernel : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A collocation system is too close to singular to be solved.
class SingularSystem : public NumericalError {
public:
    SingularSystem(const std::string& what, double determinant)
        : NumericalError(what), determinant_(determinant) {}

    double determinant() const noexcept { return determinant_; }

private:
    double determinant_;
};

} // namespace trigspline
