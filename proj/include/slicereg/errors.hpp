#pragma once

#include <stdexcept>

namespace slicereg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. inverse of 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised when a function is evaluated outside its domain.
class PointOutsideDomain : public Error {
public:
    using Error::Error;
};

/// An iterative method (root finder, truncated series) did not reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// The square root of f_v^s required by the sine/cosine form does not exist.
class NoGlobalSquareRoot : public Error {
public:
    using Error::Error;
};

/// Malformed job or expression input.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace slicereg
