#pragma once

#include <stdexcept>
#include <string>

namespace hcsir {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the supported domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// A series or continued fraction did not reach tolerance within its budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// An adaptive integration failed to reach the requested tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

// A moment pair cannot be realized by a Beta-type law on [0,1].
struct InfeasibleMoments : Error {
    using Error::Error;
};

// An iterative parameter solver exhausted its budget.
struct NoConvergence : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

}  // namespace hcsir
