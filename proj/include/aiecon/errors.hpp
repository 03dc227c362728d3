#pragma once

#include <stdexcept>
#include <string>

namespace aiecon {

// Base class for everything this library throws. The CLI maps any Error to
// exit code 2; programmatic callers can catch the concrete types below.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (negative capital, alpha outside (0,1), capability outside [0,1], ...).
struct DomainError : Error {
    using Error::Error;
};

// An expression hits a pole: division by a quantity that is exactly zero.
struct SingularityError : Error {
    using Error::Error;
};

// An agent trajectory evaluated to a negative population.
struct PathError : Error {
    using Error::Error;
};

// Calibration has no feasible solution (e.g. the human sector alone already
// produces more than observed GDP, leaving a non-positive AI residual).
struct CalibrationError : Error {
    using Error::Error;
};

// A fit is ill-posed: too few points, rank-deficient design, or data the
// model family cannot represent.
struct FitError : Error {
    using Error::Error;
};

// Input text that could not be parsed (bad CSV row, malformed JSON).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input that violates a data contract
// (duplicate abscissae, empty series, non-positive observations).
struct DataError : Error {
    using Error::Error;
};

// Unknown scenario or parameter name, or an inconsistent configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Two series that must be aligned have different lengths or time axes.
struct ShapeError : Error {
    using Error::Error;
};

// Filesystem failures: unreadable input, unwritable output directory.
struct IoError : Error {
    using Error::Error;
};

}  // namespace aiecon
