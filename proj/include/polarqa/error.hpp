#pragma once

#include <stdexcept>
#include <string>

namespace polarqa {

// Error taxonomy mirrors the CLI exit codes: usage (1), data/validation (2),
// evaluator failures (3).

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : Error {
    using Error::Error;
};

// Bad input data, schema violations, failed validation.
struct DataError : Error {
    using Error::Error;
};

// Rule pack or run configuration problems (e.g. predicate needs a metadata
// field the source corpus does not carry).
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct EvaluatorError : Error {
    using Error::Error;
};

}  // namespace polarqa
