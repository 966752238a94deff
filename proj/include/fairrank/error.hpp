#pragma once

#include <stdexcept>

namespace fairrank {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data: bad line syntax, unknown enum string, wrong arity.
// Messages carry the offending line number where one exists.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid input that violates an invariant (duplicate rank,
// weights not summing to one, ranking that is not a permutation, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// No usable signal: fully out-of-vocabulary token set, or a group
// distribution requested over an empty effective record set.
class CoverageError : public Error {
public:
    using Error::Error;
};

// An image reference has no entry in the annotation store.
class MissingAnnotationError : public Error {
public:
    using Error::Error;
};

// Live detector transport or authentication failure.
class ProviderError : public Error {
public:
    using Error::Error;
};

}  // namespace fairrank
