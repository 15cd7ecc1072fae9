#pragma once

#include <stdexcept>
#include <string>

namespace dpchains {

// Bad input or violated precondition. The CLI maps these to exit code 1;
// any other exception escaping to main is an internal error (exit 2).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// The origin has no alpha-line and no radial direction.
class OriginError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Raised when two alpha-lines are parallel or coincident, i.e. their base
// points share a radial line and the intersection is not a single point.
class SameRadialLineError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicatePointError : public ValidationError {
public:
    DuplicatePointError(const std::string& msg, int first, int second)
        : ValidationError(msg), first_index(first), second_index(second) {}

    int first_index;
    int second_index;
};

}  // namespace dpchains
