#pragma once

#include <stdexcept>
#include <string>

namespace evoo {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid numeric input or a violated value-domain precondition
/// (negative intensity, zero-norm reference, degenerate series, bad spec).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two objects that must agree do not (grids, oil labels, vector lengths).
class MismatchError : public Error {
public:
    using Error::Error;
};

/// A requested item does not exist (off-grid wavelength, missing sample,
/// unknown plot kind).
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; the message carries file and line context.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Training cannot proceed (single-class set, no splittable feature).
class TrainingError : public Error {
public:
    using Error::Error;
};

}  // namespace evoo
