#pragma once

#include <stdexcept>
#include <string>

namespace frozencol {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex ids, bad partitions, unparsable text.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An exact computation refused to run because the instance exceeds a configured bound.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// A precondition of a theorem-backed procedure does not hold for the given input.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// A procedure produced an object that failed its own certificate check.
/// Seeing this means a bug, or a counterexample to the mathematics it relies on.
class InternalCheckFailed : public Error {
public:
    using Error::Error;
};

}  // namespace frozencol
