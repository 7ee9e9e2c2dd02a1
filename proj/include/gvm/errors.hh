#pragma once

#include <stdexcept>

namespace gvm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An element or labeling does not match the group or graph it is used with.
struct ConformanceError : Error {
    using Error::Error;
};

/// Malformed text input (group specs, elements, graph and labeling files).
struct ParseError : Error {
    using Error::Error;
};

/// The operation is not defined for this kind of group (e.g. enumerating an infinite group).
struct UnsupportedError : Error {
    using Error::Error;
};

/// A search exceeded its candidate cap before reaching a verdict.
struct ResourceError : Error {
    using Error::Error;
};

/// A constructive routine was called on an input outside its hypothesis.
struct PreconditionError : Error {
    using Error::Error;
};

/// A query outside the range where a result is guaranteed (e.g. a modulus below the transfer threshold).
struct DomainError : Error {
    using Error::Error;
};

}
