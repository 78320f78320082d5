#pragma once

#include <stdexcept>
#include <string>

namespace tenseg {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownVertexError : Error {
    using Error::Error;
};

struct MalformedTraceError : Error {
    using Error::Error;
};

struct UnsupportedDimensionError : Error {
    using Error::Error;
};

/// Points violate a general-position requirement (vanishing determinant).
struct DegenerateConfigurationError : Error {
    using Error::Error;
};

/// A stress whose support cannot belong to a self-stress on a
/// general-position framework (vertex with 1..d non-null incident edges).
struct InconsistentStressError : Error {
    using Error::Error;
};

/// An atom re-added during reconstruction shares fewer than d placed
/// vertices with the current configuration.
struct HangingStructureError : Error {
    using Error::Error;
};

struct NotEdgeInsertingError : Error {
    using Error::Error;
};

/// Groebner step budget exhausted.
struct BudgetExceededError : Error {
    using Error::Error;
};

/// Malformed input files, strings or JSON documents.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace tenseg
