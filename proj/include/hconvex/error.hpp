#pragma once

#include <stdexcept>
#include <string>

namespace hconvex {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (wrong sizes, bad flags, ...).
struct contract_error : error {
    using error::error;
};

// A vector that should lie on the hyperboloid does not (self-pairing too far
// from -1, or a pairing that leaves the domain of arcosh).
struct invalid_point_error : error {
    using error::error;
};

// Scalar argument outside the mathematical domain of an operation.
struct domain_error : error {
    using error::error;
};

// Input that should span a full-dimensional body is degenerate.
struct degeneracy_error : error {
    using error::error;
};

// An intersection that must have interior is empty or a single point.
struct emptiness_error : error {
    using error::error;
};

// A runtime precondition of an operation fails (e.g. hyperplane does not
// support the body within tolerance).
struct precondition_error : error {
    using error::error;
};

// Malformed file or JSON payload.
struct schema_error : error {
    using error::error;
};

// A numeric search failed to bracket or converge.
struct search_error : error {
    using error::error;
};

// Operation not available for this body kind / dimension.
struct unsupported_error : error {
    using error::error;
};

} // namespace hconvex
