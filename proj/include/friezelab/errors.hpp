#pragma once

#include <stdexcept>
#include <string>

namespace friezelab {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value is outside the operation's domain
/// (bad field size, index out of range, mismatched fields, ...).
struct invalid_parameter : error {
    using error::error;
};

/// Division or inversion of zero in a finite field.
struct division_by_zero : invalid_parameter {
    using invalid_parameter::invalid_parameter;
};

/// The parameters are well-formed but fall outside what the implemented
/// formulas cover (e.g. no closed-form count exists for this case).
struct unsupported_parameters : error {
    using error::error;
};

/// An enumeration exceeded its configured node or size cap.
/// Carries the number of nodes visited before giving up.
struct resource_limit : error {
    resource_limit(const std::string& msg, unsigned long long visited)
        : error(msg), nodes_visited(visited) {}
    unsigned long long nodes_visited;
};

/// Input data fails a documented mathematical precondition
/// (e.g. a quiddity matrix that does not satisfy the product criterion).
struct precondition_violation : error {
    using error::error;
};

/// An internal consistency check failed. Always a bug, never user error.
struct invariant_violation : error {
    using error::error;
};

}  // namespace friezelab
