#pragma once

#include <stdexcept>
#include <string>

namespace limone {

// Base of every failure thrown by the library, so callers can catch one type.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Shapes of matrices, vectors, or image lists do not match the operation.
struct dimension_error : error {
    using error::error;
};

// A value lies outside the operation's domain (bad index, negative entry,
// malformed alphabet).
struct domain_error : error {
    using error::error;
};

// A word or vector lies outside the subgroup or lattice it was traced against.
struct membership_error : error {
    using error::error;
};

// An internal contract was broken by the caller, e.g. restricting an
// endomorphism to a subgroup it does not preserve.
struct consistency_error : error {
    using error::error;
};

// A named hypothesis of the routine is not satisfied by the input.
struct precondition_error : error {
    using error::error;
};

// Parameters fall outside the range the underlying results cover.
struct hypothesis_error : error {
    using error::error;
};

// Rule text does not match the grammar.
struct parse_error : error {
    using error::error;
};

// Well-formed rule text describing an object the requested mode rejects.
struct invalid_input_error : error {
    using error::error;
};

} // namespace limone
