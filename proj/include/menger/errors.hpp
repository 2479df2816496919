#pragma once

#include <stdexcept>
#include <string>

namespace menger {

/// Mismatched arities, base sets, table sizes, out-of-range indices.
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its stated precondition.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A runtime-verified mathematical precondition failed; the message names
/// the witness.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured size cap would be exceeded.  Refusal, never truncation.
struct CapError : std::length_error {
    using std::length_error::length_error;
};

/// A concrete operation produced a function outside the member list of an
/// algebra that was claimed closed.
struct ClosureViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace menger
