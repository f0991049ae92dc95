#pragma once

#include <stdexcept>
#include <string>

namespace witt {

/// Operands live over different (m, n).
struct DimMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition was violated: overlapping index sets, generator
/// index out of range, gamma = 0 in the annihilator probe, non-unimodular
/// lattice matrix, psi applied outside its domain, and so on.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual or JSON input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace witt
