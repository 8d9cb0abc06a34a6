#pragma once

#include <stdexcept>
#include <string>

namespace virc1 {

// Error taxonomy for the library surface. The C API maps each type to a
// stable status code; the CLI maps those to its exit-code contract.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, flags).
struct ParseError : Error {
    using Error::Error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// coefficient_at queried outside offset + [0, order].
struct ExponentOutOfRange : Error {
    using Error::Error;
};

// Offsets of two CharSeries differ by a non-integer; no common rebasing.
struct IncompatibleOffsets : Error {
    using Error::Error;
};

// Cartan slice requested beyond the z-window of a BiSeries.
struct WindowExceeded : Error {
    using Error::Error;
};

// Greedy character decomposition hit a residual term that cannot belong to
// any degenerate tower. Carries the offending term as a witness.
struct NotDecomposable : Error {
    explicit NotDecomposable(const std::string& what, std::string witness_term)
        : Error(what), witness(std::move(witness_term)) {}
    std::string witness;
};

// A mode application would create a term above the vector's energy cutoff;
// results would no longer be exact, so the operation refuses.
struct CutoffExceeded : Error {
    using Error::Error;
};

}  // namespace virc1
