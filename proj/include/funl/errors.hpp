#pragma once

#include <stdexcept>
#include <string>

namespace funl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A word contains a letter outside the declared alphabet.
struct BadLetterError : Error {
    using Error::Error;
};

/// Two automata with different alphabets were combined.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

/// Hypothesis construction was attempted on a pair (Q,T) that fails
/// the closedness or consistency condition.
struct NotAutomatableError : Error {
    using Error::Error;
};

/// A configured iteration or query cap was hit.
struct CapExceededError : Error {
    using Error::Error;
};

/// An internal invariant that should be unreachable was violated;
/// always indicates a bug, never bad input.
struct InternalError : Error {
    using Error::Error;
};

/// Malformed or invariant-violating input document.
struct ParseError : Error {
    using Error::Error;
};

} // namespace funl
