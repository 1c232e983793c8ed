#pragma once

#include <stdexcept>
#include <string>

namespace chaos {

// Root of every error the library raises. The CLI maps each leaf type onto
// one exit status.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// A natural number that is not the image of any canonical rational.
struct NotACode : Error {
    using Error::Error;
};

// A RecFn term violating the arity constraints of its constructors.
struct IllFormed : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

// Grid or readout index out of range.
struct InvalidState : Error {
    using Error::Error;
};

// Malformed text (numbers, programs, readouts).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace chaos
