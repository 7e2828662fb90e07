#pragma once

#include <stdexcept>
#include <string>

namespace udgcut {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller handed in something malformed or outside the supported domain.
/// The CLI maps this family to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class UnsupportedInputError : public InputError {
public:
    using InputError::InputError;
};

class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

class ParityError : public InputError {
public:
    using InputError::InputError;
};

class SizeLimitError : public InputError {
public:
    using InputError::InputError;
};

class WidthLimitError : public InputError {
public:
    using InputError::InputError;
};

class InvalidModelError : public InputError {
public:
    using InputError::InputError;
};

class InvalidDrawingError : public InputError {
public:
    using InputError::InputError;
};

/// Collinear overlapping segments; never a legal crossing.
class DegenerateOverlapError : public InvalidDrawingError {
public:
    using InvalidDrawingError::InvalidDrawingError;
};

/// Internal invariant broke; indicates a bug rather than bad input.
class ConstructionError : public Error {
public:
    using Error::Error;
};

class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// A crossing was found in a model whose precision rules crossings out.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace udgcut
