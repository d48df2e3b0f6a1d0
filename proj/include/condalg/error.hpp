#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string &message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A function defined only on basic forms received something else.
class NotBasicFormError : public Error {
public:
    using Error::Error;
};

/// Output of a normalizer or evaluator would exceed the configured node budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An atom sequence contains a repeated atom.
class SigmaError : public Error {
public:
    using Error::Error;
};

/// A term mentions an atom that the supplied atom sequence does not cover.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// An atom oracle refused to answer.
class OracleError : public Error {
public:
    using Error::Error;
};

} // namespace condalg
