#pragma once

#include <stdexcept>
#include <string>

namespace hpade {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series was asked for a coefficient beyond the order it is known to.
class InsufficientOrder : public Error {
public:
    InsufficientOrder(long required, long available)
        : Error("insufficient series order: need " + std::to_string(required) + ", have " +
                std::to_string(available)),
          required_(required),
          available_(available) {}

    long required() const noexcept { return required_; }
    long available() const noexcept { return available_; }

private:
    long required_;
    long available_;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// P/Q cannot be expanded at the origin, even after cancelling gcd(P, Q).
class NotExpandable : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class DenominatorVanishes : public Error {
public:
    using Error::Error;
};

/// A closed-form Mittag-Leffler result was requested outside its index range.
class IndexConditionViolated : public Error {
public:
    using Error::Error;
};

class EvaluationFailure : public Error {
public:
    using Error::Error;
};

/// Malformed numeric literal or system description.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hpade
