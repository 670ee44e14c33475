#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: malformed simplices, frontier violations, unknown names,
/// unreadable files. The CLI maps this to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree (exact vs modular rank, direct vs stratumwise
/// Euler characteristics, Poincare-Hopf sides) disagreed. The CLI maps this
/// to exit code 3.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// Internal invariant broken. Exit code 1.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace strata
