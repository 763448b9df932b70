#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace formwidth {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 0-based offset of the offending character.
class ParseError : public Error
{
public:
    ParseError(const std::string & message, std::size_t position) :
        Error(message + " at position " + std::to_string(position)),
        _position(position)
    {
    }

    [[nodiscard]] auto position() const noexcept -> std::size_t { return _position; }

private:
    std::size_t _position;
};

/// A precondition on arguments was violated (bad r, k, malformed matrix, ...).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// A configured size guard would be exceeded.
class GuardExceeded : public Error
{
public:
    using Error::Error;
};

/// The width search hit its ceiling without resolving.
class Unresolved : public Error
{
public:
    using Error::Error;
};

/// Two independent computation paths disagreed.
class Inconsistency : public Error
{
public:
    using Error::Error;
};

} // namespace formwidth
