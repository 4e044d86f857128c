#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glued
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; `position` is a byte offset into the parsed text.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t position)
    : Error(what + " (at position " + std::to_string(position) + ")"),
      _message(what), _position(position)
  {}

  /// The message without the position suffix.
  std::string const &message() const { return _message; }
  std::size_t position() const { return _position; }

private:
  std::string _message;
  std::size_t _position;
};

/// Operation not defined for the factor finiteness of the current context.
class RegimeError : public Error
{
public:
  using Error::Error;
};

class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// A configured work or cardinality cap would be exceeded.
class BudgetError : public Error
{
public:
  using Error::Error;
};

/// Two cube-complex vertices lie in different s-fibers.
class FiberMismatch : public Error
{
public:
  FiberMismatch(long long from, long long to)
    : Error("fiber mismatch: s(from) = " + std::to_string(from) +
            " but s(to) = " + std::to_string(to)),
      _from(from), _to(to)
  {}

  long long from_fiber() const { return _from; }
  long long to_fiber() const { return _to; }

private:
  long long _from;
  long long _to;
};

} // namespace glued
