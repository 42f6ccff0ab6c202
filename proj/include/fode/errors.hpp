// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FODE_ERRORS_HPP
#define FODE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fode
{

// Argument outside the domain of a mathematical function (gamma pole, bad order).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Result not representable as a finite double.
class RangeError : public std::range_error
{
public:
  using std::range_error::range_error;
};

// The origin term (1 - alpha) z0 / i^alpha diverges at i = 0 when z0 != 0.
class SingularOriginError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// An operator contract was violated by its input data (e.g. GL on z0 != 0).
class PreconditionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Zero pivot in a node-wise linear solve.
class SingularInversionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// The problem cannot be decomposed or is outside a solver's supported class.
class BuildError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class UnsupportedProblemError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Problem-file or CSV input error with a 1-based source position (0 = unknown).
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(Format(line, column, message)), line_(line), column_(column),
      message_(message)
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string &message() const noexcept { return message_; }

private:
  static std::string Format(std::size_t line, std::size_t column, const std::string &message)
  {
    if (line == 0)
    {
      return message;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
           message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace fode

#endif  // FODE_ERRORS_HPP
