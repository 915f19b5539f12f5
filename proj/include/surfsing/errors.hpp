#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfsing {

/// A mathematical precondition was violated (exit code 1 at the CLI).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the source name and 1-based line/column
/// (0 when unknown) so messages can point at the offending spot.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// Two independent routes to the same answer disagreed. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace surfsing
