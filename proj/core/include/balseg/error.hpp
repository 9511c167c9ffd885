#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>

namespace balseg {

/// Raised when an input contains a byte other than '(' or ')'.
///
/// Reported separately from an "absent" parse result: a foreign character
/// means the question is ill-posed, not that the string is unbalanced.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::size_t position, char character);
  /// Position unknown, e.g. when a single character is rejected.
  explicit DomainError(char character);

  /// Offset of the offending byte, or std::string_view::npos if unknown.
  std::size_t position() const noexcept { return position_; }
  char character() const noexcept { return character_; }

 private:
  std::size_t position_;
  char character_;
};

/// Raised by the brute-force oracle when an input exceeds its length ceiling.
class OracleLimitError : public std::length_error {
 public:
  OracleLimitError(std::size_t length, std::size_t limit);

  std::size_t length() const noexcept { return length_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t length_;
  std::size_t limit_;
};

/// Throws DomainError at the first byte that is not a parenthesis.
void require_parens(std::string_view s);

}  // namespace balseg
