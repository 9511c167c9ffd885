#include "balseg/error.hpp"

#include <string>

namespace balseg {
namespace {

std::string describe(std::size_t position, char character) {
  std::string shown;
  const auto byte = static_cast<unsigned char>(character);
  if (byte >= 0x20 && byte < 0x7f) {
    shown = std::string("'") + character + "'";
  } else {
    static constexpr char kHex[] = "0123456789abcdef";
    shown = std::string("0x") + kHex[byte >> 4] + kHex[byte & 0xf];
  }
  std::string where;
  if (position != std::string_view::npos) {
    where = " at offset " + std::to_string(position);
  }
  return "invalid character " + shown + where +
         " (only '(' and ')' are allowed)";
}

}  // namespace

DomainError::DomainError(std::size_t position, char character)
    : std::invalid_argument(describe(position, character)),
      position_(position),
      character_(character) {}

DomainError::DomainError(char character)
    : DomainError(std::string_view::npos, character) {}

OracleLimitError::OracleLimitError(std::size_t length, std::size_t limit)
    : std::length_error("input of " + std::to_string(length) +
                        " characters exceeds the oracle limit of " +
                        std::to_string(limit)),
      length_(length),
      limit_(limit) {}

void require_parens(std::string_view s) {
  const auto pos = s.find_first_not_of("()");
  if (pos != std::string_view::npos) throw DomainError(pos, s[pos]);
}

}  // namespace balseg
