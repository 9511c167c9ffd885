#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace balseg::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotLinear = 3;

/// Inputs above this many characters are rejected before reading.
inline constexpr std::size_t kMaxInputChars = std::size_t{1} << 31;

enum class Mode { segment, length, tree, offsets };

/// What `solve` reports, independent of the output format.
struct SolveAnswer {
  std::string algo;
  std::size_t start = 0;
  std::size_t length = 0;
  std::string segment;
  std::string tree;  // constructor notation
};

/// Text rendering of one mode, without the trailing newline.
std::string render_text(const SolveAnswer& answer, Mode mode);

std::string to_json(const SolveAnswer& answer);

/// Inverse of to_json; std::nullopt on malformed or incomplete objects.
std::optional<SolveAnswer> answer_from_json(std::string_view text);

/// Parses "1000000", "1e6" or "2.5e6" into a count.
std::optional<std::size_t> parse_count(std::string_view text);

/// Runs the command line (args excludes the program name). Never throws.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace balseg::cli
