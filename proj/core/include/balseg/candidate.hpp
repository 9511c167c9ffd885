#pragma once

#include <cstddef>
#include <optional>

#include "balseg/tree.hpp"

namespace balseg {

/// A located answer: input[start, start + length) is balanced, and when a
/// tree is present it prints exactly that segment.
struct Candidate {
  std::size_t start = 0;
  std::size_t length = 0;
  std::optional<Tree> tree;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

}  // namespace balseg
