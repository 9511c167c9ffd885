#pragma once

// Linear-time longest balanced segment.
//
// A single right-to-left sweep keeps one stack of size-annotated trees. At
// every offset the top of the stack is the longest balanced prefix of the
// suffix starting there, so the answer is the largest top seen.

#include <cstddef>
#include <string_view>
#include <vector>

#include "balseg/candidate.hpp"
#include "balseg/forest.hpp"
#include "balseg/tree.hpp"

namespace balseg {

/// One move of the sweep, applied to the character to the left of the
/// suffix f stands for:
///   ')'                    push (Nul, 0)
///   '(' on two or more     (t,m):(u,n):ts  ->  (Bin t u, 2+m+n):ts
///   '(' on a singleton     restart from [(Nul, 0)]
/// Total on every non-empty forest. Throws DomainError on other characters.
void step(char c, SizedForest& f);

/// Value form of step.
SizedForest stepped(char c, SizedForest f);

/// State of the fused sweep after consuming input[pos, n).
class SweepState {
 public:
  /// Fresh sweep over an input of length n: pos = n, stack [(Nul, 0)], and
  /// best the empty segment at n.
  explicit SweepState(std::size_t n);

  /// Consumes input[pos - 1]. Precondition: pos() > 0 and c is a paren.
  void advance(char c);

  std::size_t pos() const noexcept { return pos_; }
  const SizedForest& stack() const noexcept { return stack_; }
  const Candidate& best() const noexcept { return best_; }

 private:
  SizedForest stack_;
  Candidate best_;
  std::size_t pos_;
};

/// Longest balanced prefix of s, with its size: head (foldr step [(Nul,0)] s).
SizedTree lbp_linear(std::string_view s);

/// Longest balanced segment of s with its tree. Ties go to the leftmost
/// start. O(n) time; the stack is O(n) in the worst case.
Candidate lbs_linear(std::string_view s);

/// Length of the longest balanced segment. Keeps only sizes on the stack
/// and allocates no trees.
std::size_t lbsl_linear(std::string_view s);

/// Size of the head tree after each suffix, in tails order (longest suffix
/// first, "" last). Materializes one entry per offset; for tests and
/// debugging.
std::vector<std::size_t> scan_trace(std::string_view s);

/// The full scan: the stack after each suffix, in tails order. Small
/// inputs only (quadratic space).
std::vector<SizedForest> scan_forests(std::string_view s);

}  // namespace balseg
