#include "balseg/linear.hpp"

#include <algorithm>

#include "balseg/error.hpp"

namespace balseg {

void step(char c, SizedForest& f) {
  switch (c) {
    case ')':
      f.push_nul();
      return;
    case '(':
      if (f.size() >= 2) {
        f.combine_top();
      } else {
        f.reset();
      }
      return;
    default:
      throw DomainError(c);
  }
}

SizedForest stepped(char c, SizedForest f) {
  step(c, f);
  return f;
}

SweepState::SweepState(std::size_t n)
    : best_{n, 0, Tree::nul()}, pos_(n) {}

void SweepState::advance(char c) {
  --pos_;
  step(c, stack_);
  // >= so that, sweeping leftwards, an equal candidate further left wins.
  const SizedTree& top = stack_.top();
  if (top.size >= best_.length) best_ = Candidate{pos_, top.size, top.tree};
}

SizedTree lbp_linear(std::string_view s) {
  require_parens(s);
  SizedForest f;
  for (auto it = s.rbegin(); it != s.rend(); ++it) step(*it, f);
  return f.top();
}

Candidate lbs_linear(std::string_view s) {
  require_parens(s);
  SweepState state(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) state.advance(*it);
  return state.best();
}

std::size_t lbsl_linear(std::string_view s) {
  require_parens(s);
  std::vector<std::size_t> stack{0};
  std::size_t best = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it == ')') {
      stack.push_back(0);
      continue;
    }
    if (stack.size() >= 2) {
      const std::size_t m = stack.back();
      stack.pop_back();
      stack.back() += 2 + m;
      best = std::max(best, stack.back());
    } else {
      stack.back() = 0;
    }
  }
  return best;
}

std::vector<std::size_t> scan_trace(std::string_view s) {
  require_parens(s);
  std::vector<std::size_t> sizes(s.size() + 1);
  SizedForest f;
  sizes[s.size()] = f.top().size;
  for (std::size_t i = s.size(); i-- > 0;) {
    step(s[i], f);
    sizes[i] = f.top().size;
  }
  return sizes;
}

std::vector<SizedForest> scan_forests(std::string_view s) {
  require_parens(s);
  std::vector<SizedForest> out(s.size() + 1);
  for (std::size_t i = s.size(); i-- > 0;) out[i] = stepped(s[i], out[i + 1]);
  return out;
}

}  // namespace balseg
