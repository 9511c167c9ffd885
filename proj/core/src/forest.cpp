#include "balseg/forest.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "balseg/error.hpp"

namespace balseg {

Forest::Forest(std::initializer_list<Tree> trees)
    : stack_(std::rbegin(trees), std::rend(trees)) {
  if (stack_.empty()) throw std::invalid_argument("a forest is never empty");
}

Forest::Forest(const std::vector<Tree>& trees)
    : stack_(trees.rbegin(), trees.rend()) {
  if (stack_.empty()) throw std::invalid_argument("a forest is never empty");
}

Forest Forest::from_stack(std::vector<Tree> stack) {
  if (stack.empty()) throw std::invalid_argument("a forest is never empty");
  Forest f;
  f.stack_ = std::move(stack);
  return f;
}

SizedForest::SizedForest(std::initializer_list<SizedTree> entries)
    : stack_(std::rbegin(entries), std::rend(entries)) {
  if (stack_.empty()) throw std::invalid_argument("a forest is never empty");
  for (const auto& e : stack_) {
    if (e.size != balseg::size(e.tree)) {
      throw std::invalid_argument("size annotation does not match its tree");
    }
  }
}

SizedForest SizedForest::from_forest(const Forest& f) {
  SizedForest out;
  out.stack_.clear();
  out.stack_.reserve(f.size());
  for (std::size_t i = f.size(); i-- > 0;) {
    out.stack_.push_back({f[i], balseg::size(f[i])});
  }
  return out;
}

Forest SizedForest::forest() const {
  std::vector<Tree> stack;
  stack.reserve(stack_.size());
  for (const auto& e : stack_) stack.push_back(e.tree);
  return Forest::from_stack(std::move(stack));
}

void SizedForest::combine_top() {
  SizedTree t = std::move(stack_.back());
  stack_.pop_back();
  SizedTree& u = stack_.back();
  u.size = 2 + t.size + u.size;
  u.tree = Tree::bin(std::move(t.tree), std::move(u.tree));
}

void SizedForest::reset() {
  stack_.clear();
  stack_.push_back(SizedTree{});
}

std::string pr_forest(const Forest& f) {
  std::string out;
  bool first = true;
  for (const Tree& t : f.trees()) {
    if (!first) out.push_back(')');
    out += pr(t);
    first = false;
  }
  return out;
}

std::string pr_forest_inductive(const Forest& f) {
  std::vector<Tree> stack(f.trees().begin(), f.trees().end());
  std::reverse(stack.begin(), stack.end());
  std::string out;
  while (!(stack.size() == 1 && stack.back().is_nul())) {
    Tree t = std::move(stack.back());
    stack.pop_back();
    if (t.is_nul()) {
      out.push_back(')');
    } else {
      out.push_back('(');
      stack.push_back(t.right());
      stack.push_back(t.left());
    }
  }
  return out;
}

std::optional<Forest> parse_forest(std::string_view s) {
  require_parens(s);
  std::vector<Tree> stack{Tree::nul()};
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it == ')') {
      stack.emplace_back();
      continue;
    }
    if (stack.size() < 2) return std::nullopt;
    Tree t = std::move(stack.back());
    stack.pop_back();
    stack.back() = Tree::bin(std::move(t), std::move(stack.back()));
  }
  return Forest::from_stack(std::move(stack));
}

std::optional<Tree> unwrap(const Forest& f) {
  if (f.size() != 1) return std::nullopt;
  return f.top();
}

std::optional<Tree> parse(std::string_view s) {
  require_parens(s);
  // Run the same right-to-left machine on stack heights alone first, so a
  // string that will be rejected costs no tree allocation.
  std::size_t height = 1;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it == ')') {
      ++height;
    } else if (height < 2) {
      return std::nullopt;
    } else {
      --height;
    }
  }
  if (height != 1) return std::nullopt;
  auto f = parse_forest(s);
  if (!f) return std::nullopt;
  return unwrap(*f);
}

std::string to_abbrev_string(const Forest& f) {
  std::string out = "[";
  bool first = true;
  for (const Tree& t : f.trees()) {
    if (!first) out.push_back(',');
    out += to_abbrev_string(t);
    first = false;
  }
  out.push_back(']');
  return out;
}

std::string to_abbrev_string(const std::optional<Forest>& f) {
  return f ? "J " + to_abbrev_string(*f) : std::string("Nothing");
}

}  // namespace balseg
