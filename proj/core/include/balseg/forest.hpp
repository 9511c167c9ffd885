#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "balseg/tree.hpp"

namespace balseg {

/// Non-empty stack of trees standing for a left-partially balanced string:
/// the trees, in print order, joined by single ')' characters.
///
/// Element 0 is the top of the stack and the leftmost printed tree. The
/// empty string is the forest [Nul].
class Forest {
 public:
  /// The forest [Nul].
  Forest() : stack_{Tree::nul()} {}

  /// Trees in print order. Throws std::invalid_argument when empty.
  Forest(std::initializer_list<Tree> trees);
  explicit Forest(const std::vector<Tree>& trees);

  /// Adopts a stack whose back() is the top. Throws when empty.
  static Forest from_stack(std::vector<Tree> stack);

  std::size_t size() const noexcept { return stack_.size(); }
  const Tree& top() const noexcept { return stack_.back(); }

  /// i-th tree in print order (0 = top).
  const Tree& operator[](std::size_t i) const noexcept {
    return stack_[stack_.size() - 1 - i];
  }

  /// Trees in print order.
  auto trees() const noexcept { return stack_ | std::views::reverse; }

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> stack_;
};

/// A tree annotated with its printed length.
struct SizedTree {
  Tree tree;
  std::size_t size = 0;

  friend bool operator==(const SizedTree&, const SizedTree&) = default;
};

/// Forest whose entries carry their printed lengths.
///
/// Offers the three stack moves the linear sweep is built from; each is
/// amortized O(1) and none copies a subtree.
class SizedForest {
 public:
  /// The forest [(Nul, 0)].
  SizedForest() : stack_{SizedTree{}} {}

  /// Entries in print order. Throws std::invalid_argument when empty or
  /// when an annotation disagrees with the tree it labels.
  SizedForest(std::initializer_list<SizedTree> entries);

  /// Annotates every tree of f with its size.
  static SizedForest from_forest(const Forest& f);

  std::size_t size() const noexcept { return stack_.size(); }
  const SizedTree& top() const noexcept { return stack_.back(); }
  const SizedTree& operator[](std::size_t i) const noexcept {
    return stack_[stack_.size() - 1 - i];
  }
  auto entries() const noexcept { return stack_ | std::views::reverse; }

  /// Drops the size annotations.
  Forest forest() const;

  /// Pushes (Nul, 0) on top.
  void push_nul() { stack_.push_back(SizedTree{}); }

  /// Replaces (t, m) : (u, n) : rest by (Bin t u, 2 + m + n) : rest.
  /// Precondition: size() >= 2.
  void combine_top();

  /// Replaces the whole stack by [(Nul, 0)].
  void reset();

  friend bool operator==(const SizedForest&, const SizedForest&) = default;

 private:
  std::vector<SizedTree> stack_;
};

/// Print a forest by concatenation: pr t0 ++ ")" ++ pr t1 ++ ")" ++ ...
std::string pr_forest(const Forest& f);

/// Print a forest by the inductive rules
///   [Nul] -> "",  Nul : ts -> ')' : ts,  Bin t u : ts -> '(' : (t : u : ts).
/// Agrees with pr_forest on every forest.
std::string pr_forest_inductive(const Forest& f);

/// Right inverse of pr_forest. Reads s right to left with one stack:
/// ')' pushes Nul, '(' combines the top two trees, and '(' on a singleton
/// stack means s is not left-partially balanced (std::nullopt).
/// Throws DomainError on foreign characters.
std::optional<Forest> parse_forest(std::string_view s);

/// The tree of a singleton forest, otherwise std::nullopt.
std::optional<Tree> unwrap(const Forest& f);

/// The unique tree t with pr(t) == s, or std::nullopt when s is unbalanced.
/// Throws DomainError on foreign characters.
std::optional<Tree> parse(std::string_view s);

/// Abbreviated notation used by trace tables, e.g. "[B N N,N]".
std::string to_abbrev_string(const Forest& f);

/// "J [..]" for a present forest, "Nothing" otherwise.
std::string to_abbrev_string(const std::optional<Forest>& f);

}  // namespace balseg
