#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace balseg {

/// Parse tree of the grammar  S -> empty | '(' S ')' S.
///
/// A Tree is either the leaf Nul or a node Bin(left, right) printing as
/// "(" + pr(left) + ")" + pr(right). Nodes are immutable and shared between
/// handles, so building Bin(t, u) never copies t or u. Copying a Tree copies
/// a handle; equality is structural.
///
/// Every traversal (printing, sizing, comparison, destruction) uses an
/// explicit work stack: trees built from 10^7-character inputs may be
/// millions of levels deep.
class Tree {
 public:
  /// The leaf Nul.
  Tree() noexcept = default;

  static Tree nul() noexcept { return Tree(); }
  static Tree bin(Tree left, Tree right);

  bool is_nul() const noexcept { return node_ == nullptr; }
  bool is_bin() const noexcept { return node_ != nullptr; }

  // Children of a Bin node. Precondition: is_bin().
  const Tree& left() const noexcept;
  const Tree& right() const noexcept;

  /// Identity of the underlying node; equal handles share structure.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  struct Node;
  std::shared_ptr<Node> node_;
};

struct Tree::Node {
  Tree left;
  Tree right;

  Node(Tree l, Tree r) noexcept : left(std::move(l)), right(std::move(r)) {}
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;
  ~Node();
};

inline const Tree& Tree::left() const noexcept { return node_->left; }
inline const Tree& Tree::right() const noexcept { return node_->right; }

/// Number of Bin nodes in t.
std::size_t bin_count(const Tree& t);

/// Printed length of t, i.e. 2 * bin_count(t). Does not build the string.
std::size_t size(const Tree& t);

/// The string t derives: "" for Nul, "(" + pr(l) + ")" + pr(r) for Bin.
std::string pr(const Tree& t);

/// Constructor notation, e.g. "Bin (Bin Nul Nul) Nul".
std::string to_constructor_string(const Tree& t);

/// Abbreviated constructor notation, e.g. "B (B N N) N".
std::string to_abbrev_string(const Tree& t);

/// Parses a string in constructor notation, either long ("Bin Nul Nul") or
/// abbreviated ("B N N") form. Returns std::nullopt on malformed text.
std::optional<Tree> tree_from_string(std::string_view text);

/// Counter check: the running sum (+1 for '(', -1 for ')') never drops
/// below zero and ends at zero. Throws DomainError on foreign characters.
bool is_balanced(std::string_view s);

}  // namespace balseg
