#include "balseg/tree.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "balseg/error.hpp"

namespace balseg {

Tree Tree::bin(Tree left, Tree right) {
  Tree t;
  t.node_ = std::make_shared<Node>(std::move(left), std::move(right));
  return t;
}

// Unlinks uniquely owned descendants onto a heap-allocated list so that
// dropping a deep tree does not recurse once per level.
Tree::Node::~Node() {
  std::vector<std::shared_ptr<Node>> pending;
  auto adopt = [&pending](Tree& t) {
    if (t.node_ && t.node_.use_count() == 1) {
      pending.push_back(std::move(t.node_));
    }
  };
  adopt(left);
  adopt(right);
  while (!pending.empty()) {
    std::shared_ptr<Node> n = std::move(pending.back());
    pending.pop_back();
    adopt(n->left);
    adopt(n->right);
  }
}

bool operator==(const Tree& a, const Tree& b) {
  std::vector<std::pair<const Tree*, const Tree*>> work{{&a, &b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x->identity() == y->identity()) continue;
    if (x->is_nul() || y->is_nul()) return false;
    work.emplace_back(&x->right(), &y->right());
    work.emplace_back(&x->left(), &y->left());
  }
  return true;
}

std::size_t bin_count(const Tree& t) {
  std::size_t count = 0;
  std::vector<const Tree*> work{&t};
  while (!work.empty()) {
    const Tree* x = work.back();
    work.pop_back();
    if (x->is_nul()) continue;
    ++count;
    work.push_back(&x->right());
    work.push_back(&x->left());
  }
  return count;
}

std::size_t size(const Tree& t) { return 2 * bin_count(t); }

std::string pr(const Tree& t) {
  // A null entry stands for the ')' that closes a Bin's left subtree.
  std::string out;
  std::vector<const Tree*> work{&t};
  while (!work.empty()) {
    const Tree* x = work.back();
    work.pop_back();
    if (x == nullptr) {
      out.push_back(')');
    } else if (x->is_bin()) {
      out.push_back('(');
      work.push_back(&x->right());
      work.push_back(nullptr);
      work.push_back(&x->left());
    }
  }
  return out;
}

namespace {

struct Names {
  std::string_view nul;
  std::string_view bin;
};

std::string render(const Tree& t, Names names) {
  struct Item {
    const Tree* tree;       // subtree to render, or nullptr for literal text
    std::string_view text;  // literal text when tree == nullptr
    bool wrap;              // parenthesize when the subtree is a Bin
  };
  std::string out;
  std::vector<Item> work{{&t, {}, false}};
  while (!work.empty()) {
    Item item = work.back();
    work.pop_back();
    if (item.tree == nullptr) {
      out += item.text;
      continue;
    }
    if (item.tree->is_nul()) {
      out += names.nul;
      continue;
    }
    if (item.wrap) {
      out.push_back('(');
      work.push_back({nullptr, ")", false});
    }
    out += names.bin;
    work.push_back({&item.tree->right(), {}, true});
    work.push_back({nullptr, " ", false});
    work.push_back({&item.tree->left(), {}, true});
    work.push_back({nullptr, " ", false});
  }
  return out;
}

}  // namespace

std::string to_constructor_string(const Tree& t) {
  return render(t, {"Nul", "Bin"});
}

std::string to_abbrev_string(const Tree& t) { return render(t, {"N", "B"}); }

std::optional<Tree> tree_from_string(std::string_view text) {
  // Each open frame is a Bin still collecting its children, or a
  // parenthesized group waiting for exactly one term and a ')'.
  struct Frame {
    bool group;
    std::vector<Tree> children;
  };
  std::vector<Frame> frames;
  std::optional<Tree> result;

  auto deliver = [&](Tree t) -> bool {
    while (true) {
      if (frames.empty()) {
        if (result) return false;
        result = std::move(t);
        return true;
      }
      Frame& top = frames.back();
      if (top.group) {
        if (!top.children.empty()) return false;
        top.children.push_back(std::move(t));
        return true;
      }
      top.children.push_back(std::move(t));
      if (top.children.size() < 2) return true;
      t = Tree::bin(std::move(top.children[0]), std::move(top.children[1]));
      frames.pop_back();
    }
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      // A group is only legal as an argument of a Bin.
      if (frames.empty() || frames.back().group) return std::nullopt;
      frames.push_back({true, {}});
      ++i;
      continue;
    }
    if (c == ')') {
      if (frames.empty() || !frames.back().group ||
          frames.back().children.size() != 1) {
        return std::nullopt;
      }
      Tree t = std::move(frames.back().children.front());
      frames.pop_back();
      if (!deliver(std::move(t))) return std::nullopt;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view word = text.substr(i, j - i);
    i = j;
    if (word == "Nul" || word == "N") {
      if (!deliver(Tree::nul())) return std::nullopt;
    } else if (word == "Bin" || word == "B") {
      // A bare Bin may only appear at the top or directly inside a group.
      if (!frames.empty() && !frames.back().group) return std::nullopt;
      if (frames.empty() && result) return std::nullopt;
      frames.push_back({false, {}});
    } else {
      return std::nullopt;
    }
  }
  if (!frames.empty()) return std::nullopt;
  return result;
}

bool is_balanced(std::string_view s) {
  require_parens(s);
  long long depth = 0;
  for (const char c : s) {
    depth += (c == '(') ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace balseg
