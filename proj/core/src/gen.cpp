#include "balseg/gen.hpp"

#include <stdexcept>
#include <vector>

namespace balseg::gen {
namespace {

enum class Split { left_spine, right_spine, bushy, mixed };

// Builds a tree with `nodes` Bin nodes bottom-up with an explicit stack.
Tree build_tree(std::size_t nodes, SplitMix64& rng) {
  const auto shape = static_cast<Split>(rng.below(4));

  auto left_share = [&](std::size_t n) -> std::size_t {
    // n >= 1 nodes here; n - 1 remain to hand out below this node.
    Split rule = shape;
    if (rule == Split::mixed) rule = static_cast<Split>(rng.below(3));
    switch (rule) {
      case Split::left_spine:
        return n - 1;
      case Split::right_spine:
        return 0;
      default:
        return rng.below(n);
    }
  };

  struct Frame {
    explicit Frame(std::size_t n) : nodes(n) {}
    std::size_t nodes;
    std::size_t left_nodes = 0;
    int stage = 0;
    Tree left;
  };
  std::vector<Frame> work;
  work.emplace_back(nodes);
  Tree result;
  while (!work.empty()) {
    Frame& f = work.back();
    if (f.nodes == 0) {
      result = Tree::nul();
      work.pop_back();
      continue;
    }
    switch (f.stage) {
      case 0:
        f.left_nodes = left_share(f.nodes);
        f.stage = 1;
        work.emplace_back(f.left_nodes);
        break;
      case 1: {
        f.left = std::move(result);
        f.stage = 2;
        const std::size_t right_nodes = f.nodes - 1 - f.left_nodes;
        work.emplace_back(right_nodes);
        break;
      }
      default:
        result = Tree::bin(std::move(f.left), std::move(result));
        work.pop_back();
        break;
    }
  }
  return result;
}

}  // namespace

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::uniform:
      return "uniform";
    case Kind::balanced:
      return "balanced";
    case Kind::forest:
      return "forest";
    case Kind::adversarial_deep:
      return "adversarial-deep";
    case Kind::adversarial_flat:
      return "adversarial-flat";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view name) noexcept {
  if (name == "uniform") return Kind::uniform;
  if (name == "balanced") return Kind::balanced;
  if (name == "forest") return Kind::forest;
  if (name == "adversarial-deep" || name == "deep") return Kind::adversarial_deep;
  if (name == "adversarial-flat" || name == "flat") return Kind::adversarial_flat;
  return std::nullopt;
}

std::string gen_uniform(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  std::string out(spec.length, ')');
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < spec.length; ++i) {
    if (i % 64 == 0) word = rng.next();
    if ((word >> (i % 64)) & 1U) out[i] = '(';
  }
  return out;
}

Tree gen_tree(const GenSpec& spec) {
  if (spec.length % 2 != 0) {
    throw std::invalid_argument("a tree prints to an even number of characters");
  }
  SplitMix64 rng(spec.seed);
  return build_tree(spec.length / 2, rng);
}

std::string gen_balanced(const GenSpec& spec) { return pr(gen_tree(spec)); }

Forest gen_forest(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  const std::size_t n = spec.length;
  // k trees need k - 1 separators, and the rest must be even.
  std::size_t trees = 1 + rng.below(n + 1);
  if ((n - (trees - 1)) % 2 != 0) trees = (trees > 1) ? trees - 1 : trees + 1;
  const std::size_t nodes = (n - (trees - 1)) / 2;

  std::vector<std::size_t> share(trees, 0);
  for (std::size_t i = 0; i < nodes; ++i) ++share[rng.below(trees)];

  std::vector<Tree> out;
  out.reserve(trees);
  for (std::size_t count : share) out.push_back(build_tree(count, rng));
  return Forest(out);
}

std::string gen_adversarial(const GenSpec& spec) {
  const std::size_t n = spec.length;
  if (spec.kind == Kind::adversarial_flat) {
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(i % 2 == 0 ? '(' : ')');
    return out;
  }
  return std::string(n / 2, '(') + std::string(n - n / 2, ')');
}

std::string generate(const GenSpec& spec) {
  switch (spec.kind) {
    case Kind::uniform:
      return gen_uniform(spec);
    case Kind::balanced:
      return gen_balanced(spec);
    case Kind::forest:
      return pr_forest(gen_forest(spec));
    case Kind::adversarial_deep:
    case Kind::adversarial_flat:
      return gen_adversarial(spec);
  }
  return {};
}

}  // namespace balseg::gen
