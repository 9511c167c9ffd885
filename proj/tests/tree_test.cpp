#include "balseg/tree.hpp"

#include <gtest/gtest.h>

#include "balseg/error.hpp"
#include "balseg/forest.hpp"
#include "balseg/gen.hpp"
#include "support/brute_force.hpp"

namespace balseg {
namespace {

const Tree N = Tree::nul();
Tree B(Tree l, Tree r) { return Tree::bin(std::move(l), std::move(r)); }

TEST(TreeTest, PrintsBaseCases) {
  EXPECT_EQ(pr(N), "");
  EXPECT_EQ(pr(B(N, N)), "()");
  const Tree t1 = B(N, N);
  const Tree t2 = B(N, t1);
  EXPECT_EQ(pr(B(t2, t1)), "(()())()");
}

TEST(TreeTest, SizeCountsCharacters) {
  EXPECT_EQ(size(N), 0u);
  EXPECT_EQ(size(B(N, N)), 2u);
  EXPECT_EQ(size(B(B(N, B(N, N)), B(N, N))), 8u);
}

TEST(TreeTest, EqualityIsStructural) {
  EXPECT_EQ(B(N, B(N, N)), B(N, B(N, N)));
  EXPECT_NE(B(B(N, N), N), B(N, B(N, N)));
  EXPECT_NE(B(N, N), N);
}

TEST(TreeTest, ConstructorNotation) {
  EXPECT_EQ(to_constructor_string(N), "Nul");
  EXPECT_EQ(to_constructor_string(B(B(N, N), N)), "Bin (Bin Nul Nul) Nul");
  EXPECT_EQ(to_constructor_string(B(N, B(N, N))), "Bin Nul (Bin Nul Nul)");
  EXPECT_EQ(to_abbrev_string(B(B(N, N), N)), "B (B N N) N");
}

TEST(TreeTest, ReadsConstructorNotation) {
  for (const char* text : {"Nul", "Bin Nul Nul", "Bin (Bin Nul (Bin Nul Nul)) (Bin Nul Nul)",
                           "B (B N N) N"}) {
    auto t = tree_from_string(text);
    ASSERT_TRUE(t) << text;
  }
  EXPECT_EQ(*tree_from_string("B (B N N) N"), B(B(N, N), N));
  for (const char* bad : {"", "Bin", "Bin Nul", "Bin Nul Nul Nul", "(Nul)", "Bin Bin Nul Nul Nul",
                          "Bin (Nul Nul) Nul", "Leaf"}) {
    EXPECT_FALSE(tree_from_string(bad)) << bad;
  }
}

TEST(TreeTest, ParseExamples) {
  EXPECT_EQ(parse(""), N);
  EXPECT_EQ(parse("()"), B(N, N));
  EXPECT_FALSE(parse(")("));
  EXPECT_FALSE(parse("("));
}

TEST(TreeTest, IsBalancedExamples) {
  EXPECT_TRUE(is_balanced(""));
  EXPECT_TRUE(is_balanced("(()())()"));
  EXPECT_FALSE(is_balanced("())"));
  EXPECT_FALSE(is_balanced(")("));
}

TEST(TreeTest, ForeignCharactersAreDomainErrors) {
  EXPECT_THROW(parse("(x)"), DomainError);
  EXPECT_THROW(is_balanced("() "), DomainError);
  try {
    parse("()\n()");
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_EQ(e.character(), '\n');
  }
}

TEST(TreeTest, ParseAgreesWithCounterExhaustively) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const auto& s : testing::all_strings(n)) {
      ASSERT_EQ(parse(s).has_value(), is_balanced(s)) << s;
      ASSERT_EQ(is_balanced(s), testing::counter_balanced(s)) << s;
    }
  }
}

TEST(TreeTest, RandomTreesRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t len = 2 * (seed * 7 % 1001);
    const Tree t = gen::gen_tree({gen::Kind::balanced, len, seed});
    const std::string printed = pr(t);
    ASSERT_EQ(size(t), printed.size());
    ASSERT_TRUE(is_balanced(printed));
    const auto back = parse(printed);
    ASSERT_TRUE(back);
    ASSERT_EQ(*back, t) << "seed " << seed;
    ASSERT_EQ(*tree_from_string(to_constructor_string(t)), t);
  }
}

TEST(TreeTest, DeepTreesDoNotOverflowTheStack) {
  // A left spine and a right spine of two million nodes each.
  const std::size_t depth = 2'000'000;
  Tree left_spine;
  Tree right_spine;
  for (std::size_t i = 0; i < depth; ++i) {
    left_spine = B(std::move(left_spine), N);
    right_spine = B(N, std::move(right_spine));
  }
  EXPECT_EQ(size(left_spine), 2 * depth);
  EXPECT_EQ(pr(right_spine).size(), 2 * depth);
  const Tree copy = *parse(pr(left_spine));
  EXPECT_EQ(copy, left_spine);
  EXPECT_NE(copy, right_spine);
}

TEST(TreeTest, SharedSubtreesOutliveTheirParents) {
  Tree inner = B(N, N);
  Tree kept;
  {
    Tree outer = B(inner, B(inner, N));
    kept = outer.right();
  }
  EXPECT_EQ(pr(kept), "(())");
  EXPECT_EQ(kept.left().identity(), inner.identity());
}

}  // namespace
}  // namespace balseg
