#include "balseg/oracle.hpp"

#include <gtest/gtest.h>

#include "balseg/error.hpp"
#include "balseg/gen.hpp"
#include "support/brute_force.hpp"

namespace balseg::oracle {
namespace {

using Strings = std::vector<std::string>;

const Tree N = Tree::nul();
Tree B(Tree l, Tree r) { return Tree::bin(std::move(l), std::move(r)); }

TEST(OracleTest, Inits) {
  EXPECT_EQ(inits(""), Strings{""});
  EXPECT_EQ(inits("ab"), (Strings{"", "a", "ab"}));
  EXPECT_EQ(inits("()"), (Strings{"", "(", "()"}));
}

TEST(OracleTest, Tails) {
  EXPECT_EQ(tails(""), Strings{""});
  EXPECT_EQ(tails("ab"), (Strings{"ab", "b", ""}));
  EXPECT_EQ(tails(")("), (Strings{")(", "(", ""}));
}

TEST(OracleTest, Segments) {
  EXPECT_EQ(segments(""), Strings{""});
  EXPECT_EQ(segments("ab"), (Strings{"", "a", "ab", "", "b", ""}));
  EXPECT_EQ(segments("()"), (Strings{"", "(", "()", "", ")", ""}));
}

TEST(OracleTest, LbsWorkedExample) {
  const std::string s = "))(()())())()(";
  const Candidate c = lbs_spec(s);
  EXPECT_EQ(c.start, 2u);
  EXPECT_EQ(c.length, 8u);
  ASSERT_TRUE(c.tree);
  EXPECT_EQ(pr(*c.tree), "(()())()");
  EXPECT_EQ(lbsl_spec(s), 8u);
}

TEST(OracleTest, LbsSmallCases) {
  EXPECT_EQ(lbs_spec(""), (Candidate{0, 0, N}));
  const Candidate c = lbs_spec("()(())");
  EXPECT_EQ(c.start, 0u);
  EXPECT_EQ(c.length, 6u);
  EXPECT_EQ(lbsl_spec("(((("), 0u);
  EXPECT_EQ(lbsl_spec(")()("), 2u);
  EXPECT_EQ(lbs_spec(")()(").start, 1u);
  // No balanced segment: the empty one at offset 0.
  EXPECT_EQ(lbs_spec(")))"), (Candidate{0, 0, N}));
}

TEST(OracleTest, LbpExamples) {
  EXPECT_EQ(lbp_spec("())()("), B(N, N));
  EXPECT_EQ(lbp_spec(")()()"), N);
  EXPECT_EQ(pr(lbp_spec("()()")), "()()");
}

TEST(OracleTest, PrefixTraceRows) {
  const auto rows = fig1_trace("())()(");
  const std::vector<std::optional<Forest>> expected{
      Forest{N}, std::nullopt, Forest{B(N, N)}, Forest{B(N, N), N},
      std::nullopt, Forest{B(N, N), B(N, N)}, std::nullopt};
  EXPECT_EQ(rows, expected);
  EXPECT_EQ(fig1_trace(""), (std::vector<std::optional<Forest>>{Forest{N}}));
  EXPECT_EQ(fig1_trace("("), (std::vector<std::optional<Forest>>{Forest{N}, std::nullopt}));
}

TEST(OracleTest, RejectsForeignCharactersAndLongInputs) {
  EXPECT_THROW(lbs_spec("(a)"), DomainError);
  EXPECT_THROW(lbp_spec("x"), DomainError);
  EXPECT_THROW(fig1_trace("( )"), DomainError);
  const std::string long_input(kDefaultMaxLength + 1, '(');
  EXPECT_THROW(lbs_spec(long_input), OracleLimitError);
  EXPECT_NO_THROW(lbs_spec(long_input.substr(1)));
  EXPECT_THROW(lbs_spec("(((", {2}), OracleLimitError);
}

// The shortcut-free pipeline and the pruned one give identical answers.
TEST(OracleTest, PrunedMatchesLiteralExhaustively) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& s : testing::all_strings(n)) {
      ASSERT_EQ(lbs_spec(s), lbs_spec_literal(s)) << s;
    }
  }
}

TEST(OracleTest, AnswerIsALocatedBalancedSegment) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const auto& s : testing::all_strings(n)) {
      const Candidate c = lbs_spec(s);
      ASSERT_TRUE(c.tree);
      ASSERT_EQ(pr(*c.tree), s.substr(c.start, c.length)) << s;
      ASSERT_EQ(lbsl_spec(s), size(*c.tree));
      const auto brute = testing::brute_lbs(s);
      ASSERT_EQ(c.start, brute.start) << s;
      ASSERT_EQ(c.length, brute.length) << s;
    }
  }
}

TEST(OracleTest, LbpIsTheLongestBalancedPrefix) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& s : testing::all_strings(n)) {
      const std::string p = pr(lbp_spec(s));
      ASSERT_EQ(s.compare(0, p.size(), p), 0) << s;
      ASSERT_TRUE(is_balanced(p));
      for (const auto& longer : inits(s)) {
        if (longer.size() > p.size()) ASSERT_FALSE(is_balanced(longer)) << s;
      }
    }
  }
}

TEST(OracleTest, PrunedMatchesBruteForceOnRandomStrings) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::string s = gen::gen_uniform({gen::Kind::uniform, seed * 37 % 400, seed});
    const Candidate c = lbs_spec(s);
    const auto brute = testing::brute_lbs(s);
    ASSERT_EQ(c.start, brute.start) << s;
    ASSERT_EQ(c.length, brute.length) << s;
  }
}

}  // namespace
}  // namespace balseg::oracle
