#pragma once

// Brute-force reference implementations. These follow the executable
// specification of the problem term by term (enumerate segments, parse each,
// keep the parses that succeed, pick a largest) and exist to check the
// linear algorithm, not to be fast. Every entry point refuses inputs longer
// than OracleOptions::max_length.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balseg/candidate.hpp"
#include "balseg/forest.hpp"
#include "balseg/tree.hpp"

namespace balseg::oracle {

inline constexpr std::size_t kDefaultMaxLength = 2000;

struct OracleOptions {
  std::size_t max_length = kDefaultMaxLength;
};

/// All prefixes, shortest first: inits "ab" = ["", "a", "ab"].
std::vector<std::string> inits(std::string_view xs);

/// All suffixes, longest first: tails "ab" = ["ab", "b", ""].
std::vector<std::string> tails(std::string_view xs);

/// concat (map inits (tails xs)): ordered by start, then by length.
std::vector<std::string> segments(std::string_view xs);

/// Longest balanced segment. Among segments of equal size the one met
/// first in `segments` order wins, i.e. the leftmost start. Always defined:
/// the empty segment at offset 0 parses to Nul.
Candidate lbs_spec(std::string_view s, const OracleOptions& opts = {});

/// The same answer computed with no shortcuts at all: every segment is
/// materialized and parsed, then maxBy size . filtJust. Cubic; meant for
/// inputs of a few dozen characters, and used to check lbs_spec.
Candidate lbs_spec_literal(std::string_view s, const OracleOptions& opts = {});

/// Parse tree of the longest balanced prefix of s.
Tree lbp_spec(std::string_view s, const OracleOptions& opts = {});

/// size . lbs_spec
std::size_t lbsl_spec(std::string_view s, const OracleOptions& opts = {});

/// map parse_forest (inits s): the parseF column of the prefix trace table.
std::vector<std::optional<Forest>> fig1_trace(std::string_view s,
                                              const OracleOptions& opts = {});

/// parse_forest written as a right fold, foldr stepM (Just [Nul]), with the
/// fold unrolled recursively. Only for small inputs; used to check the
/// iterative parser.
std::optional<Forest> parse_forest_fold(std::string_view s,
                                        const OracleOptions& opts = {});

/// For every suffix in tails order, the forest obtained by folding the
/// total step over that suffix from scratch. Independent of any scan.
std::vector<SizedForest> fold_each_tail(std::string_view s,
                                        const OracleOptions& opts = {});

}  // namespace balseg::oracle
