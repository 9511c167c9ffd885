#include "balseg/oracle.hpp"

#include <algorithm>

#include "balseg/error.hpp"

namespace balseg::oracle {
namespace {

void check_input(std::string_view s, const OracleOptions& opts) {
  if (s.size() > opts.max_length) {
    throw OracleLimitError(s.size(), opts.max_length);
  }
  require_parens(s);
}

// stepM: the partial step of the right inverse, lifted into optional.
std::optional<Forest> step_partial(char x, const Forest& f) {
  std::vector<Tree> stack(f.trees().begin(), f.trees().end());
  std::reverse(stack.begin(), stack.end());
  if (x == ')') {
    stack.emplace_back();
  } else {
    if (stack.size() < 2) return std::nullopt;
    Tree t = std::move(stack.back());
    stack.pop_back();
    stack.back() = Tree::bin(std::move(t), std::move(stack.back()));
  }
  return Forest::from_stack(std::move(stack));
}

std::optional<Forest> fold_partial(std::string_view xs) {
  if (xs.empty()) return Forest{Tree::nul()};
  auto rest = fold_partial(xs.substr(1));
  if (!rest) return std::nullopt;
  return step_partial(xs.front(), *rest);
}

// The total step: like step_partial, except that '(' on a singleton stack
// restarts from [Nul] instead of failing.
SizedForest step_total(char x, SizedForest f) {
  if (x == ')') {
    f.push_nul();
  } else if (f.size() >= 2) {
    f.combine_top();
  } else {
    f.reset();
  }
  return f;
}

SizedForest fold_total(std::string_view xs) {
  if (xs.empty()) return SizedForest{};
  return step_total(xs.front(), fold_total(xs.substr(1)));
}

}  // namespace

std::vector<std::string> inits(std::string_view xs) {
  std::vector<std::string> out;
  out.reserve(xs.size() + 1);
  for (std::size_t n = 0; n <= xs.size(); ++n) out.emplace_back(xs.substr(0, n));
  return out;
}

std::vector<std::string> tails(std::string_view xs) {
  std::vector<std::string> out;
  out.reserve(xs.size() + 1);
  for (std::size_t i = 0; i <= xs.size(); ++i) out.emplace_back(xs.substr(i));
  return out;
}

std::vector<std::string> segments(std::string_view xs) {
  std::vector<std::string> out;
  for (const auto& tail : tails(xs)) {
    for (auto& init : inits(tail)) out.push_back(std::move(init));
  }
  return out;
}

Candidate lbs_spec(std::string_view s, const OracleOptions& opts) {
  check_input(s, opts);
  // Walk the segments in `segments` order without materializing them.
  // maxBy keeps the first maximum, and a successful parse of a segment
  // has exactly the segment's length as its size, so a segment no longer
  // than the current best can never be selected and its parse is skipped.
  // Two more classes of segment are never in the printer's image, so their
  // parse is Nothing and is skipped: segments whose '(' and ')' counts differ
  // (every Bin prints one of each), and, within a tail, every init at or past
  // the first point where ')' outnumbers '(' (the tail stops there).
  Candidate best{0, 0, Tree::nul()};
  for (std::size_t start = 0; start <= s.size(); ++start) {
    const std::string_view tail = s.substr(start);
    long long depth = 0;
    for (std::size_t len = 1; len <= tail.size(); ++len) {
      depth += tail[len - 1] == '(' ? 1 : -1;
      if (depth < 0) break;
      if (depth != 0 || len <= best.length) continue;
      if (auto t = parse(tail.substr(0, len))) {
        best = Candidate{start, len, std::move(*t)};
      }
    }
  }
  return best;
}

Candidate lbs_spec_literal(std::string_view s, const OracleOptions& opts) {
  check_input(s, opts);
  // Segments arrive grouped by start; track the offset alongside.
  std::optional<Candidate> best;
  std::size_t start = 0;
  std::size_t remaining = s.size() + 1;  // inits left in the current tail
  for (const auto& seg : segments(s)) {
    if (remaining == 0) {
      ++start;
      remaining = s.size() - start + 1;
    }
    --remaining;
    auto t = parse(seg);
    if (!t) continue;
    const std::size_t n = size(*t);
    if (!best || n > best->length) best = Candidate{start, n, std::move(*t)};
  }
  return *best;
}

Tree lbp_spec(std::string_view s, const OracleOptions& opts) {
  check_input(s, opts);
  Tree best;
  std::size_t best_size = 0;
  for (std::size_t len = 0; len <= s.size(); ++len) {
    if (auto t = parse(s.substr(0, len))) {
      const std::size_t n = size(*t);
      if (n > best_size) {
        best = std::move(*t);
        best_size = n;
      }
    }
  }
  return best;
}

std::size_t lbsl_spec(std::string_view s, const OracleOptions& opts) {
  return size(*lbs_spec(s, opts).tree);
}

std::vector<std::optional<Forest>> fig1_trace(std::string_view s,
                                              const OracleOptions& opts) {
  check_input(s, opts);
  std::vector<std::optional<Forest>> rows;
  for (const auto& prefix : inits(s)) rows.push_back(parse_forest(prefix));
  return rows;
}

std::optional<Forest> parse_forest_fold(std::string_view s,
                                        const OracleOptions& opts) {
  check_input(s, opts);
  return fold_partial(s);
}

std::vector<SizedForest> fold_each_tail(std::string_view s,
                                        const OracleOptions& opts) {
  check_input(s, opts);
  std::vector<SizedForest> out;
  for (const auto& tail : tails(s)) out.push_back(fold_total(tail));
  return out;
}

}  // namespace balseg::oracle
