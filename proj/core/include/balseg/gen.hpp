#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "balseg/forest.hpp"
#include "balseg/tree.hpp"

namespace balseg::gen {

/// SplitMix64, written out so outputs are reproducible in any language:
///
///   state += 0x9e3779b97f4a7c15
///   z = state
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// next() % bound. Precondition: bound > 0. The modulo bias is
  /// negligible for the bounds used here and keeps the rule portable.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

enum class Kind { uniform, balanced, forest, adversarial_deep, adversarial_flat };

std::string_view to_string(Kind kind) noexcept;

/// Accepts the names printed by to_string, plus "deep" and "flat".
std::optional<Kind> parse_kind(std::string_view name) noexcept;

struct GenSpec {
  Kind kind = Kind::uniform;
  std::size_t length = 0;
  std::uint64_t seed = 1;
};

/// Each character is '(' or ')' with probability 1/2. Character i is bit
/// (i % 64) of the (i / 64)-th output of SplitMix64(seed), 1 meaning '('.
std::string gen_uniform(const GenSpec& spec);

/// Random tree printing to spec.length characters. Throws
/// std::invalid_argument for odd lengths.
///
/// The generator first draws one of four shapes, then splits the remaining
/// Bin nodes top-down: left spine (all into the left child), right spine
/// (all into the right), bushy (uniform split), or mixed (one of the three
/// rules per node).
Tree gen_tree(const GenSpec& spec);

/// pr(gen_tree(spec)).
std::string gen_balanced(const GenSpec& spec);

/// Random forest printing to spec.length characters: a random number of
/// trees of matching parity, with the Bin nodes scattered among them.
Forest gen_forest(const GenSpec& spec);

/// adversarial_deep: floor(n/2) '(' then ceil(n/2) ')'.
/// adversarial_flat: "()" repeated, plus a final '(' when n is odd.
std::string gen_adversarial(const GenSpec& spec);

/// Dispatches on spec.kind; the forest kind yields its printed form.
std::string generate(const GenSpec& spec);

}  // namespace balseg::gen
