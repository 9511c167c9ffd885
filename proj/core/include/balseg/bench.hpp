#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balseg/gen.hpp"

namespace balseg::bench {

enum class Algo { lbs, lbsl };

std::string_view to_string(Algo algo) noexcept;
std::optional<Algo> parse_algo(std::string_view name) noexcept;

inline constexpr std::size_t kMinSize = 10'000;
inline constexpr double kDefaultThreshold = 3.0;

struct BenchRecord {
  std::size_t size = 0;
  double wall_time_s = 0.0;  // best of the repeats, generation excluded
  double per_char_s = 0.0;   // wall_time_s / size
  Algo algo = Algo::lbsl;
  gen::Kind kind = gen::Kind::uniform;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;  // set when !ok: "out of memory", "timeout", ...
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  Algo algo = Algo::lbsl;
  gen::Kind kind = gen::Kind::uniform;
  std::uint64_t seed = 1;
  unsigned repeats = 3;
  /// A run slower than this is recorded as failed. Not enforced when unset.
  std::optional<double> timeout_s;
};

/// Generates one input per size and times the algorithm on it. Records come
/// back in the order of config.sizes. Throws std::invalid_argument when
/// sizes is empty, a size is below kMinSize, or repeats is zero; resource
/// exhaustion during a run yields a failed record instead.
std::vector<BenchRecord> bench_run(const BenchConfig& config);

struct LinearityReport {
  std::vector<BenchRecord> records;
  double max_ratio = 1.0;  // max(per_char) / min(per_char)
  double threshold = kDefaultThreshold;
  bool pass = false;
};

/// Spread of per-character time across records. Passes when every record
/// succeeded and max_ratio <= threshold; a single record trivially passes.
/// Throws std::invalid_argument on an empty list or on records that mix
/// algorithms or input kinds.
LinearityReport check_linearity(std::vector<BenchRecord> records,
                                double threshold = kDefaultThreshold);

/// One line of JSON, without the trailing newline.
std::string to_json_line(const BenchRecord& r);

/// Size/time table laid out like a classic runtime table: sizes in
/// millions across, then wall time and per-character time rows.
std::string render_table(const std::vector<BenchRecord>& records);

}  // namespace balseg::bench
