#include "balseg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <new>
#include <stdexcept>

#include <json.hpp>

#include "balseg/linear.hpp"

namespace balseg::bench {
namespace {

volatile std::size_t g_sink = 0;

double time_once(Algo algo, const std::string& input) {
  const auto t0 = std::chrono::steady_clock::now();
  if (algo == Algo::lbsl) {
    g_sink = lbsl_linear(input);
  } else {
    g_sink = lbs_linear(input).length;
  }
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

std::string format(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

}  // namespace

std::string_view to_string(Algo algo) noexcept {
  return algo == Algo::lbs ? "lbs" : "lbsl";
}

std::optional<Algo> parse_algo(std::string_view name) noexcept {
  if (name == "lbs") return Algo::lbs;
  if (name == "lbsl") return Algo::lbsl;
  return std::nullopt;
}

std::vector<BenchRecord> bench_run(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("no sizes given");
  if (config.repeats == 0) throw std::invalid_argument("repeats must be >= 1");
  for (std::size_t n : config.sizes) {
    if (n < kMinSize) {
      throw std::invalid_argument("benchmark sizes must be at least " +
                                  std::to_string(kMinSize));
    }
  }

  std::vector<BenchRecord> records;
  records.reserve(config.sizes.size());
  for (std::size_t n : config.sizes) {
    BenchRecord r;
    r.size = n;
    r.algo = config.algo;
    r.kind = config.kind;
    r.seed = config.seed;
    try {
      const std::string input = gen::generate({config.kind, n, config.seed});
      double best = std::numeric_limits<double>::infinity();
      for (unsigned i = 0; i < config.repeats; ++i) {
        best = std::min(best, time_once(config.algo, input));
      }
      r.wall_time_s = best;
      r.per_char_s = best / static_cast<double>(n);
      if (config.timeout_s && best > *config.timeout_s) {
        r.ok = false;
        r.error = "timeout";
      }
    } catch (const std::bad_alloc&) {
      r.ok = false;
      r.error = "out of memory";
    } catch (const std::length_error&) {
      r.ok = false;
      r.error = "out of memory";
    }
    records.push_back(std::move(r));
  }
  return records;
}

LinearityReport check_linearity(std::vector<BenchRecord> records,
                                double threshold) {
  if (records.empty()) throw std::invalid_argument("no records to check");
  for (const auto& r : records) {
    if (r.algo != records.front().algo || r.kind != records.front().kind) {
      throw std::invalid_argument("records mix algorithms or input kinds");
    }
  }
  LinearityReport report;
  report.threshold = threshold;
  const bool all_ok = std::all_of(records.begin(), records.end(),
                                  [](const BenchRecord& r) { return r.ok; });
  if (all_ok) {
    auto [lo, hi] = std::minmax_element(
        records.begin(), records.end(),
        [](const BenchRecord& a, const BenchRecord& b) {
          return a.per_char_s < b.per_char_s;
        });
    report.max_ratio = lo->per_char_s > 0.0
                           ? hi->per_char_s / lo->per_char_s
                           : std::numeric_limits<double>::infinity();
    if (records.size() == 1) report.max_ratio = 1.0;
  } else {
    report.max_ratio = std::numeric_limits<double>::infinity();
  }
  report.pass = all_ok && report.max_ratio <= threshold;
  report.records = std::move(records);
  return report;
}

std::string to_json_line(const BenchRecord& r) {
  nlohmann::ordered_json j;
  j["size"] = r.size;
  j["wall_time_s"] = r.wall_time_s;
  j["per_char_ns"] = r.per_char_s * 1e9;
  j["algo"] = to_string(r.algo);
  j["kind"] = gen::to_string(r.kind);
  j["seed"] = r.seed;
  j["ok"] = r.ok;
  if (!r.ok) j["error"] = r.error;
  return j.dump();
}

std::string render_table(const std::vector<BenchRecord>& records) {
  std::vector<std::string> head{"input size (M)"};
  std::vector<std::string> time{"wall time (sec.)"};
  std::vector<std::string> per{"per char (ns)"};
  for (const auto& r : records) {
    head.push_back(format("%g", static_cast<double>(r.size) / 1e6));
    time.push_back(r.ok ? format("%.3f", r.wall_time_s) : r.error);
    per.push_back(r.ok ? format("%.2f", r.per_char_s * 1e9) : "-");
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto* row : {&head, &time, &per}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      width[i] = std::max(width[i], (*row)[i].size());
    }
  }
  std::string out;
  for (const auto* row : {&head, &time, &per}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      const std::string& cell = (*row)[i];
      const std::string pad(width[i] - cell.size(), ' ');
      if (i == 0) {
        out += cell + pad + " |";
      } else {
        out += " " + pad + cell;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace balseg::bench
