#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "balseg/bench.hpp"
#include "balseg/error.hpp"
#include "balseg/forest.hpp"
#include "balseg/gen.hpp"
#include "balseg/linear.hpp"
#include "balseg/oracle.hpp"
#include "balseg/tree.hpp"

namespace balseg::cli {
namespace {

// Carries an exit code out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

struct InputSource {
  std::string inline_text;
  bool has_inline = false;
  std::string file;
};

void strip_one_newline(std::string& s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
}

std::string read_input(const InputSource& src, std::istream& in) {
  if (src.has_inline) return src.inline_text;
  std::string text;
  if (!src.file.empty()) {
    std::error_code ec;
    const auto bytes = std::filesystem::file_size(src.file, ec);
    if (ec) throw Failure{kExitIo, "cannot read " + src.file + ": " + ec.message()};
    if (bytes > kMaxInputChars + 1) {
      throw Failure{kExitUsage, src.file + " is larger than the 2^31 character limit"};
    }
    std::ifstream file(src.file, std::ios::binary);
    if (!file) throw Failure{kExitIo, "cannot open " + src.file};
    text.assign(std::istreambuf_iterator<char>(file), {});
    if (file.bad()) throw Failure{kExitIo, "error while reading " + src.file};
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
    if (in.bad()) throw Failure{kExitIo, "error while reading standard input"};
  }
  strip_one_newline(text);
  if (text.size() > kMaxInputChars) {
    throw Failure{kExitUsage, "input is larger than the 2^31 character limit"};
  }
  return text;
}

void add_input_options(CLI::App* cmd, InputSource& src) {
  cmd->add_option("input", src.inline_text,
                  "Parenthesis string (default: read standard input)");
  cmd->add_option("-f,--file", src.file, "Read the input from a file");
}

bool inline_given(const CLI::App* cmd) {
  return cmd->get_option("input")->count() > 0;
}

SolveAnswer solve(std::string_view input, bool oracle_algo, std::size_t oracle_limit) {
  const Candidate c = oracle_algo
                          ? oracle::lbs_spec(input, {oracle_limit})
                          : lbs_linear(input);
  SolveAnswer a;
  a.algo = oracle_algo ? "oracle" : "linear";
  a.start = c.start;
  a.length = c.length;
  a.segment = std::string(input.substr(c.start, c.length));
  a.tree = to_constructor_string(*c.tree);
  return a;
}

std::string render_trace(std::string_view input, std::size_t oracle_limit) {
  const auto rows = oracle::fig1_trace(input, {oracle_limit});
  const auto prefixes = oracle::inits(input);
  std::vector<std::array<std::string, 3>> cells;
  cells.push_back({"inits", "map parseF", "filtJust"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cells.push_back({"\"" + prefixes[i] + "\"", to_abbrev_string(rows[i]),
                     rows[i] ? to_abbrev_string(*rows[i]) : std::string()});
  }
  std::array<std::size_t, 3> width{};
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < 3; ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::string out;
  auto emit = [&](const std::array<std::string, 3>& row) {
    std::string line;
    for (std::size_t k = 0; k < 3; ++k) {
      line += row[k];
      if (k < 2) line += std::string(width[k] - row[k].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit(cells.front());
  emit({std::string(width[0], '-'), std::string(width[1], '-'),
        std::string(width[2], '-')});
  for (std::size_t i = 1; i < cells.size(); ++i) emit(cells[i]);
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto n = parse_count(item);
    if (!n) throw Failure{kExitUsage, "invalid size '" + item + "'"};
    sizes.push_back(*n);
  }
  if (sizes.empty()) throw Failure{kExitUsage, "--sizes is empty"};
  return sizes;
}

}  // namespace

std::string render_text(const SolveAnswer& answer, Mode mode) {
  switch (mode) {
    case Mode::segment:
      return answer.segment;
    case Mode::length:
      return std::to_string(answer.length);
    case Mode::tree:
      return answer.tree;
    case Mode::offsets:
      return "start=" + std::to_string(answer.start) +
             " length=" + std::to_string(answer.length);
  }
  return {};
}

std::string to_json(const SolveAnswer& answer) {
  nlohmann::ordered_json j;
  j["algo"] = answer.algo;
  j["start"] = answer.start;
  j["length"] = answer.length;
  j["segment"] = answer.segment;
  j["tree"] = answer.tree;
  return j.dump();
}

std::optional<SolveAnswer> answer_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    SolveAnswer a;
    a.algo = j.at("algo").get<std::string>();
    a.start = j.at("start").get<std::size_t>();
    a.length = j.at("length").get<std::size_t>();
    a.segment = j.at("segment").get<std::string>();
    a.tree = j.at("tree").get<std::string>();
    return a;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

std::optional<std::size_t> parse_count(std::string_view text) {
  const std::string s(text);
  if (s.empty()) return std::nullopt;
  if (s.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return static_cast<std::size_t>(std::stoull(s));
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (used != s.size() || !std::isfinite(v) || v < 0 || v > 9.0e15 ||
      v != std::floor(v)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(v);
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Longest balanced parenthesis segment: solve, generate, trace, bench",
               "balseg"};
  app.require_subcommand(1);

  // solve
  InputSource solve_src;
  std::string algo_name = "linear";
  std::string mode_name = "segment";
  std::string format_name = "text";
  bool json_flag = false;
  std::size_t oracle_limit = oracle::kDefaultMaxLength;
  auto* solve_cmd = app.add_subcommand("solve", "Find the longest balanced segment");
  add_input_options(solve_cmd, solve_src);
  solve_cmd->add_option("--algo", algo_name, "linear or oracle")
      ->check(CLI::IsMember({"linear", "oracle"}));
  solve_cmd->add_option("--mode", mode_name, "segment, length, tree or offsets")
      ->check(CLI::IsMember({"segment", "length", "tree", "offsets"}));
  solve_cmd->add_option("--format", format_name, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_flag("--json", json_flag, "Same as --format json");
  solve_cmd->add_option("--oracle-limit", oracle_limit,
                        "Longest input the oracle accepts");

  // gen
  std::string kind_name = "uniform";
  std::string len_text = "0";
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a test input");
  gen_cmd->add_option("--kind", kind_name,
                      "uniform, balanced, forest, deep or flat");
  gen_cmd->add_option("--len", len_text, "Number of characters")->required();
  gen_cmd->add_option("--seed", seed, "Generator seed");

  // trace
  InputSource trace_src;
  auto* trace_cmd = app.add_subcommand(
      "trace", "Tabulate parseF and filtJust over every prefix");
  add_input_options(trace_cmd, trace_src);
  trace_cmd->add_option("--oracle-limit", oracle_limit,
                        "Longest input the oracle accepts");

  // bench
  std::string sizes_text;
  std::string bench_algo = "lbsl";
  std::string bench_kind = "uniform";
  unsigned repeats = 3;
  std::uint64_t bench_seed = 1;
  double threshold = bench::kDefaultThreshold;
  std::string bench_format = "both";
  double timeout = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Time the linear algorithm");
  bench_cmd->add_option("--sizes", sizes_text, "Comma-separated sizes, e.g. 1e6,2e6")
      ->required();
  bench_cmd->add_option("--algo", bench_algo, "lbsl or lbs");
  bench_cmd->add_option("--kind", bench_kind, "Input kind (see gen)");
  bench_cmd->add_option("--repeats", repeats, "Best of this many runs");
  bench_cmd->add_option("--seed", bench_seed, "Generator seed");
  bench_cmd->add_option("--threshold", threshold,
                        "Largest allowed per-character time ratio");
  bench_cmd->add_option("--format", bench_format, "table, jsonl or both")
      ->check(CLI::IsMember({"table", "jsonl", "both"}));
  bench_cmd->add_option("--timeout", timeout,
                        "Fail a size whose run exceeds this many seconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands()) {
      if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
        out << sub->help();
        return kExitOk;
      }
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      solve_src.has_inline = inline_given(solve_cmd);
      const std::string input = read_input(solve_src, in);
      const bool oracle_algo = algo_name == "oracle";
      const Mode mode = mode_name == "length"  ? Mode::length
                        : mode_name == "tree"  ? Mode::tree
                        : mode_name == "offsets" ? Mode::offsets
                                               : Mode::segment;
      const bool json = json_flag || format_name == "json";
      if (!json && mode == Mode::length) {
        // The length alone needs no trees.
        out << (oracle_algo ? oracle::lbsl_spec(input, {oracle_limit})
                            : lbsl_linear(input))
            << "\n";
        return kExitOk;
      }
      const SolveAnswer answer = solve(input, oracle_algo, oracle_limit);
      out << (json ? to_json(answer) : render_text(answer, mode)) << "\n";
      return kExitOk;
    }

    if (gen_cmd->parsed()) {
      const auto kind = gen::parse_kind(kind_name);
      if (!kind) throw Failure{kExitUsage, "unknown --kind '" + kind_name + "'"};
      const auto len = parse_count(len_text);
      if (!len) throw Failure{kExitUsage, "invalid --len '" + len_text + "'"};
      if (*kind == gen::Kind::balanced && *len % 2 != 0) {
        throw Failure{kExitUsage, "--kind balanced needs an even --len"};
      }
      out << gen::generate({*kind, *len, seed}) << "\n";
      return kExitOk;
    }

    if (trace_cmd->parsed()) {
      trace_src.has_inline = inline_given(trace_cmd);
      const std::string input = read_input(trace_src, in);
      out << render_trace(input, oracle_limit);
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      if (bench_algo == "oracle") {
        throw Failure{kExitUsage,
                      "the oracle cannot be benchmarked: its limit is " +
                          std::to_string(oracle_limit) +
                          " characters and benchmark sizes start at " +
                          std::to_string(bench::kMinSize)};
      }
      const auto algo = bench::parse_algo(bench_algo);
      if (!algo) throw Failure{kExitUsage, "unknown --algo '" + bench_algo + "'"};
      const auto kind = gen::parse_kind(bench_kind);
      if (!kind) throw Failure{kExitUsage, "unknown --kind '" + bench_kind + "'"};
      bench::BenchConfig config;
      config.sizes = parse_sizes(sizes_text);
      config.algo = *algo;
      config.kind = *kind;
      config.seed = bench_seed;
      config.repeats = repeats;
      if (timeout > 0) config.timeout_s = timeout;
      const auto report = bench::check_linearity(bench::bench_run(config), threshold);

      if (bench_format != "jsonl") out << bench::render_table(report.records);
      if (bench_format != "table") {
        for (const auto& r : report.records) out << bench::to_json_line(r) << "\n";
      }
      if (bench_format != "jsonl") {
        out << "max per-char ratio " << report.max_ratio << " (threshold "
            << report.threshold << "): " << (report.pass ? "linear" : "NOT linear")
            << "\n";
      }
      const bool failed_run = std::any_of(report.records.begin(), report.records.end(),
                                          [](const auto& r) { return !r.ok; });
      if (failed_run) return kExitIo;
      return report.pass ? kExitOk : kExitNotLinear;
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace balseg::cli
