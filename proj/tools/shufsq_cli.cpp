// Command-line front end for the shufsq shared library. Talks to the C
// API only; all verdict logic lives behind it.

#include <shufsq.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#ifdef _WIN32
#include <io.h>
#define SHUFSQ_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define SHUFSQ_ISATTY isatty(fileno(stdout))
#endif

namespace {

struct WordDeleter {
  void operator()(sq_word* w) const { sq_word_free(w); }
};
struct ResultDeleter {
  void operator()(sq_result* r) const { sq_result_free(r); }
};
struct OptionsDeleter {
  void operator()(sq_options* o) const { sq_options_free(o); }
};
using WordPtr = std::unique_ptr<sq_word, WordDeleter>;
using ResultPtr = std::unique_ptr<sq_result, ResultDeleter>;
using OptionsPtr = std::unique_ptr<sq_options, OptionsDeleter>;

std::string take_string(sq_status (*getter)(const sq_result*, char**), const sq_result* r) {
  char* raw = nullptr;
  if (getter(r, &raw) != SQ_OK || !raw) return {};
  std::string out = raw;
  sq_string_free(raw);
  return out;
}

std::string format_word(const sq_word* w, bool runlength) {
  char* raw = nullptr;
  if (sq_word_format(w, runlength ? 1 : 0, &raw) != SQ_OK || !raw) return {};
  std::string out = raw;
  sq_string_free(raw);
  return out;
}

[[noreturn]] void fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

WordPtr parse_word(const std::string& text) {
  sq_word* w = nullptr;
  if (sq_word_parse(text.c_str(), &w) != SQ_OK) fail(sq_last_error());
  return WordPtr(w);
}

WordPtr family_word(const std::vector<std::string>& family) {
  if (family.empty()) fail("--family requires a name");
  std::vector<long long> params;
  for (size_t i = 1; i < family.size(); ++i) {
    try {
      params.push_back(std::stoll(family[i]));
    } catch (const std::exception&) {
      fail("family parameter '" + family[i] + "' is not an integer");
    }
  }
  sq_word* w = nullptr;
  if (sq_word_from_family(family[0].c_str(), params.data(), params.size(), &w) != SQ_OK)
    fail(sq_last_error());
  return WordPtr(w);
}

struct CommonFlags {
  std::string format = "text";  // text | dense | runlength | json
  long long budget = 0;
  int jobs = 1;
  long long seed = 1;
  std::vector<std::string> family;
  bool exact = false;
  int max_cuts = 4;

  OptionsPtr options() const {
    OptionsPtr o(sq_options_new());
    if (budget > 0) sq_options_set_node_budget(o.get(), budget);
    sq_options_set_rule_mode(o.get(), exact ? 1 : 0);
    sq_options_set_max_cuts(o.get(), max_cuts);
    sq_options_set_census_threads(o.get(), jobs);
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags* flags, bool with_family = true) {
  cmd->add_option("--format", flags->format, "output format: text, dense, runlength or json")
      ->check(CLI::IsMember({"text", "dense", "runlength", "json"}));
  cmd->add_option("--budget", flags->budget, "search node budget");
  cmd->add_option("--jobs", flags->jobs, "worker threads for files and the census")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags->seed, "seed for randomized drivers (scan --sample)");
  if (with_family)
    cmd->add_option("--family", flags->family,
                    "generate the input word: NAME ARGS... (W, O, A, B, abba, separated-ones, "
                    "thue-morse, kolakoski)")
        ->expected(-1);
}

// Lines of a word file; '#' starts a comment, blank lines are skipped.
std::vector<std::string> read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

bool looks_like_file(const std::string& arg) {
  std::ifstream probe(arg);
  return probe.good();
}

enum class Op { Decide, Gaps };

int print_result(const sq_result* r, const CommonFlags& flags, const sq_word* word) {
  if (flags.format == "json") {
    std::cout << take_string(sq_result_json, r) << "\n";
  } else {
    bool color = SHUFSQ_ISATTY;
    std::string verdict = sq_result_verdict(r) == SQ_VERDICT_YES   ? "yes"
                          : sq_result_verdict(r) == SQ_VERDICT_NO ? "no"
                                                                  : "budget-exceeded";
    std::cout << "word: " << format_word(word, flags.format == "runlength") << "\n";
    std::cout << "verdict: " << verdict;
    std::string rule = take_string(sq_result_rule, r);
    if (!rule.empty()) std::cout << " (rule: " << rule << ")";
    std::string reason = take_string(sq_result_reason, r);
    if (!reason.empty()) std::cout << " [" << reason << "]";
    std::cout << "\n";
    if (sq_result_f(r) >= 0)
      std::cout << "f: " << sq_result_f(r) << "  g" << (sq_result_optimal(r) ? " = " : " <= ")
                << sq_result_g(r) << "\n";
    std::string twins = take_string(sq_result_twins_text, r);
    if (!twins.empty()) {
      std::cout << "twins: " << twins << "\n";
      char* pretty = nullptr;
      if (sq_result_twins_pretty(r, color ? 1 : 0, &pretty) == SQ_OK && pretty) {
        std::cout << pretty << "\n";
        sq_string_free(pretty);
      }
    }
    std::cout << "nodes: " << sq_result_nodes(r) << "  time: " << sq_result_time_ms(r)
              << " ms\n";
  }
  switch (sq_result_verdict(r)) {
    case SQ_VERDICT_YES: return 0;
    case SQ_VERDICT_NO: return 1;
    default: return 2;
  }
}

int run_on_lines(const std::vector<std::string>& lines, Op op, const CommonFlags& flags) {
  std::vector<std::string> outputs(lines.size());
  std::vector<int> codes(lines.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    OptionsPtr options = flags.options();
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      sq_word* w = nullptr;
      if (sq_word_parse(lines[i].c_str(), &w) != SQ_OK) {
        outputs[i] = "error: line " + std::to_string(i + 1) + ": " + sq_last_error();
        codes[i] = 2;
        continue;
      }
      WordPtr word(w);
      sq_result* raw = nullptr;
      sq_status st = op == Op::Decide ? sq_decide(word.get(), options.get(), &raw)
                                      : sq_longest_twins(word.get(), options.get(), &raw);
      if (st != SQ_OK) {
        outputs[i] = "error: line " + std::to_string(i + 1) + ": " + sq_last_error();
        codes[i] = 2;
        continue;
      }
      ResultPtr result(raw);
      if (flags.format == "json") {
        outputs[i] = take_string(sq_result_json, result.get());
      } else {
        std::ostringstream line;
        line << lines[i] << "\t"
             << (sq_result_verdict(result.get()) == SQ_VERDICT_YES   ? "yes"
                 : sq_result_verdict(result.get()) == SQ_VERDICT_NO ? "no"
                                                                    : "budget");
        if (op == Op::Gaps) line << "\tg=" << sq_result_g(result.get());
        std::string rule = take_string(sq_result_rule, result.get());
        if (!rule.empty()) line << "\t" << rule;
        outputs[i] = line.str();
      }
      codes[i] = sq_result_verdict(result.get()) == SQ_VERDICT_BUDGET ? 2 : 0;
    }
  };
  int jobs = std::max(1, flags.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  int rc = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::cout << outputs[i] << "\n";
    rc = std::max(rc, codes[i]);
  }
  return rc;
}

std::vector<long long> parse_index_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail("'" + item + "' is not an index");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shufsq — shuffle squares, twins and nest-free graph certificates"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string word_arg;
  std::string x_csv, y_csv;
  int census_min = 0, census_max = 8;
  long long sample = 0;
  long long rotate_offset = -1;

  auto* decide = app.add_subcommand("decide", "decide whether a word is a shuffle square");
  decide->add_option("word", word_arg, "word (dense or run-length) or file of words");
  add_common(decide, &flags);
  decide->add_flag("--exact", flags.exact, "skip the closed-form rules");
  bool reverse = false;
  decide->add_flag("--reverse", reverse, "decide reverse shuffle squares instead (brute force)");

  auto* gaps = app.add_subcommand("gaps", "deletion distance g(W) = |W| - 2 f(W)");
  gaps->add_option("word", word_arg, "word or file of words");
  add_common(gaps, &flags);

  auto* twins_cmd = app.add_subcommand("twins", "longest twins with witness");
  twins_cmd->add_option("word", word_arg, "word");
  add_common(twins_cmd, &flags);

  auto* cuts = app.add_subcommand("cuts", "cutting distance c(W)");
  cuts->add_option("word", word_arg, "word");
  cuts->add_option("--max", flags.max_cuts, "largest number of cuts to try");
  add_common(cuts, &flags);

  auto* canon = app.add_subcommand("canonicalize", "canonical form of given twins");
  canon->add_option("word", word_arg, "word");
  canon->add_option("--x", x_csv, "1-based X support, comma separated")->required();
  canon->add_option("--y", y_csv, "1-based Y support, comma separated")->required();
  add_common(canon, &flags);

  auto* generate = app.add_subcommand("generate", "emit a word of a named family");
  add_common(generate, &flags);
  generate->add_option("--rotate", rotate_offset, "rotate the generated word by this offset");

  auto* census_cmd = app.add_subcommand("census", "count shuffle squares of length 2n");
  census_cmd->add_option("min", census_min, "smallest n");
  census_cmd->add_option("max", census_max, "largest n");
  add_common(census_cmd, &flags, false);

  auto* export_cmd = app.add_subcommand("export", "Graphviz DOT of a certificate or twins graph");
  export_cmd->add_option("word", word_arg, "word");
  export_cmd->add_option("--x", x_csv, "1-based X support (with --y exports that twins' graph)");
  export_cmd->add_option("--y", y_csv, "1-based Y support");
  add_common(export_cmd, &flags);

  auto* scan = app.add_subcommand("scan", "run a solver over every word in a file");
  scan->add_option("file", word_arg, "input file, one word per line, '#' comments")->required();
  std::string scan_op = "decide";
  scan->add_option("--op", scan_op, "decide or gaps")->check(CLI::IsMember({"decide", "gaps"}));
  scan->add_option("--sample", sample, "process only this many lines, sampled by --seed");
  add_common(scan, &flags);

  CLI11_PARSE(app, argc, argv);

  auto input_word = [&]() -> WordPtr {
    if (!flags.family.empty() && !word_arg.empty())
      fail("give either a word or --family, not both");
    if (!flags.family.empty()) return family_word(flags.family);
    return parse_word(word_arg);
  };

  if (decide->parsed()) {
    if (flags.family.empty() && !word_arg.empty() && looks_like_file(word_arg))
      return run_on_lines(read_word_file(word_arg), Op::Decide, flags);
    WordPtr word = input_word();
    OptionsPtr options = flags.options();
    sq_result* raw = nullptr;
    sq_status st = reverse ? sq_decide_reverse(word.get(), options.get(), &raw)
                           : sq_decide(word.get(), options.get(), &raw);
    if (st != SQ_OK) fail(sq_last_error());
    ResultPtr result(raw);
    return print_result(result.get(), flags, word.get());
  }

  if (gaps->parsed() || twins_cmd->parsed()) {
    if (gaps->parsed() && flags.family.empty() && !word_arg.empty() && looks_like_file(word_arg))
      return run_on_lines(read_word_file(word_arg), Op::Gaps, flags);
    WordPtr word = input_word();
    OptionsPtr options = flags.options();
    sq_result* raw = nullptr;
    if (sq_longest_twins(word.get(), options.get(), &raw) != SQ_OK) fail(sq_last_error());
    ResultPtr result(raw);
    int rc = print_result(result.get(), flags, word.get());
    return rc == 2 ? 2 : 0;
  }

  if (cuts->parsed()) {
    WordPtr word = input_word();
    OptionsPtr options = flags.options();
    sq_result* raw = nullptr;
    if (sq_cutting_distance(word.get(), options.get(), &raw) != SQ_OK) fail(sq_last_error());
    ResultPtr result(raw);
    if (flags.format == "json") {
      std::cout << take_string(sq_result_json, result.get()) << "\n";
    } else if (sq_result_cuts(result.get()) >= 0) {
      std::string json = take_string(sq_result_json, result.get());
      std::cout << "c = " << sq_result_cuts(result.get()) << "\n" << json << "\n";
    } else {
      std::cout << "no shuffle square within " << flags.max_cuts << " cuts\n";
    }
    return sq_result_cuts(result.get()) >= 0 ? 0 : 1;
  }

  if (canon->parsed()) {
    WordPtr word = input_word();
    auto xs = parse_index_list(x_csv), ys = parse_index_list(y_csv);
    sq_result* raw = nullptr;
    if (sq_canonicalize(word.get(), xs.data(), xs.size(), ys.data(), ys.size(), &raw) != SQ_OK)
      fail(sq_last_error());
    ResultPtr result(raw);
    return print_result(result.get(), flags, word.get());
  }

  if (generate->parsed()) {
    if (flags.family.empty()) fail("generate requires --family NAME ARGS");
    WordPtr word = family_word(flags.family);
    if (rotate_offset >= 0) {
      sq_word* rotated = nullptr;
      if (sq_word_rotate(word.get(), rotate_offset, &rotated) != SQ_OK) fail(sq_last_error());
      word.reset(rotated);
    }
    std::cout << format_word(word.get(), flags.format == "runlength") << "\n";
    return 0;
  }

  if (census_cmd->parsed()) {
    OptionsPtr options = flags.options();
    std::cout << "n\tlength\teven_words\tshuffle_squares\tdensity\n";
    for (int n = census_min; n <= census_max; ++n) {
      long long even = 0, squares = 0;
      if (sq_census(n, options.get(), &even, &squares) != SQ_OK) fail(sq_last_error());
      double density = even > 0 ? static_cast<double>(squares) / static_cast<double>(even) : 1.0;
      std::cout << n << "\t" << 2 * n << "\t" << even << "\t" << squares << "\t" << density
                << "\n";
    }
    return 0;
  }

  if (export_cmd->parsed()) {
    WordPtr word = input_word();
    OptionsPtr options = flags.options();
    sq_result* raw = nullptr;
    if (!x_csv.empty() || !y_csv.empty()) {
      auto xs = parse_index_list(x_csv), ys = parse_index_list(y_csv);
      if (sq_canonicalize(word.get(), xs.data(), xs.size(), ys.data(), ys.size(), &raw) != SQ_OK)
        fail(sq_last_error());
    } else {
      if (sq_decide(word.get(), options.get(), &raw) != SQ_OK) fail(sq_last_error());
      ResultPtr probe(raw);
      raw = nullptr;
      if (sq_result_verdict(probe.get()) == SQ_VERDICT_YES) {
        raw = probe.release();
      } else if (sq_longest_twins(word.get(), options.get(), &raw) != SQ_OK) {
        fail(sq_last_error());
      }
    }
    ResultPtr result(raw);
    std::string dot = take_string(sq_result_graph_dot, result.get());
    if (dot.empty()) fail("no graph available for this word");
    std::cout << dot;
    return 0;
  }

  if (scan->parsed()) {
    auto lines = read_word_file(word_arg);
    if (sample > 0 && sample < static_cast<long long>(lines.size())) {
      std::mt19937_64 rng(static_cast<uint64_t>(flags.seed));
      std::shuffle(lines.begin(), lines.end(), rng);
      lines.resize(static_cast<size_t>(sample));
    }
    return run_on_lines(lines, scan_op == "gaps" ? Op::Gaps : Op::Decide, flags);
  }

  return 2;
}
