#include "shufsq.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "characterizations.hpp"
#include "graph.hpp"
#include "solver.hpp"
#include "twins.hpp"
#include "word.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
sq_status guarded(F&& f) {
  try {
    f();
    return SQ_OK;
  } catch (const shufsq::parse_error& e) {
    g_last_error = e.what();
    return SQ_ERR_PARSE;
  } catch (const shufsq::budget_error& e) {
    g_last_error = e.what();
    return SQ_ERR_BUDGET;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SQ_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SQ_ERR_INTERNAL;
  }
}

}  // namespace

struct sq_word {
  shufsq::Word word;
};

struct sq_options {
  shufsq::SolverOptions solver;
  bool exact_only = false;
  int max_cuts = 4;
  int census_threads = 1;
};

struct sq_result {
  shufsq::Word word;
  sq_verdict verdict = SQ_VERDICT_NO;
  std::string rule;
  std::string reason;
  long long f = -1;
  long long g = -1;
  bool optimal = true;
  long long cuts = -1;
  std::vector<int> cut_positions;
  std::vector<int> permutation;
  std::string reassembled;
  std::optional<shufsq::OrderedMultigraph> graph;
  std::optional<shufsq::Twins> twins;
  long long nodes = 0;
  double time_ms = 0;
  std::string kind;  // decide, gaps, cuts, reverse, canonicalize
};

const char* sq_last_error(void) { return g_last_error.c_str(); }

void sq_string_free(char* s) { delete[] s; }

sq_status sq_word_parse(const char* text, sq_word** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new sq_word{shufsq::Word::parse(text)}; });
}

sq_status sq_word_from_family(const char* family, const long long* params, size_t param_count,
                              sq_word** out) {
  if (!family || !out || (param_count > 0 && !params)) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::vector<long long> p(params, params + param_count);
    *out = new sq_word{shufsq::generate(family, p)};
  });
}

void sq_word_free(sq_word* w) { delete w; }

long long sq_word_length(const sq_word* w) { return static_cast<long long>(w->word.size()); }

int sq_word_alphabet_size(const sq_word* w) { return w->word.alphabet_size(); }

int sq_word_is_even(const sq_word* w) { return shufsq::is_even(w->word) ? 1 : 0; }

sq_status sq_word_format(const sq_word* w, int style, char** out) {
  if (!w || !out) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = dup_string(style == 0 ? w->word.to_dense_string() : w->word.to_runlength_string());
  });
}

sq_status sq_word_rotate(const sq_word* w, long long offset, sq_word** out) {
  if (!w || !out) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (offset < 0) throw std::invalid_argument("rotation offset out of range");
    *out = new sq_word{shufsq::rotate(w->word, static_cast<size_t>(offset))};
  });
}

sq_options* sq_options_new(void) { return new sq_options; }

void sq_options_free(sq_options* o) { delete o; }

void sq_options_set_node_budget(sq_options* o, long long nodes) {
  if (o && nodes > 0) o->solver.node_budget = nodes;
}

void sq_options_set_rule_mode(sq_options* o, int exact_only) {
  if (o) o->exact_only = exact_only != 0;
}

void sq_options_set_max_cuts(sq_options* o, int max_cuts) {
  if (o && max_cuts >= 0) o->max_cuts = max_cuts;
}

void sq_options_set_census_threads(sq_options* o, int threads) {
  if (o && threads >= 1) o->census_threads = threads;
}

namespace {

const sq_options kDefaultOptions{};

const sq_options& opts(const sq_options* o) { return o ? *o : kDefaultOptions; }

void attach_certificate(sq_result* r, const shufsq::Certificate& cert) {
  switch (cert.verdict) {
    case shufsq::Verdict::Yes: r->verdict = SQ_VERDICT_YES; break;
    case shufsq::Verdict::No: r->verdict = SQ_VERDICT_NO; break;
    case shufsq::Verdict::Budget: r->verdict = SQ_VERDICT_BUDGET; break;
  }
  r->rule = cert.rule;
  if (cert.reason) r->reason = shufsq::to_string(*cert.reason);
  r->nodes = cert.nodes_expanded;
  r->time_ms = cert.time_ms;
  if (cert.witness) {
    r->graph = cert.witness;
    r->twins = shufsq::twins_from_graph(*cert.witness, shufsq::runs(r->word));
  }
  if (cert.verdict == shufsq::Verdict::Yes) {
    r->f = static_cast<long long>(r->word.size()) / 2;
    r->g = 0;
  }
}

}  // namespace

sq_status sq_decide(const sq_word* w, const sq_options* o, sq_result** out) {
  if (!w || !out) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const sq_options& options = opts(o);
    shufsq::Certificate cert = options.exact_only
                                   ? shufsq::decide_shuffle_square(w->word, options.solver)
                                   : shufsq::decide_auto(w->word, options.solver);
    auto* r = new sq_result;
    r->word = w->word;
    r->kind = "decide";
    attach_certificate(r, cert);
    *out = r;
  });
}

sq_status sq_longest_twins(const sq_word* w, const sq_options* o, sq_result** out) {
  if (!w || !out) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const sq_options& options = opts(o);
    shufsq::DistanceReport report = shufsq::longest_twins(w->word, options.solver);
    if (!report.optimal && !options.exact_only) {
      // the explicit O(m,r) construction may beat the fallback bound
      shufsq::RunLengthWord rl = shufsq::runs(w->word);
      const auto& rs = rl.runs();
      bool omr_shape = !rs.empty() && rs[0].length % 2 == 1;
      for (size_t i = 1; omr_shape && i < rs.size(); ++i)
        omr_shape = rs[i].length == rs[i - 1].length - 2;
      if (omr_shape && rs[0].length >= 2 * static_cast<long long>(rs.size()) - 1) {
        shufsq::Twins tw =
            shufsq::build_omr_twins(rs[0].length, static_cast<long long>(rs.size()));
        if (static_cast<long long>(tw.length()) > report.f) {
          report.f = static_cast<long long>(tw.length());
          report.g = static_cast<long long>(w->word.size()) - 2 * report.f;
          report.witness = std::move(tw);
        }
      }
    }
    auto* r = new sq_result;
    r->word = w->word;
    r->kind = "gaps";
    r->verdict = report.g == 0 ? SQ_VERDICT_YES : (report.optimal ? SQ_VERDICT_NO : SQ_VERDICT_BUDGET);
    r->rule = "longest-twins";
    r->f = report.f;
    r->g = report.g;
    r->optimal = report.optimal;
    r->nodes = report.nodes_expanded;
    r->time_ms = report.time_ms;
    if (report.witness) {
      r->twins = report.witness;
      r->graph = shufsq::graph_from_twins(shufsq::canonicalize(*report.witness));
    }
    *out = r;
  });
}

sq_status sq_cutting_distance(const sq_word* w, const sq_options* o, sq_result** out) {
  if (!w || !out) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const sq_options& options = opts(o);
    auto found = shufsq::cutting_distance(w->word, options.max_cuts, options.solver);
    auto* r = new sq_result;
    r->word = w->word;
    r->kind = "cuts";
    r->rule = "cutting-distance";
    if (found) {
      r->verdict = SQ_VERDICT_YES;
      r->cuts = found->first;
      r->cut_positions = found->second.cut_positions;
      r->permutation = found->second.permutation;
      r->reassembled = found->second.reassembled.to_dense_string();
    } else {
      r->verdict = SQ_VERDICT_NO;
    }
    *out = r;
  });
}

sq_status sq_decide_reverse(const sq_word* w, const sq_options* o, sq_result** out) {
  if (!w || !out) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const sq_options& options = opts(o);
    bool yes = shufsq::decide_reverse_shuffle_square(w->word, options.solver);
    auto* r = new sq_result;
    r->word = w->word;
    r->kind = "reverse";
    r->rule = "reverse-brute-force";
    r->verdict = yes ? SQ_VERDICT_YES : SQ_VERDICT_NO;
    *out = r;
  });
}

sq_status sq_canonicalize(const sq_word* w, const long long* x_support, size_t x_len,
                          const long long* y_support, size_t y_len, sq_result** out) {
  if (!w || !out || (x_len > 0 && !x_support) || (y_len > 0 && !y_support)) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    shufsq::Twins tw;
    tw.word = w->word;
    for (size_t i = 0; i < x_len; ++i) tw.x_support.push_back(static_cast<int>(x_support[i] - 1));
    for (size_t i = 0; i < y_len; ++i) tw.y_support.push_back(static_cast<int>(y_support[i] - 1));
    if (auto rep = shufsq::validate(tw); !rep.ok)
      throw std::invalid_argument("invalid twins: " + rep.message);
    shufsq::Twins canonical = shufsq::canonicalize(tw);
    auto* r = new sq_result;
    r->word = w->word;
    r->kind = "canonicalize";
    r->rule = "canonicalize";
    r->verdict = SQ_VERDICT_YES;
    r->f = static_cast<long long>(canonical.length());
    r->twins = canonical;
    r->graph = shufsq::graph_from_twins(canonical);
    *out = r;
  });
}

sq_status sq_census(int n, const sq_options* o, long long* even_words, long long* shuffle_squares) {
  if (!even_words || !shuffle_squares) {
    g_last_error = "null argument";
    return SQ_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const sq_options& options = opts(o);
    shufsq::CensusRow row = shufsq::census(n, options.census_threads, options.solver);
    *even_words = row.even_words;
    *shuffle_squares = row.shuffle_squares;
  });
}

void sq_result_free(sq_result* r) { delete r; }

sq_verdict sq_result_verdict(const sq_result* r) { return r->verdict; }

sq_status sq_result_rule(const sq_result* r, char** out) {
  if (!r || !out) return SQ_ERR_INVALID_ARGUMENT;
  *out = dup_string(r->rule);
  return SQ_OK;
}

sq_status sq_result_reason(const sq_result* r, char** out) {
  if (!r || !out) return SQ_ERR_INVALID_ARGUMENT;
  *out = dup_string(r->reason);
  return SQ_OK;
}

long long sq_result_f(const sq_result* r) { return r->f; }

long long sq_result_g(const sq_result* r) { return r->g; }

int sq_result_optimal(const sq_result* r) { return r->optimal ? 1 : 0; }

long long sq_result_cuts(const sq_result* r) { return r->cuts; }

long long sq_result_nodes(const sq_result* r) { return r->nodes; }

double sq_result_time_ms(const sq_result* r) { return r->time_ms; }

sq_status sq_result_json(const sq_result* r, char** out) {
  if (!r || !out) return SQ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    json j;
    j["word"] = r->word.to_dense_string();
    j["kind"] = r->kind;
    j["verdict"] = r->verdict == SQ_VERDICT_YES ? "yes"
                   : r->verdict == SQ_VERDICT_NO ? "no"
                                                 : "budget";
    if (!r->rule.empty()) j["rule"] = r->rule;
    if (!r->reason.empty()) j["reason"] = r->reason;
    if (r->f >= 0) j["f"] = r->f;
    if (r->g >= 0) j["g"] = r->g;
    if (!r->optimal) j["optimal"] = false;
    if (r->cuts >= 0) {
      j["c"] = r->cuts;
      j["cut_positions"] = r->cut_positions;
      json perm = json::array();
      for (int p : r->permutation) perm.push_back(p + 1);
      j["permutation"] = perm;
      j["reassembled"] = r->reassembled;
    }
    if (r->graph) j["certificate"] = json::parse(shufsq::export_json(*r->graph));
    if (r->twins) {
      json tw;
      json x = json::array(), y = json::array();
      for (int i : r->twins->x_support) x.push_back(i + 1);
      for (int i : r->twins->y_support) y.push_back(i + 1);
      tw["x"] = x;
      tw["y"] = y;
      j["twins"] = tw;
    }
    j["nodes_expanded"] = r->nodes;
    j["time_ms"] = r->time_ms;
    *out = dup_string(j.dump());
  });
}

sq_status sq_result_twins_text(const sq_result* r, char** out) {
  if (!r || !out) return SQ_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(r->twins ? r->twins->to_string() : std::string()); });
}

sq_status sq_result_twins_pretty(const sq_result* r, int color, char** out) {
  if (!r || !out) return SQ_ERR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = dup_string(r->twins ? r->twins->pretty(color != 0) : std::string()); });
}

sq_status sq_result_graph_dot(const sq_result* r, char** out) {
  if (!r || !out) return SQ_ERR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = dup_string(r->graph ? shufsq::export_dot(*r->graph) : std::string()); });
}
