#include "solver.hpp"

#include <algorithm>
#include <chrono>
#include <list>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace shufsq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Budget: return "budget";
  }
  return "?";
}

std::string to_string(NoReason r) {
  switch (r) {
    case NoReason::OddLength: return "odd-length";
    case NoReason::NotEven: return "not-even";
    case NoReason::ExhaustedSearch: return "exhausted-search";
    case NoReason::TheoremAbba: return "theorem-abba";
    case NoReason::ClaimCl: return "claim-cl";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename V>
class LruMap {
 public:
  explicit LruMap(size_t capacity) : capacity_(std::max<size_t>(capacity, 16)) {}

  V* get(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second);
    return &it->second->second;
  }

  void put(std::string key, V value) {
    auto it = map_.find(key);
    if (it != map_.end()) {
      it->second->second = std::move(value);
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, std::move(value));
    map_.emplace(std::move(key), order_.begin());
    if (map_.size() > capacity_) {
      map_.erase(order_.back().first);
      order_.pop_back();
    }
  }

 private:
  size_t capacity_;
  std::list<std::pair<std::string, V>> order_;
  std::unordered_map<std::string, typename std::list<std::pair<std::string, V>>::iterator> map_;
};

struct OpenGroup {
  int left = 0;  // vertex that opened these edges
  uint8_t cls = 0;
  int count = 0;
};

struct Decision {
  std::vector<std::pair<int, int>> closes;  // (left vertex, count)
  int loops = 0;
  int opens = 0;
};

void append_u32(std::string& key, uint32_t v) {
  key.push_back(static_cast<char>(v & 0xff));
  key.push_back(static_cast<char>((v >> 8) & 0xff));
  key.push_back(static_cast<char>((v >> 16) & 0xff));
  key.push_back(static_cast<char>((v >> 24) & 0xff));
}

// canonical form: the left endpoints are irrelevant, only the order of
// the groups and their class/count matter
std::string encode_state(int v, const std::vector<OpenGroup>& state) {
  std::string key;
  key.reserve(4 + state.size() * 5);
  append_u32(key, static_cast<uint32_t>(v));
  for (const OpenGroup& g : state) {
    key.push_back(static_cast<char>(g.cls));
    append_u32(key, static_cast<uint32_t>(g.count));
  }
  return key;
}

OrderedMultigraph build_graph(const RunLengthWord& rl, const std::vector<Decision>& decisions) {
  std::vector<GraphVertex> vertices;
  vertices.reserve(rl.run_count());
  for (size_t h = 0; h < rl.run_count(); ++h)
    vertices.push_back(GraphVertex{rl[h].symbol, rl[h].length});
  std::vector<GraphEdge> edges;
  for (size_t v = 0; v < decisions.size(); ++v) {
    for (const auto& [left, count] : decisions[v].closes)
      edges.push_back(GraphEdge{left, static_cast<int>(v), count});
    if (decisions[v].loops > 0)
      edges.push_back(GraphEdge{static_cast<int>(v), static_cast<int>(v), decisions[v].loops});
  }
  return OrderedMultigraph(std::move(vertices), std::move(edges));
}

// Depth-first construction of nest-free multigraphs over the run vertices.
// Open edges are grouped by left endpoint in order; closings consume a
// prefix of the groups (same letter class), loops require everything older
// to be closed, new edges append a group at the back.
class GraphSearch {
 public:
  GraphSearch(const RunLengthWord& rl, const SolverOptions& options)
      : rl_(rl),
        options_(options),
        m_(static_cast<int>(rl.run_count())),
        k_(rl.alphabet_size()),
        failed_(options.memo_entries),
        values_(options.memo_entries) {
    future_caps_.assign(static_cast<size_t>(m_) + 1, std::vector<long long>(k_, 0));
    future_total_.assign(static_cast<size_t>(m_) + 1, 0);
    for (int v = m_ - 1; v >= 0; --v) {
      future_caps_[v] = future_caps_[v + 1];
      future_caps_[v][rl_[static_cast<size_t>(v)].symbol] += rl_[static_cast<size_t>(v)].length;
      future_total_[v] = future_total_[v + 1] + rl_[static_cast<size_t>(v)].length;
    }
    decisions_.resize(static_cast<size_t>(m_));
  }

  long long nodes() const { return nodes_; }

  std::optional<std::vector<Decision>> find_perfect() {
    std::vector<OpenGroup> state;
    if (dfs_exact(0, state)) return decisions_;
    return std::nullopt;
  }

  std::vector<std::vector<Decision>> enumerate_perfect(size_t limit) {
    std::vector<OpenGroup> state;
    all_limit_ = limit;
    enumerate(0, state);
    return all_;
  }

  long long best_total_degree() {
    std::vector<OpenGroup> state;
    return best(0, state);
  }

  std::vector<Decision> replay_best() {
    nodes_ = 0;
    std::vector<OpenGroup> state;
    replay(0, state);
    return decisions_;
  }

 private:
  void charge() {
    if (++nodes_ > options_.node_budget) throw budget_error("solver node budget exceeded");
  }

  struct Consumed {
    std::vector<std::pair<int, int>> closes;
    std::vector<OpenGroup> survivors;
  };

  static Consumed consume(const std::vector<OpenGroup>& state, int x) {
    Consumed out;
    int left = x;
    size_t i = 0;
    for (; i < state.size() && left > 0; ++i) {
      int take = std::min(state[i].count, left);
      out.closes.emplace_back(state[i].left, take);
      left -= take;
      if (take < state[i].count)
        out.survivors.push_back(OpenGroup{state[i].left, state[i].cls, state[i].count - take});
    }
    for (; i < state.size(); ++i) out.survivors.push_back(state[i]);
    return out;
  }

  // opens per class of `survivors`, excluding the current class slot
  bool others_feasible(int v_next, const std::vector<OpenGroup>& survivors, uint8_t cls,
                       bool exact, int* cls_open) const {
    std::vector<long long> counts(static_cast<size_t>(k_), 0);
    for (const OpenGroup& g : survivors) counts[g.cls] += g.count;
    *cls_open = static_cast<int>(counts[cls]);
    for (int c = 0; c < k_; ++c) {
      if (c == cls) continue;
      if (counts[static_cast<size_t>(c)] > future_caps_[static_cast<size_t>(v_next)][static_cast<size_t>(c)])
        return false;
      if (exact && ((future_caps_[static_cast<size_t>(v_next)][static_cast<size_t>(c)] -
                     counts[static_cast<size_t>(c)]) &
                    1))
        return false;
    }
    return true;
  }

  bool dfs_exact(int v, const std::vector<OpenGroup>& state) {
    charge();
    if (v == m_) return state.empty();
    std::string key = encode_state(v, state);
    if (failed_.get(key)) return false;
    const uint8_t cls = rl_[static_cast<size_t>(v)].symbol;
    const int cap = rl_[static_cast<size_t>(v)].length;
    int total_open = 0;
    for (const OpenGroup& g : state) total_open += g.count;
    int maxclose = 0;
    for (const OpenGroup& g : state) {
      if (g.cls != cls) break;
      maxclose += g.count;
    }
    maxclose = std::min(maxclose, cap);
    for (int x = maxclose; x >= 0; --x) {
      Consumed c = consume(state, x);
      int cls_open = 0;
      if (!others_feasible(v + 1, c.survivors, cls, /*exact=*/true, &cls_open)) continue;
      const long long cls_future = future_caps_[static_cast<size_t>(v) + 1][cls];
      const int rem = cap - x;
      const bool all_closed = x == total_open;
      const int lmax = all_closed ? rem / 2 : 0;
      for (int l = lmax; l >= 0; --l) {
        const int y = rem - 2 * l;
        if (cls_open + y > cls_future) continue;
        if ((cls_future - cls_open - y) & 1) continue;
        std::vector<OpenGroup> next = c.survivors;
        if (y > 0) next.push_back(OpenGroup{v, cls, y});
        decisions_[static_cast<size_t>(v)] = Decision{c.closes, l, y};
        if (dfs_exact(v + 1, next)) return true;
      }
    }
    failed_.put(std::move(key), 1);
    return false;
  }

  void enumerate(int v, const std::vector<OpenGroup>& state) {
    if (all_.size() >= all_limit_) return;
    charge();
    if (v == m_) {
      if (state.empty()) all_.push_back(decisions_);
      return;
    }
    std::string key = encode_state(v, state);
    if (failed_.get(key)) return;
    const size_t found_before = all_.size();
    const uint8_t cls = rl_[static_cast<size_t>(v)].symbol;
    const int cap = rl_[static_cast<size_t>(v)].length;
    int total_open = 0;
    for (const OpenGroup& g : state) total_open += g.count;
    int maxclose = 0;
    for (const OpenGroup& g : state) {
      if (g.cls != cls) break;
      maxclose += g.count;
    }
    maxclose = std::min(maxclose, cap);
    for (int x = maxclose; x >= 0; --x) {
      Consumed c = consume(state, x);
      int cls_open = 0;
      if (!others_feasible(v + 1, c.survivors, cls, /*exact=*/true, &cls_open)) continue;
      const long long cls_future = future_caps_[static_cast<size_t>(v) + 1][cls];
      const int rem = cap - x;
      const bool all_closed = x == total_open;
      const int lmax = all_closed ? rem / 2 : 0;
      for (int l = lmax; l >= 0; --l) {
        const int y = rem - 2 * l;
        if (cls_open + y > cls_future) continue;
        if ((cls_future - cls_open - y) & 1) continue;
        std::vector<OpenGroup> next = c.survivors;
        if (y > 0) next.push_back(OpenGroup{v, cls, y});
        decisions_[static_cast<size_t>(v)] = Decision{c.closes, l, y};
        enumerate(v + 1, next);
        if (all_.size() >= all_limit_) return;
      }
    }
    if (all_.size() == found_before) failed_.put(std::move(key), 1);
  }

  // Maximum extra degree achievable from vertex v onward; -1 if the open
  // edges cannot all be closed.
  long long best(int v, const std::vector<OpenGroup>& state) {
    charge();
    if (v == m_) return state.empty() ? 0 : -1;
    std::string key = encode_state(v, state);
    if (long long* hit = values_.get(key)) return *hit;
    const uint8_t cls = rl_[static_cast<size_t>(v)].symbol;
    const int cap = rl_[static_cast<size_t>(v)].length;
    const long long upper = future_total_[static_cast<size_t>(v)];
    int total_open = 0;
    for (const OpenGroup& g : state) total_open += g.count;
    int maxclose = 0;
    for (const OpenGroup& g : state) {
      if (g.cls != cls) break;
      maxclose += g.count;
    }
    maxclose = std::min(maxclose, cap);
    long long best_value = -1;
    for (int x = maxclose; x >= 0 && best_value < upper; --x) {
      Consumed c = consume(state, x);
      int cls_open = 0;
      if (!others_feasible(v + 1, c.survivors, cls, /*exact=*/false, &cls_open)) continue;
      const long long cls_future = future_caps_[static_cast<size_t>(v) + 1][cls];
      const int rem = cap - x;
      const bool all_closed = x == total_open;
      const int lmax = all_closed ? rem / 2 : 0;
      for (int l = lmax; l >= 0 && best_value < upper; --l) {
        const int ymax = static_cast<int>(
            std::min<long long>(rem - 2 * l, cls_future - cls_open));
        for (int y = ymax; y >= 0 && best_value < upper; --y) {
          std::vector<OpenGroup> next = c.survivors;
          if (y > 0) next.push_back(OpenGroup{v, cls, y});
          long long sub = best(v + 1, next);
          if (sub >= 0) best_value = std::max(best_value, x + 2LL * l + y + sub);
        }
      }
    }
    values_.put(std::move(key), best_value);
    return best_value;
  }

  void replay(int v, const std::vector<OpenGroup>& state) {
    if (v == m_) return;
    const long long target = best(v, state);
    const uint8_t cls = rl_[static_cast<size_t>(v)].symbol;
    const int cap = rl_[static_cast<size_t>(v)].length;
    int total_open = 0;
    for (const OpenGroup& g : state) total_open += g.count;
    int maxclose = 0;
    for (const OpenGroup& g : state) {
      if (g.cls != cls) break;
      maxclose += g.count;
    }
    maxclose = std::min(maxclose, cap);
    for (int x = maxclose; x >= 0; --x) {
      Consumed c = consume(state, x);
      int cls_open = 0;
      if (!others_feasible(v + 1, c.survivors, cls, /*exact=*/false, &cls_open)) continue;
      const long long cls_future = future_caps_[static_cast<size_t>(v) + 1][cls];
      const int rem = cap - x;
      const bool all_closed = x == total_open;
      const int lmax = all_closed ? rem / 2 : 0;
      for (int l = lmax; l >= 0; --l) {
        const int ymax = static_cast<int>(
            std::min<long long>(rem - 2 * l, cls_future - cls_open));
        for (int y = ymax; y >= 0; --y) {
          std::vector<OpenGroup> next = c.survivors;
          if (y > 0) next.push_back(OpenGroup{v, cls, y});
          long long sub = best(v + 1, next);
          if (sub >= 0 && x + 2LL * l + y + sub == target) {
            decisions_[static_cast<size_t>(v)] = Decision{c.closes, l, y};
            replay(v + 1, next);
            return;
          }
        }
      }
    }
    throw std::logic_error("witness reconstruction failed");
  }

  const RunLengthWord& rl_;
  SolverOptions options_;
  int m_;
  int k_;
  std::vector<std::vector<long long>> future_caps_;  // per vertex, per class, suffix sums
  std::vector<long long> future_total_;
  std::vector<Decision> decisions_;
  std::vector<std::vector<Decision>> all_;
  size_t all_limit_ = 0;
  long long nodes_ = 0;
  LruMap<char> failed_;
  LruMap<long long> values_;
};

}  // namespace

Certificate decide_shuffle_square(const Word& word, const SolverOptions& options) {
  auto start = Clock::now();
  Certificate cert;
  if (word.size() % 2 != 0) {
    cert.verdict = Verdict::No;
    cert.reason = NoReason::OddLength;
    cert.time_ms = elapsed_ms(start);
    return cert;
  }
  if (!is_even(word)) {
    cert.verdict = Verdict::No;
    cert.reason = NoReason::NotEven;
    cert.time_ms = elapsed_ms(start);
    return cert;
  }
  RunLengthWord rl = runs(word);
  GraphSearch search(rl, options);
  try {
    if (auto decisions = search.find_perfect()) {
      cert.verdict = Verdict::Yes;
      cert.witness = build_graph(rl, *decisions);
    } else {
      cert.verdict = Verdict::No;
      cert.reason = NoReason::ExhaustedSearch;
    }
  } catch (const budget_error&) {
    cert.verdict = Verdict::Budget;
  }
  cert.nodes_expanded = search.nodes();
  cert.time_ms = elapsed_ms(start);
  return cert;
}

std::vector<OrderedMultigraph> decide_all(const Word& word, size_t limit,
                                          const SolverOptions& options) {
  if (word.size() % 2 != 0 || !is_even(word)) return {};
  RunLengthWord rl = runs(word);
  GraphSearch search(rl, options);
  std::vector<OrderedMultigraph> out;
  for (const auto& decisions : search.enumerate_perfect(limit))
    out.push_back(build_graph(rl, decisions));
  return out;
}

namespace {

constexpr int kPackedMaxLen = 29;

bool oracle_packed(const Word& word, bool* accepted) {
  if (word.alphabet_size() > 4 || word.size() > kPackedMaxLen) return false;
  std::unordered_set<uint64_t> states{0};
  std::unordered_set<uint64_t> next;
  for (uint8_t c : word.symbols()) {
    next.clear();
    next.reserve(states.size() * 2);
    for (uint64_t s : states) {
      uint64_t len = s >> 58;
      uint64_t bits = s & ((1ULL << 58) - 1);
      next.insert(((len + 1) << 58) | bits | (static_cast<uint64_t>(c) << (2 * len)));
      if (len > 0 && (bits & 3) == c) next.insert(((len - 1) << 58) | (bits >> 2));
    }
    states.swap(next);
  }
  *accepted = states.count(0) > 0;
  return true;
}

bool oracle_strings(const Word& word) {
  std::unordered_set<std::string> states{""};
  std::unordered_set<std::string> next;
  for (uint8_t c : word.symbols()) {
    next.clear();
    next.reserve(states.size() * 2);
    for (const std::string& s : states) {
      next.insert(s + static_cast<char>(c));
      if (!s.empty() && static_cast<uint8_t>(s[0]) == c) next.insert(s.substr(1));
    }
    states.swap(next);
  }
  return states.count("") > 0;
}

}  // namespace

bool oracle_shuffle_square(const Word& word, const SolverOptions& options) {
  if (static_cast<long long>(word.size()) > options.oracle_max_length)
    throw budget_error("word exceeds the oracle length budget");
  bool accepted = false;
  if (oracle_packed(word, &accepted)) return accepted;
  return oracle_strings(word);
}

long long oracle_longest_twins(const Word& word, const SolverOptions& options) {
  if (static_cast<long long>(word.size()) > options.twins_oracle_max_length)
    throw budget_error("word exceeds the twins oracle length budget");
  if (word.alphabet_size() <= 4 && word.size() <= kPackedMaxLen) {
    std::unordered_map<uint64_t, int> states{{0, 0}};
    std::unordered_map<uint64_t, int> next;
    auto bump = [](std::unordered_map<uint64_t, int>& m, uint64_t k, int v) {
      auto [it, inserted] = m.emplace(k, v);
      if (!inserted && it->second < v) it->second = v;
    };
    for (uint8_t c : word.symbols()) {
      next.clear();
      next.reserve(states.size() * 2);
      for (const auto& [s, pairs] : states) {
        bump(next, s, pairs);  // skip: the letter becomes a gap
        uint64_t len = s >> 58;
        uint64_t bits = s & ((1ULL << 58) - 1);
        bump(next, ((len + 1) << 58) | bits | (static_cast<uint64_t>(c) << (2 * len)), pairs);
        if (len > 0 && (bits & 3) == c) bump(next, ((len - 1) << 58) | (bits >> 2), pairs + 1);
      }
      states.swap(next);
    }
    return states.at(0);
  }
  std::unordered_map<std::string, int> states{{"", 0}};
  std::unordered_map<std::string, int> next;
  auto bump = [](std::unordered_map<std::string, int>& m, const std::string& k, int v) {
    auto [it, inserted] = m.emplace(k, v);
    if (!inserted && it->second < v) it->second = v;
  };
  for (uint8_t c : word.symbols()) {
    next.clear();
    for (const auto& [s, pairs] : states) {
      bump(next, s, pairs);
      bump(next, s + static_cast<char>(c), pairs);
      if (!s.empty() && static_cast<uint8_t>(s[0]) == c) bump(next, s.substr(1), pairs + 1);
    }
    states.swap(next);
  }
  return states.at("");
}

DistanceReport longest_twins(const Word& word, const SolverOptions& options) {
  auto start = Clock::now();
  DistanceReport report;
  RunLengthWord rl = runs(word);
  if (rl.run_count() == 0) {
    report.witness = Twins{word, {}, {}};
    report.time_ms = elapsed_ms(start);
    return report;
  }
  GraphSearch search(rl, options);
  long long dp_nodes = 0;
  try {
    long long total = search.best_total_degree();
    dp_nodes = search.nodes();
    auto decisions = search.replay_best();
    OrderedMultigraph g = build_graph(rl, decisions);
    report.f = total / 2;
    report.g = static_cast<long long>(word.size()) - total;
    report.witness = twins_from_graph(g, rl);
    report.optimal = true;
  } catch (const budget_error&) {
    // Fall back on loops only: within every run pair off letters, a valid
    // (generally suboptimal) pair of twins.
    std::vector<GraphVertex> vs;
    std::vector<GraphEdge> es;
    long long total = 0;
    for (size_t h = 0; h < rl.run_count(); ++h) {
      vs.push_back(GraphVertex{rl[h].symbol, rl[h].length});
      if (rl[h].length >= 2) {
        es.push_back(GraphEdge{static_cast<int>(h), static_cast<int>(h), rl[h].length / 2});
        total += 2LL * (rl[h].length / 2);
      }
    }
    OrderedMultigraph g(std::move(vs), std::move(es));
    report.f = total / 2;
    report.g = static_cast<long long>(word.size()) - total;
    report.witness = twins_from_graph(g, rl);
    report.optimal = false;
  }
  report.nodes_expanded = dp_nodes + search.nodes();
  report.time_ms = elapsed_ms(start);
  return report;
}

bool decide_reverse_shuffle_square(const Word& word, const SolverOptions& options) {
  if (static_cast<long long>(word.size()) > options.reverse_max_length)
    throw budget_error("word exceeds the reverse-shuffle length budget");
  const size_t n = word.size();
  if (n % 2 != 0) return false;
  if (n == 0) return true;
  const size_t h = n / 2;
  // word[S] = reverse(word[~S]) splits into A_left == rev(B_right) and
  // A_right == rev(B_left) at the midpoint, one hash set per half.
  std::unordered_set<std::string> lefts;
  for (uint64_t mask = 0; mask < (1ULL << h); ++mask) {
    std::string a, b;
    for (size_t i = 0; i < h; ++i) {
      char c = static_cast<char>('0' + word[i]);
      if (mask & (1ULL << i))
        a.push_back(c);
      else
        b.push_back(c);
    }
    std::reverse(b.begin(), b.end());
    lefts.insert(a + "#" + b);
  }
  for (uint64_t mask = 0; mask < (1ULL << (n - h)); ++mask) {
    std::string a, b;
    for (size_t i = h; i < n; ++i) {
      char c = static_cast<char>('0' + word[i]);
      if (mask & (1ULL << (i - h)))
        a.push_back(c);
      else
        b.push_back(c);
    }
    std::reverse(b.begin(), b.end());
    if (lefts.count(b + "#" + a)) return true;
  }
  return false;
}

std::optional<std::pair<int, CutWitness>> cutting_distance(const Word& word, int max_cuts,
                                                           const SolverOptions& options) {
  if (!is_even(word)) throw std::invalid_argument("cutting_distance requires an even word");
  if (max_cuts < 0) throw std::invalid_argument("max_cuts must be nonnegative");
  if (decide_shuffle_square(word, options).yes())
    return std::make_pair(0, CutWitness{{}, {0}, word});
  const int n = static_cast<int>(word.size());
  std::unordered_set<std::string> seen;
  for (int c = 1; c <= max_cuts; ++c) {
    if (c >= n) break;
    std::vector<int> cuts(static_cast<size_t>(c));
    for (int i = 0; i < c; ++i) cuts[static_cast<size_t>(i)] = i + 1;
    for (;;) {
      std::vector<std::pair<int, int>> blocks;  // [from, to)
      int prev = 0;
      for (int cut : cuts) {
        blocks.emplace_back(prev, cut);
        prev = cut;
      }
      blocks.emplace_back(prev, n);
      std::vector<int> perm(blocks.size());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      do {
        if (std::is_sorted(perm.begin(), perm.end())) continue;  // uncut word, already rejected
        std::vector<uint8_t> symbols;
        symbols.reserve(static_cast<size_t>(n));
        for (int b : perm)
          symbols.insert(symbols.end(),
                         word.symbols().begin() + blocks[static_cast<size_t>(b)].first,
                         word.symbols().begin() + blocks[static_cast<size_t>(b)].second);
        Word candidate(std::move(symbols), word.alphabet_size());
        if (!seen.insert(candidate.to_dense_string()).second) continue;
        if (decide_shuffle_square(candidate, options).yes())
          return std::make_pair(c, CutWitness{cuts, perm, candidate});
      } while (std::next_permutation(perm.begin(), perm.end()));
      // next combination of cut positions, lexicographically
      int i = c - 1;
      while (i >= 0 && cuts[static_cast<size_t>(i)] == n - c + i) --i;
      if (i < 0) break;
      ++cuts[static_cast<size_t>(i)];
      for (int j = i + 1; j < c; ++j)
        cuts[static_cast<size_t>(j)] = cuts[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

CensusRow census(int n, int threads, const SolverOptions& options) {
  if (n < 0) throw std::invalid_argument("census requires n >= 0");
  if (2LL * n > options.census_max_length)
    throw budget_error("census length 2n exceeds the exhaustive budget");
  if (threads < 1) throw std::invalid_argument("census requires at least one thread");
  const int len = 2 * n;
  const uint64_t total = 1ULL << len;
  std::vector<long long> even_counts(static_cast<size_t>(threads), 0);
  std::vector<long long> square_counts(static_cast<size_t>(threads), 0);
  auto work = [&](int t) {
    const uint64_t lo = total * static_cast<uint64_t>(t) / static_cast<uint64_t>(threads);
    const uint64_t hi = total * static_cast<uint64_t>(t + 1) / static_cast<uint64_t>(threads);
    SolverOptions local = options;
    for (uint64_t mask = lo; mask < hi; ++mask) {
      if (__builtin_popcountll(mask) % 2 != 0) continue;
      ++even_counts[static_cast<size_t>(t)];
      std::vector<uint8_t> symbols(static_cast<size_t>(len));
      for (int i = 0; i < len; ++i)
        symbols[static_cast<size_t>(i)] = static_cast<uint8_t>((mask >> i) & 1);
      if (oracle_shuffle_square(Word(std::move(symbols), 2), local))
        ++square_counts[static_cast<size_t>(t)];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  CensusRow row;
  row.n = n;
  for (int t = 0; t < threads; ++t) {
    row.even_words += even_counts[static_cast<size_t>(t)];
    row.shuffle_squares += square_counts[static_cast<size_t>(t)];
  }
  return row;
}

}  // namespace shufsq
