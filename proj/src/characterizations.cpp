#include "characterizations.hpp"

#include <algorithm>
#include <unordered_set>

namespace shufsq {

namespace {

bool at_most_two_symbols(const RunLengthWord& rl) {
  int seen = -1, seen2 = -1;
  for (const Run& r : rl.runs()) {
    if (r.symbol == seen || r.symbol == seen2) continue;
    if (seen < 0)
      seen = r.symbol;
    else if (seen2 < 0)
      seen2 = r.symbol;
    else
      return false;
  }
  return true;
}

void require_binary(const RunLengthWord& rl, const char* who) {
  if (!at_most_two_symbols(rl))
    throw std::invalid_argument(std::string(who) + " requires a binary word");
}

std::vector<long long> run_lengths(const RunLengthWord& rl) {
  std::vector<long long> out;
  out.reserve(rl.run_count());
  for (const Run& r : rl.runs()) out.push_back(r.length);
  return out;
}

// Lengths of the runs owned by the letter of run 0 (slot 0) and by the
// other letter (slot 1); binary words alternate strictly.
std::array<std::vector<long long>, 2> split_by_letter(const RunLengthWord& rl) {
  std::array<std::vector<long long>, 2> out;
  for (size_t h = 0; h < rl.run_count(); ++h) out[h % 2].push_back(rl[h].length);
  return out;
}

OrderedMultigraph loops_graph(const RunLengthWord& rl) {
  std::vector<GraphVertex> vs;
  std::vector<GraphEdge> es;
  for (size_t h = 0; h < rl.run_count(); ++h) {
    vs.push_back(GraphVertex{rl[h].symbol, rl[h].length});
    if (rl[h].length >= 2)
      es.push_back(GraphEdge{static_cast<int>(h), static_cast<int>(h), rl[h].length / 2});
  }
  return OrderedMultigraph(std::move(vs), std::move(es));
}

std::vector<GraphVertex> vertices_of(const RunLengthWord& rl) {
  std::vector<GraphVertex> vs;
  vs.reserve(rl.run_count());
  for (size_t h = 0; h < rl.run_count(); ++h) vs.push_back(GraphVertex{rl[h].symbol, rl[h].length});
  return vs;
}

void push_edge(std::vector<GraphEdge>& es, long long p, long long q, long long mu) {
  if (mu > 0)
    es.push_back(GraphEdge{static_cast<int>(std::min(p, q)), static_cast<int>(std::max(p, q)),
                           static_cast<int>(mu)});
}

}  // namespace

bool is_dull(const RunLengthWord& word) {
  for (const Run& r : word.runs())
    if (r.length % 2 != 0) return false;
  return true;
}

FewRunsVerdict classify_few_runs(const RunLengthWord& word) {
  require_binary(word, "classify_few_runs");
  const size_t m = word.run_count();
  if (m < 1 || m > 5) throw std::invalid_argument("classify_few_runs requires 1 to 5 runs");
  if (!is_even(word.to_word()))
    throw std::invalid_argument("classify_few_runs requires an even word");
  auto len = run_lengths(word);
  if (is_dull(word)) return FewRunsVerdict{true, "dull", loops_graph(word)};
  if (m <= 3) return FewRunsVerdict{false, "three-runs", std::nullopt};
  if (m == 4) {
    const long long a = len[0], b = len[1], c = len[2], d = len[3];
    if (a >= c && b <= d) {
      std::vector<GraphEdge> es;
      push_edge(es, 0, 2, c);
      push_edge(es, 0, 0, (a - c) / 2);
      push_edge(es, 1, 3, b);
      push_edge(es, 3, 3, (d - b) / 2);
      return FewRunsVerdict{true, "prop-abcd", OrderedMultigraph(vertices_of(word), es)};
    }
    return FewRunsVerdict{false, "prop-abcd", std::nullopt};
  }
  const long long a = len[0], b = len[1], c = len[2], d = len[3], e = len[4];
  if (b == d) {
    // case (i): split c = c1 + c2 with c1 <= a, c2 <= e and even leftovers
    const long long lo = std::max<long long>(0, c - e), hi = std::min(a, c);
    for (long long c1 = lo; c1 <= hi; ++c1) {
      if ((a - c1) % 2 != 0) continue;
      const long long c2 = c - c1;
      if ((e - c2) % 2 != 0) continue;
      std::vector<GraphEdge> es;
      push_edge(es, 0, 2, c1);
      push_edge(es, 2, 4, c2);
      push_edge(es, 1, 3, b);
      push_edge(es, 0, 0, (a - c1) / 2);
      push_edge(es, 4, 4, (e - c2) / 2);
      return FewRunsVerdict{true, "prop-abcde", OrderedMultigraph(vertices_of(word), es)};
    }
  }
  if (b <= d && a >= c && e % 2 == 0) {
    std::vector<GraphEdge> es;
    push_edge(es, 0, 2, c);
    push_edge(es, 1, 3, b);
    push_edge(es, 0, 0, (a - c) / 2);
    push_edge(es, 3, 3, (d - b) / 2);
    push_edge(es, 4, 4, e / 2);
    return FewRunsVerdict{true, "prop-abcde", OrderedMultigraph(vertices_of(word), es)};
  }
  if (b >= d && c <= e && a % 2 == 0) {
    std::vector<GraphEdge> es;
    push_edge(es, 2, 4, c);
    push_edge(es, 1, 3, d);
    push_edge(es, 0, 0, a / 2);
    push_edge(es, 1, 1, (b - d) / 2);
    push_edge(es, 4, 4, (e - c) / 2);
    return FewRunsVerdict{true, "prop-abcde", OrderedMultigraph(vertices_of(word), es)};
  }
  return FewRunsVerdict{false, "prop-abcde", std::nullopt};
}

namespace {

// slot (0 or 1) whose runs can play the separated ones; -1 when neither
int ones_slot_1and2(const std::array<std::vector<long long>, 2>& by_letter) {
  for (int s = 0; s < 2; ++s) {
    const auto& ones = by_letter[static_cast<size_t>(s)];
    const auto& zeros = by_letter[static_cast<size_t>(1 - s)];
    bool ok = std::all_of(ones.begin(), ones.end(), [](long long l) { return l == 1; }) &&
              std::all_of(zeros.begin(), zeros.end(), [](long long l) { return l <= 2; });
    if (ok) return s;
  }
  return -1;
}

}  // namespace

bool classify_1and2(const RunLengthWord& word) {
  require_binary(word, "classify_1and2");
  if (!is_even(word.to_word())) throw std::invalid_argument("classify_1and2 requires an even word");
  auto by_letter = split_by_letter(word);
  int slot = ones_slot_1and2(by_letter);
  if (slot < 0)
    throw std::invalid_argument(
        "classify_1and2 requires all runs of one letter of length 1 and of the other at most 2");
  auto len = run_lengths(word);
  bool is_1001 = word.run_count() == 3 && len[0] == 1 && len[1] == 2 && len[2] == 1 && slot == 0;
  return !is_1001;
}

Word SeparatedOnesInstance::to_word() const { return separated_ones(a); }

void SeparatedOnesInstance::validate() const {
  if (a.size() < 5 || a.size() % 2 == 0)
    throw std::invalid_argument("separated-ones instance requires a_0..a_{2m} with m >= 2");
  long long sum = 0;
  for (long long v : a) {
    if (v < 0) throw std::invalid_argument("separated-ones instance requires a_i >= 0");
    sum += v;
  }
  if (sum % 2 != 0) throw std::invalid_argument("separated-ones instance must be an even word");
}

namespace {

// Builds the perfect twins of a right-degree solution: ones alternate
// between the twins pairwise, the i-th zero block contributes its first
// r_i zeros to X and the rest to Y.
Twins separated_ones_twins(const SeparatedOnesInstance& inst, const std::vector<long long>& r) {
  Twins tw;
  tw.word = inst.to_word();
  int pos = 0;
  for (size_t i = 0; i < inst.a.size(); ++i) {
    if (i > 0) {
      // the (i-1)-th one, 0-based
      if ((i - 1) % 2 == 0)
        tw.x_support.push_back(pos);
      else
        tw.y_support.push_back(pos);
      ++pos;
    }
    for (long long z = 0; z < inst.a[i]; ++z) {
      if (z < r[i])
        tw.x_support.push_back(pos);
      else
        tw.y_support.push_back(pos);
      ++pos;
    }
  }
  std::sort(tw.x_support.begin(), tw.x_support.end());
  std::sort(tw.y_support.begin(), tw.y_support.end());
  return tw;
}

// Scans the free odd-indexed right degrees; calls sink(r) for every
// solution, stopping when sink returns false. Returns false if the work
// limit was hit.
template <typename Sink>
bool scan_separated_ones(const SeparatedOnesInstance& inst, long long work_limit, Sink&& sink) {
  const long long m = inst.m();
  const auto& a = inst.a;
  std::vector<long long> r(a.size(), 0);
  long long work = 0;
  // choose r_1, r_3, ..., r_{2m-1}; even-indexed values follow
  auto rec = [&](auto&& self, long long i) -> bool {  // i = odd index
    if (work_limit > 0 && ++work > work_limit) return false;
    if (i > 2 * m - 1) {
      if ((a[static_cast<size_t>(2 * m)] - r[static_cast<size_t>(2 * m - 1)]) % 2 != 0) return true;
      long long r2m = (a[static_cast<size_t>(2 * m)] - r[static_cast<size_t>(2 * m - 1)]) / 2;
      if (r2m < 0 || r2m > a[static_cast<size_t>(2 * m)]) return true;
      r[static_cast<size_t>(2 * m)] = r2m;
      return sink(r);
    }
    for (long long v = 0; v <= a[static_cast<size_t>(i)]; ++v) {
      r[static_cast<size_t>(i)] = v;
      long long derived;
      if (i == 1) {
        if ((a[0] + a[1] - v) % 2 != 0) continue;
        derived = (a[0] + a[1] - v) / 2;
        if (derived < 0 || derived > a[0]) continue;
        r[0] = derived;
      } else {
        long long num = a[static_cast<size_t>(i - 1)] + a[static_cast<size_t>(i)] -
                        r[static_cast<size_t>(i - 2)] - v;
        if (num % 2 != 0 || num < 0) continue;
        derived = num / 2;
        if (derived > a[static_cast<size_t>(i - 1)]) continue;
        r[static_cast<size_t>(i - 1)] = derived;
      }
      if (!self(self, i + 2)) return false;
    }
    return true;
  };
  return rec(rec, 1);
}

}  // namespace

std::vector<SeparatedOnesSolution> solve_separated_ones(const SeparatedOnesInstance& inst) {
  inst.validate();
  std::vector<SeparatedOnesSolution> out;
  scan_separated_ones(inst, 0, [&](const std::vector<long long>& r) {
    SeparatedOnesSolution sol;
    sol.r = r;
    sol.twins = separated_ones_twins(inst, r);
    if (auto rep = validate(sol.twins); !rep.ok)
      throw std::logic_error("separated-ones solution decoded to invalid twins: " + rep.message);
    out.push_back(std::move(sol));
    return true;
  });
  return out;
}

std::optional<SeparatedOnesSolution> first_separated_ones_solution(
    const SeparatedOnesInstance& inst, long long work_limit) {
  inst.validate();
  std::optional<SeparatedOnesSolution> out;
  scan_separated_ones(inst, work_limit, [&](const std::vector<long long>& r) {
    SeparatedOnesSolution sol;
    sol.r = r;
    sol.twins = separated_ones_twins(inst, r);
    if (auto rep = validate(sol.twins); !rep.ok)
      throw std::logic_error("separated-ones solution decoded to invalid twins: " + rep.message);
    out = std::move(sol);
    return false;
  });
  return out;
}

bool check_2cond(long long a1, long long a2, long long a3, long long a4) {
  if (a1 < 0 || a3 < 0 || a4 < 0) throw std::invalid_argument("check_2cond requires a_i >= 0");
  if (a2 < 1) throw std::invalid_argument("check_2cond requires a_2 >= 1");
  if ((a1 + a2 + a3 + a4) % 2 != 0)
    throw std::invalid_argument("check_2cond requires an even word");
  return a3 + a2 - a1 >= 0 && a4 >= a3 - a2 - a1;
}

RotationResult rotate_to_square_m2(long long a1, long long a2, long long a3, long long a4) {
  std::array<long long, 4> a{a1, a2, a3, a4};
  for (long long v : a)
    if (v < 1) throw std::invalid_argument("rotate_to_square_m2 requires a_i >= 1");
  if ((a1 + a2 + a3 + a4) % 2 != 0)
    throw std::invalid_argument("rotate_to_square_m2 requires an even word");
  int largest = 0, smallest = 0;
  for (int i = 1; i < 4; ++i) {
    if (a[static_cast<size_t>(i)] > a[static_cast<size_t>(largest)]) largest = i;
    if (a[static_cast<size_t>(i)] < a[static_cast<size_t>(smallest)]) smallest = i;
  }
  int start;
  if (((smallest - largest) & 3) == 2) {
    // smallest sits opposite the largest; use the second smallest corner
    int second = -1;
    for (int i = 0; i < 4; ++i) {
      if (i == smallest) continue;
      if (second < 0 || a[static_cast<size_t>(i)] < a[static_cast<size_t>(second)]) second = i;
    }
    start = second;
  } else {
    start = smallest;
  }
  RotationResult out;
  out.start = start;
  for (int i = 0; i < 4; ++i) out.rotated[static_cast<size_t>(i)] = a[static_cast<size_t>((start + i) & 3)];
  return out;
}

bool theorem_abba_applies(const RunLengthWord& word) {
  require_binary(word, "theorem_abba_applies");
  const size_t m = word.run_count();
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("theorem_abba_applies requires runs 1^a 0^b ... 0^b 1^a");
  auto len = run_lengths(word);
  const size_t n = m / 2;  // number of 0-runs
  if (n > 40) throw budget_error("theorem_abba_applies supports at most 40 inner runs");
  // condition (1)
  if (len[0] % 2 == 0 || len[m - 1] % 2 == 0) return false;
  for (size_t i = 2; i + 1 < m; i += 2)
    if (len[i] % 2 != 0) return false;
  // condition (2): no equal-sum split of the 0-run lengths
  std::vector<long long> b;
  for (size_t i = 1; i < m; i += 2) b.push_back(len[i]);
  long long total = 0;
  for (long long v : b) total += v;
  if (total % 2 != 0) return true;
  const long long target = total / 2;
  const size_t half = b.size() / 2;
  std::unordered_set<long long> left;
  for (uint64_t mask = 0; mask < (1ULL << half); ++mask) {
    long long s = 0;
    for (size_t i = 0; i < half; ++i)
      if (mask & (1ULL << i)) s += b[i];
    left.insert(s);
  }
  const size_t rest = b.size() - half;
  for (uint64_t mask = 0; mask < (1ULL << rest); ++mask) {
    long long s = 0;
    for (size_t i = 0; i < rest; ++i)
      if (mask & (1ULL << i)) s += b[half + i];
    if (left.count(target - s)) return false;
  }
  return true;
}

bool claim_cl_applies(const RunLengthWord& word) {
  require_binary(word, "claim_cl_applies");
  if (word.run_count() == 0) return false;
  auto len = run_lengths(word);
  if (len[0] % 2 == 0) return false;
  for (size_t i = 2; i < len.size(); ++i)
    if (len[i - 1] <= len[i]) return false;
  return true;
}

namespace {

// bottom slot (letter parity) whose runs all have length exactly two while
// the other letter's runs have length at most two; -1 if neither
int bottom_slot_ths1(const RunLengthWord& rl) {
  auto by_letter = split_by_letter(rl);
  for (int s = 1; s >= 0; --s) {  // prefer the second letter as bottom
    const auto& bottom = by_letter[static_cast<size_t>(s)];
    const auto& top = by_letter[static_cast<size_t>(1 - s)];
    bool ok = std::all_of(bottom.begin(), bottom.end(), [](long long l) { return l == 2; }) &&
              std::all_of(top.begin(), top.end(), [](long long l) { return l <= 2; });
    if (ok) return s;
  }
  return -1;
}

}  // namespace

std::optional<OrderedMultigraph> build_ths1_certificate(const RunLengthWord& word) {
  require_binary(word, "build_ths1_certificate");
  if (!is_even(word.to_word()))
    throw std::invalid_argument("build_ths1_certificate requires an even word");
  const int m = static_cast<int>(word.run_count());
  if (m == 0) return OrderedMultigraph({}, {});
  int bottom_slot = bottom_slot_ths1(word);
  if (bottom_slot < 0)
    throw std::invalid_argument(
        "build_ths1_certificate requires 0-runs of length 2 and 1-runs of length at most 2");
  auto len = run_lengths(word);
  // (1001)^n for odd n: runs 1,2,2,...,2,1
  if (m >= 3 && m % 2 == 1 && len[0] == 1 && len[static_cast<size_t>(m - 1)] == 1) {
    bool inner_two = true;
    for (int i = 1; i + 1 < m; ++i) inner_two = inner_two && len[static_cast<size_t>(i)] == 2;
    if (inner_two && ((m - 1) / 2) % 2 == 1) return std::nullopt;
  }

  std::vector<GraphEdge> es;
  std::vector<int> singles;
  std::vector<bool> on_path(static_cast<size_t>(m), false);
  for (int v = bottom_slot == 0 ? 1 : 0; v < m; v += 2)
    if (len[static_cast<size_t>(v)] == 1) singles.push_back(v);
  // evenness of the word makes the number of singles even
  std::vector<std::pair<int, int>> paths;
  for (size_t i = 0; i + 1 < singles.size(); i += 2) {
    paths.emplace_back(singles[i], singles[i + 1]);
    for (int v = singles[i]; v <= singles[i + 1]; v += 2) on_path[static_cast<size_t>(v)] = true;
    for (int v = singles[i]; v < singles[i + 1]; v += 2) push_edge(es, v, v + 2, 1);
  }
  for (int v = bottom_slot == 0 ? 1 : 0; v < m; v += 2)
    if (!on_path[static_cast<size_t>(v)]) push_edge(es, v, v, 1);  // unused double

  std::vector<bool> consumed(static_cast<size_t>(m), false);
  auto pair_up = [&](const std::vector<int>& us, size_t from, size_t to) {
    for (size_t i = from; i + 1 < to; i += 2) {
      push_edge(es, us[i], us[i + 1], 2);
      consumed[static_cast<size_t>(us[i])] = consumed[static_cast<size_t>(us[i + 1])] = true;
    }
  };
  auto unders = [&](const std::pair<int, int>& p) {
    std::vector<int> out;
    for (int v = p.first + 1; v < p.second; v += 2) out.push_back(v);
    return out;
  };
  for (size_t i = 0; i < paths.size(); ++i) {
    auto us = unders(paths[i]);
    if (us.size() % 2 == 0) {
      pair_up(us, 0, us.size());
      continue;
    }
    const int left = paths[i].first - 1;
    if (left >= 0 && !consumed[static_cast<size_t>(left)]) {
      push_edge(es, left, us[0], 2);
      consumed[static_cast<size_t>(left)] = consumed[static_cast<size_t>(us[0])] = true;
      pair_up(us, 1, us.size());
      continue;
    }
    const int right = paths[i].second + 1;
    bool next_adjacent_odd = false;
    if (i + 1 < paths.size() && paths[i + 1].first == paths[i].second + 2) {
      auto nus = unders(paths[i + 1]);
      next_adjacent_odd = nus.size() % 2 == 1;
      if (next_adjacent_odd) {
        // both paths odd with a single bottom between them: a triangle on
        // the last under, the bottom between, and the first under of the
        // next path keeps everything 2-regular and nest-free
        push_edge(es, us.back(), right, 1);
        push_edge(es, right, nus[0], 1);
        push_edge(es, us.back(), nus[0], 1);
        consumed[static_cast<size_t>(us.back())] = true;
        consumed[static_cast<size_t>(right)] = true;
        consumed[static_cast<size_t>(nus[0])] = true;
        pair_up(us, 0, us.size() - 1);
        pair_up(nus, 1, nus.size());
        ++i;  // the next path is fully handled
        continue;
      }
    }
    if (right < m && !consumed[static_cast<size_t>(right)]) {
      push_edge(es, us.back(), right, 2);
      consumed[static_cast<size_t>(right)] = consumed[static_cast<size_t>(us.back())] = true;
      pair_up(us, 0, us.size() - 1);
      continue;
    }
    throw std::logic_error("ths1 construction has no rescue vertex");
  }
  for (int v = bottom_slot == 0 ? 0 : 1; v < m; v += 2) {
    bool under = false;
    for (const auto& p : paths) under = under || (p.first < v && v < p.second);
    if (!under && !consumed[static_cast<size_t>(v)]) push_edge(es, v, v, 1);
  }
  return OrderedMultigraph(vertices_of(word), es);
}

OrderedMultigraph build_omr_graph(long long m, long long r) {
  Word w = family_o(m, r);  // validates parameters
  RunLengthWord rl = runs(w);
  auto idx = [&](long long cap) { return (m - cap) / 2; };
  std::vector<GraphEdge> es;
  if (r < 24) {
    for (long long j = 0; j < r; ++j) push_edge(es, j, j, (m - 2 * j) / 2);
    return OrderedMultigraph(vertices_of(rl), es);
  }
  const long long d = r % 8;
  const long long k = (r - d) / 8;
  for (long long j = 0; j < d; ++j) push_edge(es, j, j, (m - 2 * j) / 2);
  const long long mp = m - 2 * d;   // largest capacity of the main part
  const long long rp = r - d;       // 8k runs remain
  for (long long j = 0; j < k; ++j) {
    const long long i = mp - 16 * j;
    push_edge(es, idx(i), idx(i - 4), 8);
    push_edge(es, idx(i), idx(i - 8), i - 8);
    push_edge(es, idx(i - 4), idx(i - 12), i - 12);
  }
  push_edge(es, idx(mp - 2), idx(mp - 10), mp - 10);
  push_edge(es, idx(mp - 2 * rp + 10), idx(mp - 2 * rp + 2), mp - 2 * rp + 2);
  for (long long j = 0; j + 1 < k; ++j) {
    const long long i = mp - 6 - 16 * j;
    push_edge(es, idx(i), idx(i - 8), i - 8);
    push_edge(es, idx(i), idx(i - 12), 8);
    push_edge(es, idx(i - 12), idx(i - 20), i - 20);
  }
  return OrderedMultigraph(vertices_of(rl), es);
}

Twins build_omr_twins(long long m, long long r) {
  OrderedMultigraph g = build_omr_graph(m, r);
  if (find_nest(g)) throw std::logic_error("O(m,r) construction produced a nest");
  RunLengthWord rl = runs(family_o(m, r));
  Twins tw = twins_from_graph(g, rl);
  const long long deficit = static_cast<long long>(rl.total_length()) - g.total_degree();
  if (deficit > 23) throw std::logic_error("O(m,r) construction exceeded the deficit bound");
  return tw;
}

long long lower_bound_g(const RunLengthWord& word) {
  require_binary(word, "lower_bound_g");
  auto len = run_lengths(word);
  if (len.empty()) throw std::invalid_argument("lower_bound_g requires at least one run");
  long long delta = -1;
  for (size_t i = 1; i < len.size(); ++i) {
    if (len[i - 1] <= len[i])
      throw std::invalid_argument("lower_bound_g requires strictly decreasing run lengths");
    delta = delta < 0 ? len[i - 1] - len[i] : std::min(delta, len[i - 1] - len[i]);
  }
  const long long r = static_cast<long long>(len.size());
  return delta < 0 ? r : std::min(r, delta);
}

namespace {

Certificate no_certificate(NoReason reason, std::string rule) {
  Certificate cert;
  cert.verdict = Verdict::No;
  cert.reason = reason;
  cert.rule = std::move(rule);
  return cert;
}

// separated-ones reading of a binary word with `one` as the separated
// letter: the zero-block lengths around the 2m ones
std::optional<SeparatedOnesInstance> separated_ones_view(const Word& word, uint8_t one) {
  SeparatedOnesInstance inst;
  long long zeros = 0, ones = 0;
  for (uint8_t s : word.symbols()) {
    if (s == one) {
      inst.a.push_back(zeros);
      zeros = 0;
      ++ones;
    } else {
      ++zeros;
    }
  }
  inst.a.push_back(zeros);
  if (ones < 4 || ones % 2 != 0) return std::nullopt;
  return inst;
}

}  // namespace

Certificate decide_auto(const Word& word, const SolverOptions& options) {
  if (word.size() % 2 != 0) return no_certificate(NoReason::OddLength, "odd-length");
  if (!is_even(word)) return no_certificate(NoReason::NotEven, "not-even");
  RunLengthWord rl = runs(word);
  if (rl.run_count() == 0) {
    Certificate cert;
    cert.verdict = Verdict::Yes;
    cert.witness = OrderedMultigraph({}, {});
    cert.rule = "empty";
    return cert;
  }
  if (is_dull(rl)) {
    Certificate cert;
    cert.verdict = Verdict::Yes;
    cert.witness = loops_graph(rl);
    cert.rule = "dull";
    return cert;
  }
  if (!at_most_two_symbols(rl)) {
    Certificate cert = decide_shuffle_square(word, options);
    cert.rule = "exact-search";
    return cert;
  }
  if (rl.run_count() <= 5) {
    FewRunsVerdict v = classify_few_runs(rl);
    if (v.yes) {
      Certificate cert;
      cert.verdict = Verdict::Yes;
      cert.witness = std::move(v.witness);
      cert.rule = v.rule;
      return cert;
    }
    Certificate cert;
    cert.verdict = Verdict::No;
    cert.rule = v.rule;
    return cert;
  }
  auto by_letter = split_by_letter(rl);
  if (ones_slot_1and2(by_letter) >= 0) {
    // more than five runs, so never the 1001 exception
    Certificate cert = decide_shuffle_square(word, options);
    if (cert.verdict != Verdict::Budget) cert.rule = "cor-1and2";
    return cert;
  }
  if (bottom_slot_ths1(rl) >= 0) {
    if (auto witness = build_ths1_certificate(rl)) {
      Certificate cert;
      cert.verdict = Verdict::Yes;
      cert.witness = std::move(witness);
      cert.rule = "prop-ths1";
      return cert;
    }
    return no_certificate(NoReason::TheoremAbba, "theorem-abba");
  }
  if (rl.run_count() % 2 == 1 && rl.run_count() / 2 <= 40 && theorem_abba_applies(rl))
    return no_certificate(NoReason::TheoremAbba, "theorem-abba");
  if (claim_cl_applies(rl)) return no_certificate(NoReason::ClaimCl, "claim-cl");
  for (uint8_t one : {rl[0].symbol, rl.run_count() > 1 ? rl[1].symbol : rl[0].symbol}) {
    auto inst = separated_ones_view(word, one);
    if (!inst) continue;
    try {
      if (auto sol = first_separated_ones_solution(*inst)) {
        Certificate cert;
        cert.verdict = Verdict::Yes;
        cert.witness = graph_from_twins(canonicalize(sol->twins));
        cert.rule = "prop-only1";
        return cert;
      }
    } catch (const std::invalid_argument&) {
      continue;
    }
    // the corollary's equivalence needs the four ones genuinely separated
    if (inst->m() == 2 && inst->a[0] == 0 && inst->a[1] >= 1 && inst->a[2] >= 1 &&
        inst->a[3] >= 1) {
      if (!check_2cond(inst->a[1], inst->a[2], inst->a[3], inst->a[4])) {
        Certificate cert;
        cert.verdict = Verdict::No;
        cert.rule = "cor-m2a0";
        return cert;
      }
    }
  }
  return decide_shuffle_square(word, options);
}

}  // namespace shufsq
