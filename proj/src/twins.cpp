#include "twins.hpp"

#include <algorithm>

namespace shufsq {

namespace {

// 0 = gap, 1 = X, 2 = Y
std::vector<uint8_t> role_map(const Twins& tw) {
  std::vector<uint8_t> roles(tw.word.size(), 0);
  for (int i : tw.x_support) roles[static_cast<size_t>(i)] = 1;
  for (int j : tw.y_support) roles[static_cast<size_t>(j)] = 2;
  return roles;
}

Twins from_roles(const Word& word, const std::vector<uint8_t>& roles) {
  Twins out;
  out.word = word;
  for (size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == 1) out.x_support.push_back(static_cast<int>(i));
    if (roles[i] == 2) out.y_support.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

std::string Twins::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(v[i] + 1);
    }
    s.push_back('}');
    return s;
  };
  return "X:" + list(x_support) + " Y:" + list(y_support);
}

Word Twins::twin_word() const {
  std::vector<uint8_t> symbols;
  symbols.reserve(x_support.size());
  for (int i : x_support) symbols.push_back(word[static_cast<size_t>(i)]);
  return Word(std::move(symbols), word.alphabet_size());
}

std::string Twins::pretty(bool color) const {
  auto roles = role_map(*this);
  std::string out;
  if (color) {
    for (size_t i = 0; i < word.size(); ++i) {
      char c = static_cast<char>('0' + word[i]);
      if (roles[i] == 1)
        out += "\033[31;4m" + std::string(1, c) + "\033[0m";
      else if (roles[i] == 2)
        out += "\033[34;53m" + std::string(1, c) + "\033[0m";
      else
        out.push_back(c);
    }
    return out;
  }
  out = word.to_dense_string();
  out.push_back('\n');
  for (size_t i = 0; i < word.size(); ++i)
    out.push_back(roles[i] == 1 ? 'X' : roles[i] == 2 ? 'Y' : '.');
  return out;
}

ValidationReport validate(const Twins& tw) {
  const size_t n = tw.word.size();
  if (tw.x_support.size() != tw.y_support.size())
    return {false, "supports differ in length"};
  auto check_support = [&](const std::vector<int>& s, const char* name) -> std::string {
    for (size_t h = 0; h < s.size(); ++h) {
      if (s[h] < 0 || static_cast<size_t>(s[h]) >= n)
        return std::string(name) + " index out of range at h=" + std::to_string(h + 1);
      if (h > 0 && s[h] <= s[h - 1])
        return std::string(name) + " not strictly increasing at h=" + std::to_string(h + 1);
    }
    return {};
  };
  if (auto msg = check_support(tw.x_support, "X"); !msg.empty()) return {false, msg};
  if (auto msg = check_support(tw.y_support, "Y"); !msg.empty()) return {false, msg};
  std::vector<bool> seen(n, false);
  for (int i : tw.x_support) seen[static_cast<size_t>(i)] = true;
  for (size_t h = 0; h < tw.y_support.size(); ++h) {
    if (seen[static_cast<size_t>(tw.y_support[h])])
      return {false, "supports overlap at h=" + std::to_string(h + 1)};
  }
  for (size_t h = 0; h < tw.x_support.size(); ++h) {
    if (tw.word[static_cast<size_t>(tw.x_support[h])] !=
        tw.word[static_cast<size_t>(tw.y_support[h])])
      return {false, "induced subwords differ at h=" + std::to_string(h + 1)};
  }
  return {};
}

bool is_monotone(const Twins& tw) {
  for (size_t h = 0; h < tw.length(); ++h)
    if (tw.x_support[h] >= tw.y_support[h]) return false;
  return true;
}

Twins monotonize(const Twins& tw) {
  Twins out;
  out.word = tw.word;
  out.x_support.reserve(tw.length());
  out.y_support.reserve(tw.length());
  for (size_t h = 0; h < tw.length(); ++h) {
    int i = tw.x_support[h], j = tw.y_support[h];
    out.x_support.push_back(std::min(i, j));
    out.y_support.push_back(std::max(i, j));
  }
  std::sort(out.x_support.begin(), out.x_support.end());
  std::sort(out.y_support.begin(), out.y_support.end());
  return out;
}

Twins rewire(const Twins& tw, size_t g, size_t h) {
  if (g >= h || h >= tw.length()) throw std::invalid_argument("rewire requires g < h < t");
  if (!is_monotone(tw)) throw std::invalid_argument("rewire requires monotone twins");
  const int jg = tw.y_support[g];
  const int ih = tw.x_support[h];
  if (jg >= ih) throw std::invalid_argument("rewire requires y[g] < x[h]");
  if (tw.word[static_cast<size_t>(jg)] != tw.word[static_cast<size_t>(ih)])
    throw std::invalid_argument("rewire requires equal letters at y[g] and x[h]");
  auto roles = role_map(tw);
  for (int p = jg + 1; p < ih; ++p)
    if (roles[static_cast<size_t>(p)] != 0)
      throw std::invalid_argument("rewire requires no support element between y[g] and x[h]");
  roles[static_cast<size_t>(ih)] = 2;
  roles[static_cast<size_t>(jg)] = 1;
  return from_roles(tw.word, roles);
}

Twins shift(const Twins& tw) {
  auto roles = role_map(tw);
  auto rl = runs(tw.word);
  size_t pos = 0;
  for (const Run& r : rl.runs()) {
    // stable-compact support elements to the left of the run
    size_t write = pos;
    for (size_t p = pos; p < pos + static_cast<size_t>(r.length); ++p) {
      if (roles[p] != 0) {
        uint8_t role = roles[p];
        roles[p] = 0;
        roles[write++] = role;
      }
    }
    pos += static_cast<size_t>(r.length);
  }
  return from_roles(tw.word, roles);
}

bool is_canonical(const Twins& tw) {
  if (!is_monotone(tw)) return false;
  auto roles = role_map(tw);
  auto rl = runs(tw.word);
  size_t pos = 0;
  for (const Run& r : rl.runs()) {
    int stage = 1;  // expect X block, then Y block, then gaps
    for (size_t p = pos; p < pos + static_cast<size_t>(r.length); ++p) {
      if (roles[p] == 1) {
        if (stage > 1) return false;
      } else if (roles[p] == 2) {
        if (stage > 2) return false;
        stage = 2;
      } else {
        stage = 3;
      }
    }
    pos += static_cast<size_t>(r.length);
  }
  return true;
}

namespace {

// Smallest applicable (g,h) in lexicographic order, or nullopt.
std::optional<std::pair<size_t, size_t>> first_rewiring(const Twins& tw) {
  auto roles = role_map(tw);
  std::vector<int> prefix_support(tw.word.size() + 1, 0);
  for (size_t p = 0; p < tw.word.size(); ++p)
    prefix_support[p + 1] = prefix_support[p] + (roles[p] != 0 ? 1 : 0);
  for (size_t g = 0; g + 1 < tw.length(); ++g) {
    for (size_t h = g + 1; h < tw.length(); ++h) {
      int jg = tw.y_support[g], ih = tw.x_support[h];
      if (jg >= ih) continue;
      if (tw.word[static_cast<size_t>(jg)] != tw.word[static_cast<size_t>(ih)]) continue;
      if (prefix_support[static_cast<size_t>(ih)] - prefix_support[static_cast<size_t>(jg + 1)] !=
          0)
        continue;
      return std::make_pair(g, h);
    }
  }
  return std::nullopt;
}

}  // namespace

Twins canonicalize(const Twins& tw) {
  if (auto rep = validate(tw); !rep.ok)
    throw std::invalid_argument("canonicalize requires valid twins: " + rep.message);
  Twins cur = tw;
  for (;;) {
    Twins next = monotonize(cur);
    while (auto gh = first_rewiring(next)) next = rewire(next, gh->first, gh->second);
    next = shift(next);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace shufsq
